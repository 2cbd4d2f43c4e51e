"""Benchmark circuit generators: QFT, complete-graph QAOA, Cuccaro and Draper adders, random layers.

Every generator is a pure function of its arguments; the random family draws from
``numpy.random.default_rng(seed)`` only.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from qccd_router.data.benchmarks import RANDOM_PRESET_LAYERS, RANDOM_PRESET_REPEAT_BIAS, Benchmark
from qccd_router.data.errors import ErrorMessages, InvalidArgumentError
from qccd_router.data.gate_name import GateName
from qccd_router.data.models.circuit import Circuit, Gate
from qccd_router.data.models.core import QubitId

QAOA_GAMMA: float = math.pi / 4
QAOA_BETA: float = math.pi / 8


class _Builder:
    """Appends gates with consecutive ids."""

    def __init__(self, n_qubits: int) -> None:
        self.n_qubits = n_qubits
        self.gates: list[Gate] = []

    def add(self, name: GateName, *qubits: QubitId, param: float | None = None) -> None:
        params = () if param is None else (param,)
        self.gates.append(Gate(len(self.gates), name, tuple(qubits), params))

    def qft(self, register: Sequence[QubitId]) -> None:
        for i, target in enumerate(register):
            self.add(GateName.H, target)
            for k in range(i + 1, len(register)):
                self.add(GateName.CP, register[k], target, param=math.pi / 2 ** (k - i))

    def inverse_qft(self, register: Sequence[QubitId]) -> None:
        for i in reversed(range(len(register))):
            target = register[i]
            for k in reversed(range(i + 1, len(register))):
                self.add(GateName.CP, register[k], target, param=-math.pi / 2 ** (k - i))
            self.add(GateName.H, target)

    def toffoli(self, c1: QubitId, c2: QubitId, target: QubitId) -> None:
        """Standard 6-CX Toffoli decomposition with T gates written as ``rz(+-pi/4)``."""
        t, tdg = math.pi / 4, -math.pi / 4
        self.add(GateName.H, target)
        self.add(GateName.CX, c2, target)
        self.add(GateName.RZ, target, param=tdg)
        self.add(GateName.CX, c1, target)
        self.add(GateName.RZ, target, param=t)
        self.add(GateName.CX, c2, target)
        self.add(GateName.RZ, target, param=tdg)
        self.add(GateName.CX, c1, target)
        self.add(GateName.RZ, c2, param=t)
        self.add(GateName.RZ, target, param=t)
        self.add(GateName.H, target)
        self.add(GateName.CX, c1, c2)
        self.add(GateName.RZ, c1, param=t)
        self.add(GateName.RZ, c2, param=tdg)
        self.add(GateName.CX, c1, c2)

    def build(self) -> Circuit:
        return Circuit(gates=tuple(self.gates), n_qubits=self.n_qubits)


def _check_min_qubits(n: int, minimum: int) -> None:
    if n < minimum:
        raise InvalidArgumentError(ErrorMessages.at_least("n", minimum, n))


def _check_even(n: int) -> None:
    if n % 2:
        raise InvalidArgumentError(ErrorMessages.must_be_even("n", n))


def generate_qft(n: int) -> Circuit:
    """Textbook QFT without the final qubit reversal: ``n(n-1)/2`` controlled phases, depth ``2n - 3``."""
    _check_min_qubits(n, 2)
    builder = _Builder(n)
    builder.qft(range(n))
    return builder.build()


def round_robin_matchings(n: int) -> list[list[tuple[QubitId, QubitId]]]:
    """Circle-method schedule of all unordered pairs: ``n - 1`` perfect matchings (``n`` rounds when odd)."""
    players: list[QubitId | None] = list(range(n))
    if n % 2:
        players.append(None)
    size = len(players)
    rounds: list[list[tuple[QubitId, QubitId]]] = []
    for _ in range(size - 1):
        pairs: list[tuple[QubitId, QubitId]] = []
        for k in range(size // 2):
            a, b = players[k], players[size - 1 - k]
            if a is not None and b is not None:
                pairs.append((min(a, b), max(a, b)))
        rounds.append(sorted(pairs))
        players = [players[0], players[-1], *players[1:-1]]
    return rounds


def generate_qaoa_complete(n: int) -> Circuit:
    """One QAOA layer on the complete graph ``K_n``.

    Cost terms are ``cp`` interactions scheduled round-robin, so the two-qubit depth is ``n - 1``
    for even ``n``. The mixer is ``h rz h`` per qubit.
    """
    _check_min_qubits(n, 2)
    builder = _Builder(n)
    for q in range(n):
        builder.add(GateName.H, q)
    for matching in round_robin_matchings(n):
        for a, b in matching:
            builder.add(GateName.CP, a, b, param=2 * QAOA_GAMMA)
    for q in range(n):
        builder.add(GateName.H, q)
        builder.add(GateName.RZ, q, param=2 * QAOA_BETA)
        builder.add(GateName.H, q)
    return builder.build()


def generate_cuccaro(n: int) -> Circuit:
    """Cuccaro ripple-carry adder on ``n`` qubits.

    Layout: carry-in ``0``, then ``b_i = 1 + 2i`` and ``a_i = 2 + 2i`` for ``m = (n - 2) / 2`` bits,
    carry-out ``n - 1``. Two-qubit count is ``16m + 1``.
    """
    _check_even(n)
    _check_min_qubits(n, 4)
    m = (n - 2) // 2
    carry_in, carry_out = 0, n - 1

    def b(i: int) -> QubitId:
        return 1 + 2 * i

    def a(i: int) -> QubitId:
        return 2 + 2 * i

    builder = _Builder(n)

    def maj(c: QubitId, bq: QubitId, aq: QubitId) -> None:
        builder.add(GateName.CX, aq, bq)
        builder.add(GateName.CX, aq, c)
        builder.toffoli(c, bq, aq)

    def uma(c: QubitId, bq: QubitId, aq: QubitId) -> None:
        builder.toffoli(c, bq, aq)
        builder.add(GateName.CX, aq, c)
        builder.add(GateName.CX, c, bq)

    maj(carry_in, b(0), a(0))
    for i in range(1, m):
        maj(a(i - 1), b(i), a(i))
    builder.add(GateName.CX, a(m - 1), carry_out)
    for i in reversed(range(1, m)):
        uma(a(i - 1), b(i), a(i))
    uma(carry_in, b(0), a(0))
    return builder.build()


def generate_draper(n: int) -> Circuit:
    """Draper QFT adder ``b += a`` on two ``n/2``-qubit registers (``a = 0..m-1``, ``b = m..n-1``)."""
    _check_even(n)
    _check_min_qubits(n, 4)
    m = n // 2
    a_reg = list(range(m))
    b_reg = list(range(m, n))
    builder = _Builder(n)
    builder.qft(b_reg)
    for j, target in enumerate(b_reg):
        for i in range(j + 1):
            builder.add(GateName.CP, a_reg[i], target, param=math.pi / 2 ** (j - i))
    builder.inverse_qft(b_reg)
    return builder.build()


def _random_matching(qubits: list[QubitId], rng: np.random.Generator) -> list[tuple[QubitId, QubitId]]:
    order = rng.permutation(len(qubits))
    shuffled = [qubits[i] for i in order]
    return [(min(x, y), max(x, y)) for x, y in zip(shuffled[::2], shuffled[1::2], strict=True)]


def generate_random(n: int, layers: int, repeat_bias: float, seed: int) -> Circuit:
    """Layered random circuit: every layer is a perfect matching of ``cx`` gates.

    Between layers a deterministic share ``1 - repeat_bias`` of the pairs breaks (an error-diffusion
    accumulator turns the fraction into whole pairs; a lone broken pair waits for the next layer).
    The qubits of broken pairs are re-matched uniformly among matchings that give every one of them
    a new partner; which pairs break is drawn from the seeded generator.
    """
    _check_even(n)
    _check_min_qubits(n, 2)
    if layers < 0:
        raise InvalidArgumentError(ErrorMessages.at_least("layers", 0, layers))
    if not 0.0 <= repeat_bias <= 1.0:
        raise InvalidArgumentError(f"'repeat_bias' must lie in [0, 1], got {repeat_bias}")

    rng = np.random.default_rng(seed)
    half = n // 2
    builder = _Builder(n)
    pairs: list[tuple[QubitId, QubitId]] = []
    pending = 0.0
    for layer in range(layers):
        if layer == 0:
            pairs = sorted(_random_matching(list(range(n)), rng))
        else:
            pending += (1.0 - repeat_bias) * half
            breaks = min(int(pending + 1e-9), half)
            if breaks >= 2:
                pending -= breaks
                pairs = _rematch(pairs, breaks, rng)
        for x, y in pairs:
            builder.add(GateName.CX, x, y)
    return builder.build()


def _rematch(
    pairs: list[tuple[QubitId, QubitId]], breaks: int, rng: np.random.Generator
) -> list[tuple[QubitId, QubitId]]:
    chosen = {int(i) for i in rng.choice(len(pairs), size=breaks, replace=False)}
    kept = [p for i, p in enumerate(pairs) if i not in chosen]
    broken = [pairs[i] for i in sorted(chosen)]
    old = set(broken)
    loose = sorted(q for pair in broken for q in pair)
    while True:
        fresh = _random_matching(loose, rng)
        if old.isdisjoint(fresh):
            return sorted(kept + fresh)


def generate_benchmark(name: Benchmark | str, n: int, seed: int = 0) -> Circuit:
    """Build a named benchmark; the random presets use their frozen repeat bias."""
    try:
        benchmark = Benchmark(name)
    except ValueError:
        raise InvalidArgumentError(f"Unknown benchmark '{name}'") from None
    match benchmark:
        case Benchmark.QFT:
            return generate_qft(n)
        case Benchmark.QAOA:
            return generate_qaoa_complete(n)
        case Benchmark.CUCCARO:
            return generate_cuccaro(n)
        case Benchmark.DRAPER:
            return generate_draper(n)
        case Benchmark.RND10 | Benchmark.RND80:
            return generate_random(n, RANDOM_PRESET_LAYERS, RANDOM_PRESET_REPEAT_BIAS[benchmark], seed)
