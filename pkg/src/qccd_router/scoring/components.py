"""The five trap-score components: shuttles, SWAPs, future operations, excess capacity, parallelism."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Collection, Iterable, Sequence
from dataclasses import dataclass, field

from qccd_router.circuit.gate_dag import two_qubit_window
from qccd_router.data.models.circuit import Gate
from qccd_router.data.models.core import GateId, QubitId, TrapId, TrapPath
from qccd_router.router.ion_configuration import IonConfiguration


@dataclass(frozen=True)
class Lookahead:
    """The next ``depth`` ASAP layers of unexecuted two-qubit gates, indexed by qubit.

    ``entries[q]`` lists ``(layer, partner, gate_id)`` with ``layer`` counted from 1.
    """

    depth: int
    entries: dict[QubitId, list[tuple[int, QubitId, GateId]]] = field(default_factory=dict)

    @classmethod
    def from_gates(cls, remaining: Iterable[Gate], depth: int) -> Lookahead:
        """Window over the unexecuted gates *remaining*, in program order."""
        return cls.from_layers(two_qubit_window(remaining), depth)

    @classmethod
    def from_layers(cls, layers: Sequence[Sequence[Gate]], depth: int) -> Lookahead:
        entries: dict[QubitId, list[tuple[int, QubitId, GateId]]] = defaultdict(list)
        for index, layer in enumerate(layers[:depth], start=1):
            for gate in layer:
                a, b = gate.qubits
                entries[a].append((index, b, gate.gate_id))
                entries[b].append((index, a, gate.gate_id))
        return cls(depth, dict(entries))


def future_ops_score(
    qubit: QubitId,
    trap: TrapId,
    lookahead: Lookahead,
    config: IonConfiguration,
    exclude: GateId | None = None,
) -> float:
    """``sum (L - i)`` over window gates on *qubit* whose partner currently sits in *trap*."""
    score = 0
    for layer, partner, gate_id in lookahead.entries.get(qubit, ()):
        if gate_id == exclude:
            continue
        if config.trap_of(partner) == trap:
            score += lookahead.depth - layer
    return float(score)


def route_cost(config: IonConfiguration, qubit: QubitId, route: TrapPath) -> tuple[int, int]:
    """``(hops, swaps)`` for *qubit* to travel *route*, which starts at its current trap.

    Origin SWAPs bring the ion to its exit end; each intermediate trap costs its current
    occupancy, also on grid corners where the ion leaves through the end it entered.
    """
    hops = len(route) - 1
    if hops <= 0:
        return 0, 0
    swaps = config.swaps_to_exit(qubit, route[1])
    swaps += sum(config.occupancy(trap) for trap in route[1:-1])
    return hops, swaps


def split_path(path: TrapPath, target: TrapId) -> tuple[TrapPath, TrapPath]:
    """Routes of the two ions of a gate: ``path[0] -> target`` and ``path[-1] -> target``."""
    k = path.index(target)
    return path[: k + 1], tuple(reversed(path[k:]))


def movement_counts(
    q1: QubitId, q2: QubitId, path: TrapPath, target: TrapId, config: IonConfiguration
) -> tuple[int, int]:
    """``(SH, SW)`` to bring both operands of a gate to *target* along *path*.

    *path* runs from the trap of *q1* to the trap of *q2* and contains *target*.
    """
    first, second = split_path(path, target)
    sh1, sw1 = route_cost(config, q1, first)
    sh2, sw2 = route_cost(config, q2, second)
    return sh1 + sh2, sw1 + sw2


def excess_capacity_score(trap: TrapId, config: IonConfiguration, incoming: int) -> int:
    capacity = config.machine.capacity(trap)
    free = capacity - config.occupancy(trap) - incoming
    if free > 0:
        return free
    if free < 0:
        return -capacity
    return 0


def parallelism_score(trap: TrapId, busy_traps: Collection[TrapId]) -> int:
    return -1 if trap in busy_traps else 1
