"""Bottleneck resolution: free one slot in a full trap by pushing ions toward free capacity."""

from __future__ import annotations

from collections.abc import Collection
from dataclasses import dataclass

from qccd_router.data.models.core import QubitId, TrapId, TrapPath
from qccd_router.router.ion_configuration import IonConfiguration
from qccd_router.scoring.components import Lookahead
from qccd_router.scoring.trap_score import bottleneck_score
from qccd_router.shuttle.shuttle_dag import Move
from qccd_router.topology.paths import paths_to_nearest


@dataclass(frozen=True)
class Resolved:
    """Single-hop relocations in execution order and the configuration after them."""

    moves: tuple[Move, ...]
    move_swaps: tuple[int, ...]
    score: float
    config: IonConfiguration

    @property
    def shuttles(self) -> int:
        return len(self.moves)

    @property
    def swaps(self) -> int:
        return sum(self.move_swaps)


@dataclass(frozen=True)
class Infeasible:
    reason: str


def resolve_bottleneck(
    trap: TrapId,
    config: IonConfiguration,
    lookahead: Lookahead,
    *,
    immovable: Collection[QubitId] = frozenset(),
    blocked: frozenset[TrapId] = frozenset(),
    gate_qubits: tuple[QubitId, ...] = (),
    gate_target: TrapId | None = None,
) -> Resolved | Infeasible:
    """Free one slot in *trap*.

    Every shortest path from *trap* to a nearest trap with free capacity (avoiding *blocked*) is
    walked from its free end backward: in each full trap the movable ion with the best bottleneck
    score moves one hop toward the free end. The best-scoring path wins; ties keep path order.
    Future-operation terms see *gate_qubits* already in *gate_target*.
    """
    paths = paths_to_nearest(config.machine, trap, lambda t: config.free_slots(t) > 0, blocked)
    if not paths:
        return Infeasible(f"no trap with free capacity is reachable from trap {trap}")

    best: Resolved | None = None
    for path in paths:
        attempt = _propagate(path, config, lookahead, immovable, gate_qubits, gate_target)
        if attempt is not None and (best is None or attempt.score > best.score):
            best = attempt
    if best is None:
        return Infeasible(f"every relief path from trap {trap} holds a trap without movable ions")
    return best


def _propagate(
    path: TrapPath,
    config: IonConfiguration,
    lookahead: Lookahead,
    immovable: Collection[QubitId],
    gate_qubits: tuple[QubitId, ...],
    gate_target: TrapId | None,
) -> Resolved | None:
    state = config.copy()
    moves: list[Move] = []
    move_swaps: list[int] = []
    total = 0.0
    for index in range(len(path) - 2, -1, -1):
        origin, destination = path[index], path[index + 1]
        movable = [q for q in state.chain(origin) if q not in immovable]
        if not movable:
            return None
        view = state.with_qubits_at(gate_qubits, gate_target) if gate_target is not None else state
        scored = [
            (bottleneck_score(q, destination, (origin, destination), state, lookahead, fo_config=view), -q)
            for q in movable
        ]
        score, negated = max(scored)
        qubit = -negated
        move_swaps.append(state.move(qubit, destination))
        moves.append(Move(qubit, (origin, destination)))
        total += score
    return Resolved(tuple(moves), tuple(move_swaps), total, state)
