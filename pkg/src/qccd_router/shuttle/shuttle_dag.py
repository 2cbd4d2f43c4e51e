"""Shuttle operations, their conflict DAG and parallel round extraction."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import networkx as nx

from qccd_router.data.errors import ShuttleInvariantError
from qccd_router.data.models.core import JunctionId, QubitId, TrapId, TrapPath
from qccd_router.data.models.machine import MachineGraph
from qccd_router.router.ion_configuration import IonConfiguration


@dataclass(frozen=True)
class ShuttleOp:
    op_id: int
    qubit: QubitId
    from_trap: TrapId
    to_trap: TrapId
    junction: JunctionId

    def conflicts_with(self, other: ShuttleOp) -> bool:
        return self.qubit == other.qubit or self.junction == other.junction


@dataclass(frozen=True)
class Move:
    """A committed transport of one ion along a trap path (endpoints included)."""

    qubit: QubitId
    route: TrapPath


@dataclass(frozen=True)
class ShuttleDag:
    """Ops in recording order with an edge ``a -> b`` for every conflicting pair ``a < b``."""

    ops: tuple[ShuttleOp, ...]
    graph: nx.DiGraph

    @property
    def edges(self) -> list[tuple[int, int]]:
        return sorted(self.graph.edges())

    @property
    def hop_count(self) -> int:
        return len(self.ops)

    def levels(self) -> dict[int, int]:
        """Level of every op: length of the longest conflict chain ending at it."""
        return {
            op_id: index for index, generation in enumerate(nx.topological_generations(self.graph)) for op_id in generation
        }

    @property
    def level_count(self) -> int:
        return max(self.levels().values(), default=-1) + 1


def decompose_moves(moves: Sequence[Move], machine: MachineGraph) -> ShuttleDag:
    """One :class:`ShuttleOp` per hop, numbered in recording order."""
    ops: list[ShuttleOp] = []
    for move in moves:
        for origin, destination in zip(move.route, move.route[1:], strict=False):
            junction = machine.junction_between(origin, destination)
            ops.append(ShuttleOp(len(ops), move.qubit, origin, destination, junction.junction_id))

    graph = nx.DiGraph()
    graph.add_nodes_from(op.op_id for op in ops)
    for later in ops:
        for earlier in ops[: later.op_id]:
            if earlier.conflicts_with(later):
                graph.add_edge(earlier.op_id, later.op_id)
    return ShuttleDag(tuple(ops), graph)


def extract_rounds(dag: ShuttleDag, guard: IonConfiguration | None = None) -> list[list[ShuttleOp]]:
    """Split the ops into rounds of pairwise conflict-free ops.

    Without *guard* round ``k`` holds exactly the ops of DAG level ``k``. With *guard* (the
    configuration before the first op) each op, in recording order, goes to the earliest round at
    or after its level and after its predecessors such that its destination stays within capacity
    at the end of every round from there on; departures of a round count before its arrivals.
    """
    levels = dag.levels()
    if guard is None:
        rounds: list[list[ShuttleOp]] = [[] for _ in range(dag.level_count)]
        for op in dag.ops:
            rounds[levels[op.op_id]].append(op)
        return rounds

    machine = guard.machine
    start = {t: guard.occupancy(t) for t in machine.trap_ids}
    occupancy_after: list[dict[TrapId, int]] = []
    placed: dict[int, int] = {}
    rounds = []
    for op in dag.ops:
        earliest = max([levels[op.op_id], *(placed[p] + 1 for p in dag.graph.predecessors(op.op_id))])
        chosen = earliest
        while chosen < len(rounds) and any(
            after[op.to_trap] + 1 > machine.capacity(op.to_trap) for after in occupancy_after[chosen:]
        ):
            chosen += 1
        if chosen >= len(rounds):
            chosen = max(chosen, len(rounds))
            while len(rounds) <= chosen:
                rounds.append([])
                occupancy_after.append(dict(occupancy_after[-1]) if occupancy_after else dict(start))
            if occupancy_after[chosen][op.to_trap] + 1 > machine.capacity(op.to_trap):
                raise ShuttleInvariantError(
                    f"Op {op.op_id} overfills trap {op.to_trap}: recorded moves are not capacity-valid"
                )
        rounds[chosen].append(op)
        placed[op.op_id] = chosen
        for after in occupancy_after[chosen:]:
            after[op.from_trap] -= 1
            after[op.to_trap] += 1
    return [r for r in rounds if r]
