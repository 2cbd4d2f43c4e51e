"""Machine graph model: capacity-bounded traps linked by two-ended junctions."""

from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx
from pydantic import BaseModel, ConfigDict

from qccd_router.data.errors import ErrorMessages, InvalidArgumentError
from qccd_router.data.models.core import JunctionId, TrapId
from qccd_router.data.topology_kind import ChainEnd, TopologyKind


@dataclass(frozen=True)
class Trap:
    trap_id: TrapId
    capacity: int


@dataclass(frozen=True)
class Junction:
    """A transport link between two traps.

    ``ends[i]`` is the chain end of ``traps[i]`` that faces this junction; an ion leaves
    ``traps[i]`` from that end and enters it at that end.
    """

    junction_id: JunctionId
    traps: tuple[TrapId, TrapId]
    ends: tuple[ChainEnd, ChainEnd]

    def other(self, trap: TrapId) -> TrapId:
        return self.traps[1] if self.traps[0] == trap else self.traps[0]

    def end_of(self, trap: TrapId) -> ChainEnd:
        return self.ends[0] if self.traps[0] == trap else self.ends[1]


@dataclass(frozen=True)
class MachineGraph:
    """Immutable QCCD device description.

    Validation happens at construction: capacities are positive, junctions join two distinct
    existing traps, no trap pair has two junctions and the graph is connected.
    """

    traps: tuple[Trap, ...]
    junctions: tuple[Junction, ...]
    kind: TopologyKind = TopologyKind.CUSTOM
    graph: nx.Graph = field(init=False, repr=False, compare=False)
    _capacity: dict[TrapId, int] = field(init=False, repr=False, compare=False)
    _by_pair: dict[tuple[TrapId, TrapId], Junction] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.traps:
            raise InvalidArgumentError(ErrorMessages.EMPTY_TOPOLOGY)
        capacity: dict[TrapId, int] = {}
        for trap in self.traps:
            if trap.capacity < 1:
                raise InvalidArgumentError(ErrorMessages.positive(f"capacity of trap {trap.trap_id}", trap.capacity))
            if trap.trap_id in capacity:
                raise InvalidArgumentError(f"Duplicate trap id {trap.trap_id}")
            capacity[trap.trap_id] = trap.capacity

        graph = nx.Graph()
        graph.add_nodes_from(sorted(capacity))
        by_pair: dict[tuple[TrapId, TrapId], Junction] = {}
        seen_ids: set[JunctionId] = set()
        for junction in self.junctions:
            a, b = junction.traps
            if a not in capacity or b not in capacity:
                raise InvalidArgumentError(ErrorMessages.unknown_trap(b if a in capacity else a))
            if a == b:
                raise InvalidArgumentError(f"Junction {junction.junction_id} is a self-loop on trap {a}")
            pair = (min(a, b), max(a, b))
            if pair in by_pair:
                raise InvalidArgumentError(f"Traps {pair[0]} and {pair[1]} are joined by more than one junction")
            if junction.junction_id in seen_ids:
                raise InvalidArgumentError(f"Duplicate junction id {junction.junction_id}")
            seen_ids.add(junction.junction_id)
            by_pair[pair] = junction
            graph.add_edge(a, b, junction=junction.junction_id)

        if not nx.is_connected(graph):
            raise InvalidArgumentError(ErrorMessages.DISCONNECTED_TOPOLOGY)

        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "_capacity", capacity)
        object.__setattr__(self, "_by_pair", by_pair)

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    @property
    def trap_ids(self) -> list[TrapId]:
        return sorted(self._capacity)

    @property
    def total_capacity(self) -> int:
        return sum(self._capacity.values())

    def has_trap(self, trap: TrapId) -> bool:
        return trap in self._capacity

    def capacity(self, trap: TrapId) -> int:
        try:
            return self._capacity[trap]
        except KeyError:
            raise InvalidArgumentError(ErrorMessages.unknown_trap(trap)) from None

    def neighbors(self, trap: TrapId) -> list[TrapId]:
        return sorted(self.graph.neighbors(trap))

    def junction_between(self, a: TrapId, b: TrapId) -> Junction:
        try:
            return self._by_pair[(min(a, b), max(a, b))]
        except KeyError:
            raise InvalidArgumentError(f"Traps {a} and {b} are not adjacent") from None

    def exit_end(self, trap: TrapId, toward: TrapId) -> ChainEnd:
        """Chain end of *trap* that faces the junction toward the adjacent trap *toward*."""
        return self.junction_between(trap, toward).end_of(trap)

    # ------------------------------------------------------------------
    # Serialisation
    # ------------------------------------------------------------------

    def to_spec(self) -> MachineSpec:
        return MachineSpec(
            kind=self.kind,
            traps=[TrapSpec(id=t.trap_id, capacity=t.capacity) for t in self.traps],
            junctions=[JunctionSpec(id=j.junction_id, traps=j.traps, ends=j.ends) for j in self.junctions],
        )

    @classmethod
    def from_spec(cls, spec: MachineSpec) -> MachineGraph:
        return cls(
            traps=tuple(Trap(t.id, t.capacity) for t in spec.traps),
            junctions=tuple(Junction(j.id, j.traps, j.ends) for j in spec.junctions),
            kind=spec.kind,
        )


class TrapSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: TrapId
    capacity: int


class JunctionSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: JunctionId
    traps: tuple[TrapId, TrapId]
    ends: tuple[ChainEnd, ChainEnd]


class MachineSpec(BaseModel):
    """Serialisable form of :class:`MachineGraph`, embedded in every trace."""

    model_config = ConfigDict(frozen=True)

    kind: TopologyKind
    traps: list[TrapSpec]
    junctions: list[JunctionSpec]
