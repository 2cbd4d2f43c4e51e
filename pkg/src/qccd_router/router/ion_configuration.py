"""Mutable machine state: one ordered ion chain per trap.

Position ``0`` of a chain is its LEFT end, the last position its RIGHT end.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence

from qccd_router.data.errors import CapacityError, ErrorMessages, InvalidArgumentError
from qccd_router.data.models.core import QubitId, TrapId
from qccd_router.data.models.machine import MachineGraph
from qccd_router.data.topology_kind import ChainEnd


class IonConfiguration:
    """Per-trap ion chains with a reverse ``qubit -> trap`` index."""

    def __init__(self, machine: MachineGraph, chains: Mapping[TrapId, Sequence[QubitId]]) -> None:
        self.machine = machine
        self._chains: dict[TrapId, list[QubitId]] = {t: [] for t in machine.trap_ids}
        self._where: dict[QubitId, TrapId] = {}
        for trap, chain in chains.items():
            if not machine.has_trap(trap):
                raise InvalidArgumentError(ErrorMessages.unknown_trap(trap))
            if len(chain) > machine.capacity(trap):
                raise CapacityError(ErrorMessages.trap_overfull(trap, len(chain), machine.capacity(trap)))
            for qubit in chain:
                if qubit in self._where:
                    raise InvalidArgumentError(f"Qubit {qubit} is placed twice")
                self._where[qubit] = trap
            self._chains[trap] = list(chain)

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    @property
    def qubits(self) -> list[QubitId]:
        return sorted(self._where)

    def chain(self, trap: TrapId) -> tuple[QubitId, ...]:
        return tuple(self._chains[trap])

    def trap_of(self, qubit: QubitId) -> TrapId:
        try:
            return self._where[qubit]
        except KeyError:
            raise InvalidArgumentError(f"Qubit {qubit} is not placed") from None

    def position(self, qubit: QubitId) -> int:
        return self._chains[self.trap_of(qubit)].index(qubit)

    def occupancy(self, trap: TrapId) -> int:
        return len(self._chains[trap])

    def free_slots(self, trap: TrapId) -> int:
        return self.machine.capacity(trap) - len(self._chains[trap])

    def is_full(self, trap: TrapId) -> bool:
        return self.free_slots(trap) <= 0

    def swaps_to_end(self, qubit: QubitId, end: ChainEnd) -> int:
        """Adjacent transpositions needed to bring *qubit* to *end* of its chain."""
        trap = self.trap_of(qubit)
        position = self._chains[trap].index(qubit)
        return position if end is ChainEnd.LEFT else len(self._chains[trap]) - 1 - position

    def swaps_to_exit(self, qubit: QubitId, toward: TrapId) -> int:
        """Ions between *qubit* and the chain end facing the adjacent trap *toward*."""
        return self.swaps_to_end(qubit, self.machine.exit_end(self.trap_of(qubit), toward))

    # ------------------------------------------------------------------
    # Mutation
    # ------------------------------------------------------------------

    def move(self, qubit: QubitId, destination: TrapId) -> int:
        """Shuttle *qubit* one hop to the adjacent *destination*; returns the SWAPs it needed.

        Bubbling the ion to its exit end leaves the other ions in order, so the origin chain is
        simply the chain without the ion. The ion enters at the destination end facing the origin.
        """
        origin = self.trap_of(qubit)
        junction = self.machine.junction_between(origin, destination)
        if self.is_full(destination):
            raise CapacityError(
                ErrorMessages.trap_overfull(destination, self.occupancy(destination) + 1, self.machine.capacity(destination))
            )
        swaps = self.swaps_to_end(qubit, junction.end_of(origin))
        self._chains[origin].remove(qubit)
        self.insert_at_end(qubit, destination, junction.end_of(destination))
        return swaps

    def insert_at_end(self, qubit: QubitId, trap: TrapId, end: ChainEnd) -> None:
        if end is ChainEnd.LEFT:
            self._chains[trap].insert(0, qubit)
        else:
            self._chains[trap].append(qubit)
        self._where[qubit] = trap

    def swap_adjacent(self, trap: TrapId, position: int) -> tuple[QubitId, QubitId]:
        """Exchange the ions at *position* and ``position + 1`` of *trap*; returns the pair."""
        chain = self._chains[trap]
        if not 0 <= position < len(chain) - 1:
            raise InvalidArgumentError(f"No adjacent pair at position {position} in trap {trap}")
        chain[position], chain[position + 1] = chain[position + 1], chain[position]
        return chain[position + 1], chain[position]

    def remove_from_end(self, qubit: QubitId, end: ChainEnd) -> TrapId:
        """Detach *qubit*, which must sit at *end* of its chain; returns its trap."""
        trap = self.trap_of(qubit)
        chain = self._chains[trap]
        index = 0 if end is ChainEnd.LEFT else len(chain) - 1
        if chain[index] != qubit:
            raise InvalidArgumentError(f"Qubit {qubit} is not at the {end} end of trap {trap}")
        chain.pop(index)
        del self._where[qubit]
        return trap

    # ------------------------------------------------------------------
    # Copies and views
    # ------------------------------------------------------------------

    def copy(self) -> IonConfiguration:
        clone = IonConfiguration.__new__(IonConfiguration)
        clone.machine = self.machine
        clone._chains = {t: list(c) for t, c in self._chains.items()}
        clone._where = dict(self._where)
        return clone

    def snapshot(self) -> dict[TrapId, tuple[QubitId, ...]]:
        return {t: tuple(c) for t, c in self._chains.items()}

    def with_qubits_at(self, qubits: Iterable[QubitId], trap: TrapId) -> IonConfiguration:
        """Copy in which *qubits* count as residents of *trap* (appended, capacity unchecked).

        Only used as a scoring view.
        """
        view = self.copy()
        for qubit in qubits:
            if view._where.get(qubit) == trap:
                continue
            view._chains[view._where[qubit]].remove(qubit)
            view._chains[trap].append(qubit)
            view._where[qubit] = trap
        return view

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IonConfiguration):
            return NotImplemented
        return self._chains == other._chains

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"IonConfiguration({self.snapshot()})"
