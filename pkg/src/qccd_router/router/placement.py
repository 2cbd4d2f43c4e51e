"""Initial ion placement strategies.

Any object with ``place(dag, machine) -> IonConfiguration`` satisfies :class:`PlacementPolicy`;
the two built-in policies are selected by :class:`PlacementStrategy`.
"""

from __future__ import annotations

from collections import Counter
from typing import Protocol, runtime_checkable

from qccd_router.circuit.gate_dag import GateDag, two_qubit_window
from qccd_router.data.errors import CapacityError, ErrorMessages
from qccd_router.data.models.core import QubitId, TrapId
from qccd_router.data.models.machine import MachineGraph
from qccd_router.data.modes import PlacementStrategy
from qccd_router.router.ion_configuration import IonConfiguration
from qccd_router.topology.paths import hop_distance


@runtime_checkable
class PlacementPolicy(Protocol):
    def place(self, dag: GateDag, machine: MachineGraph) -> IonConfiguration:
        """Return the configuration before the first gate."""
        ...


def _check_fits(n_qubits: int, machine: MachineGraph) -> None:
    if n_qubits > machine.total_capacity:
        raise CapacityError(ErrorMessages.insufficient_capacity(n_qubits, machine.total_capacity))


class SequentialPlacement:
    """Fill traps in id order with qubits in index order."""

    def place(self, dag: GateDag, machine: MachineGraph) -> IonConfiguration:
        _check_fits(dag.n_qubits, machine)
        chains: dict[TrapId, list[QubitId]] = {t: [] for t in machine.trap_ids}
        qubits = iter(range(dag.n_qubits))
        for trap in machine.trap_ids:
            for _ in range(machine.capacity(trap)):
                qubit = next(qubits, None)
                if qubit is None:
                    return IonConfiguration(machine, chains)
                chains[trap].append(qubit)
        return IonConfiguration(machine, chains)


class GreedyPlacement:
    """Co-locate frequent partners of the first two-qubit layer.

    Program edges are weighted by how often a pair interacts and visited heaviest first (first-layer
    pairs before all others). An unplaced endpoint goes to the free trap closest to its placed
    neighbours; a pair with no placed endpoint goes to the first trap with two free slots. Qubits
    without two-qubit gates fill the remaining slots in index order.
    """

    def place(self, dag: GateDag, machine: MachineGraph) -> IonConfiguration:
        _check_fits(dag.n_qubits, machine)
        window = two_qubit_window(g for g in dag.gates)
        first_layer = {tuple(sorted(g.qubits)) for g in (window[0] if window else [])}
        weights: Counter[tuple[QubitId, QubitId]] = Counter(
            (min(g.qubits), max(g.qubits)) for g in dag.gates if g.is_two_qubit
        )
        edges = sorted(weights, key=lambda e: (e not in first_layer, -weights[e], e))

        chains: dict[TrapId, list[QubitId]] = {t: [] for t in machine.trap_ids}
        where: dict[QubitId, TrapId] = {}

        def free(trap: TrapId) -> int:
            return machine.capacity(trap) - len(chains[trap])

        def put(qubit: QubitId, trap: TrapId) -> None:
            chains[trap].append(qubit)
            where[qubit] = trap

        def nearest_free(qubit: QubitId) -> TrapId:
            placed_partners = [where[p] for (a, b) in edges for p in (a, b) if qubit in (a, b) and p != qubit and p in where]
            candidates = [t for t in machine.trap_ids if free(t) > 0]
            return min(
                candidates,
                key=lambda t: (sum(hop_distance(machine, t, s) for s in placed_partners), -free(t), t),
            )

        for a, b in edges:
            if a in where and b in where:
                continue
            if a not in where and b not in where:
                pair_trap = next((t for t in machine.trap_ids if free(t) >= 2), None)
                if pair_trap is not None:
                    put(a, pair_trap)
                    put(b, pair_trap)
                    continue
            for qubit in (a, b):
                if qubit not in where:
                    put(qubit, nearest_free(qubit))

        for qubit in range(dag.n_qubits):
            if qubit not in where:
                put(qubit, next(t for t in machine.trap_ids if free(t) > 0))
        return IonConfiguration(machine, chains)


_POLICIES: dict[PlacementStrategy, PlacementPolicy] = {
    PlacementStrategy.SEQUENTIAL: SequentialPlacement(),
    PlacementStrategy.GREEDY: GreedyPlacement(),
}


def initial_placement(
    dag: GateDag, machine: MachineGraph, strategy: PlacementStrategy = PlacementStrategy.SEQUENTIAL
) -> IonConfiguration:
    """Deterministic placement of all ``dag.n_qubits`` qubits.

    Raises:
        CapacityError: the qubits do not fit the machine.
    """
    return _POLICIES[PlacementStrategy(strategy)].place(dag, machine)
