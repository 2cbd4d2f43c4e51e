"""Gate dependency DAG with ASAP layering."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import networkx as nx

from qccd_router.data.models.circuit import Circuit, Gate
from qccd_router.data.models.core import GateId, QubitId


@dataclass(frozen=True)
class GateDag:
    """Dependency graph of a circuit.

    Attributes:
        gates:             Gates in program order (``gates[i].gate_id == i``).
        graph:             ``networkx.DiGraph`` over gate ids; an edge joins consecutive gates on a qubit.
        layers:            Strict ASAP layer of every gate.
        two_qubit_layers:  Layer of every gate with single-qubit gates transparent: a two-qubit gate sits
                           one above the latest two-qubit gate on either operand, a single-qubit gate
                           folds into the layer of the latest two-qubit gate on its qubit.
        n_qubits:          Number of dense qubit indices.
    """

    gates: tuple[Gate, ...]
    graph: nx.DiGraph
    layers: dict[GateId, int]
    two_qubit_layers: dict[GateId, int]
    n_qubits: int

    @property
    def depth(self) -> int:
        """Circuit depth in two-qubit layers (single-qubit gates folded)."""
        return max(self.two_qubit_layers.values(), default=-1) + 1

    @property
    def full_depth(self) -> int:
        """Number of strict ASAP layers over all gates."""
        return max(self.layers.values(), default=-1) + 1

    @property
    def edges(self) -> list[tuple[GateId, GateId]]:
        return sorted(self.graph.edges())

    def gate(self, gate_id: GateId) -> Gate:
        return self.gates[gate_id]

    def predecessors(self, gate_id: GateId) -> list[GateId]:
        return sorted(self.graph.predecessors(gate_id))

    def successors(self, gate_id: GateId) -> list[GateId]:
        return sorted(self.graph.successors(gate_id))

    def sources(self) -> list[GateId]:
        return [g.gate_id for g in self.gates if self.graph.in_degree(g.gate_id) == 0]

    def qubit_chain(self, qubit: QubitId) -> list[GateId]:
        return [g.gate_id for g in self.gates if qubit in g.qubits]


def build_gate_dag(gates: Sequence[Gate] | Circuit, n_qubits: int | None = None) -> GateDag:
    """Build the dependency DAG of *gates* (program order).

    Gate ids are renumbered densely in program order when they are not already ``0..n-1``.
    """
    if isinstance(gates, Circuit):
        n_qubits = gates.n_qubits if n_qubits is None else n_qubits
        gates = gates.gates
    ordered = _renumbered(gates)
    if n_qubits is None:
        n_qubits = max((q for g in ordered for q in g.qubits), default=-1) + 1

    graph = nx.DiGraph()
    graph.add_nodes_from(g.gate_id for g in ordered)
    previous: dict[QubitId, GateId] = {}
    for gate in ordered:
        for qubit in gate.qubits:
            if qubit in previous:
                graph.add_edge(previous[qubit], gate.gate_id)
            previous[qubit] = gate.gate_id

    layers: dict[GateId, int] = {}
    for index, generation in enumerate(nx.topological_generations(graph)):
        for gate_id in generation:
            layers[gate_id] = index

    return GateDag(
        gates=ordered,
        graph=graph,
        layers=layers,
        two_qubit_layers=_two_qubit_layers(ordered),
        n_qubits=n_qubits,
    )


def two_qubit_window(gates: Iterable[Gate]) -> list[list[Gate]]:
    """ASAP layers of the two-qubit gates among *gates* (program order), single-qubit gates ignored.

    Used for the lookahead over the unexecuted remainder of a circuit.
    """
    last: dict[QubitId, int] = {}
    window: list[list[Gate]] = []
    for gate in gates:
        if not gate.is_two_qubit:
            continue
        a, b = gate.qubits
        layer = max(last.get(a, -1), last.get(b, -1)) + 1
        last[a] = last[b] = layer
        if layer == len(window):
            window.append([])
        window[layer].append(gate)
    return window


def _two_qubit_layers(gates: Sequence[Gate]) -> dict[GateId, int]:
    last: dict[QubitId, int] = {}
    layers: dict[GateId, int] = {}
    for gate in gates:
        if gate.is_two_qubit:
            a, b = gate.qubits
            layer = max(last.get(a, -1), last.get(b, -1)) + 1
            last[a] = last[b] = layer
        else:
            layer = max(last.get(gate.qubits[0], 0), 0)
        layers[gate.gate_id] = layer
    return layers


def _renumbered(gates: Sequence[Gate]) -> tuple[Gate, ...]:
    if all(g.gate_id == i for i, g in enumerate(gates)):
        return tuple(gates)
    return tuple(Gate(i, g.name, g.qubits, g.params) for i, g in enumerate(gates))
