"""Heuristic shuttle counts against an exhaustive search on a two-trap machine."""

from __future__ import annotations

import allure
import networkx as nx
import pytest

from qccd_router.circuit.gate_dag import GateDag, build_gate_dag
from qccd_router.data.cases.circuit_ddt import cx
from qccd_router.data.cases.generate_circuit_data import generate_two_qubit_circuit
from qccd_router.data.models.circuit import Circuit
from qccd_router.data.models.machine import MachineGraph
from qccd_router.data.models.scoring import ScoreWeights
from qccd_router.router.ion_configuration import IonConfiguration
from qccd_router.router.replay import validate_trace
from qccd_router.router.router import route
from qccd_router.topology.builders import build_linear

N_QUBITS = 4
START = {0: [0, 1, 2], 1: [3]}
SUITE = [
    pytest.param(circuit, id=f"instance-{i:02d}")
    for i, circuit in enumerate(generate_two_qubit_circuit(N_QUBITS, 6) for _ in range(60))
]

State = tuple[tuple[int, ...], frozenset[int]]


def _successors(state: State, dag: GateDag, machine: MachineGraph) -> list[tuple[State, int]]:
    """Single-ion hops cost one shuttle; executing a ready co-located gate is free."""
    traps, done = state
    following: list[tuple[State, int]] = []
    for gate in dag.gates:
        if gate.gate_id in done or not all(p in done for p in dag.predecessors(gate.gate_id)):
            continue
        a, b = gate.qubits
        if traps[a] == traps[b]:
            following.append(((traps, done | {gate.gate_id}), 0))
    occupancy = {t: traps.count(t) for t in machine.trap_ids}
    for qubit, here in enumerate(traps):
        for there in machine.neighbors(here):
            if occupancy[there] < machine.capacity(there):
                moved = traps[:qubit] + (there,) + traps[qubit + 1 :]
                following.append(((moved, done), 1))
    return following


def optimal_shuttles(dag: GateDag, machine: MachineGraph, start: tuple[int, ...]) -> int:
    origin: State = (start, frozenset())
    graph = nx.DiGraph()
    graph.add_node(origin)
    frontier = [origin]
    while frontier:
        state = frontier.pop()
        for following, cost in _successors(state, dag, machine):
            if following not in graph:
                frontier.append(following)
            graph.add_edge(state, following, weight=cost)
    distances = nx.single_source_dijkstra_path_length(graph, origin)
    return int(min(d for (_, done), d in distances.items() if len(done) == len(dag.gates)))


@allure.suite("Router")
@allure.sub_suite("Near optimality")
@pytest.mark.router
@pytest.mark.oracle
class TestNearOptimality:
    @allure.title("Heuristic stays within twice the optimal shuttle count")
    @pytest.mark.slow
    @pytest.mark.regression
    @pytest.mark.parametrize("circuit", SUITE)
    def test_within_twice_optimal(self, circuit: Circuit) -> None:
        machine = build_linear(2, 3)
        dag = build_gate_dag(circuit)
        start = IonConfiguration(machine, START)

        trace = route(dag, machine, ScoreWeights(), placement=start)
        optimum = optimal_shuttles(dag, machine, tuple(start.trap_of(q) for q in range(N_QUBITS)))

        validate_trace(trace)
        assert trace.shuttle_count <= 2 * optimum

    @allure.title("Exhaustive search on a hand-checked instance")
    @pytest.mark.regression
    def test_search_on_known_instance(self) -> None:
        dag = build_gate_dag([cx(0, 0, 3), cx(1, 1, 3), cx(2, 2, 3)], n_qubits=N_QUBITS)

        assert optimal_shuttles(dag, build_linear(2, 3), (0, 0, 0, 1)) == 2

    @allure.title("Suite holds at least fifty instances")
    @pytest.mark.regression
    def test_suite_size(self) -> None:
        assert len(SUITE) >= 50
