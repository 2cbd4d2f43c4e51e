"""Initial placement strategies."""

from __future__ import annotations

import allure
import pytest

from qccd_router.circuit.gate_dag import build_gate_dag
from qccd_router.circuit.generators import generate_qft
from qccd_router.data.cases.router_ddt import PLACEMENT_CASES, PlacementCase
from qccd_router.data.errors import CapacityError
from qccd_router.data.models.machine import MachineGraph
from qccd_router.data.modes import PlacementStrategy
from qccd_router.router.placement import PlacementPolicy, SequentialPlacement, initial_placement
from qccd_router.topology.builders import build_linear


@allure.suite("Router")
@allure.sub_suite("Placement")
@pytest.mark.router
class TestPlacement:
    @allure.title("Placement: {case}")  # type: ignore[misc]
    @pytest.mark.smoke
    @pytest.mark.regression
    @pytest.mark.parametrize("case", PLACEMENT_CASES)
    def test_placement(self, case: PlacementCase) -> None:
        dag = build_gate_dag(case.gates, n_qubits=case.n_qubits)

        config = initial_placement(dag, case.machine(), case.strategy)

        assert config.snapshot() == case.chains

    @allure.title("Every strategy places each qubit once within capacity")
    @pytest.mark.regression
    @pytest.mark.parametrize("strategy", list(PlacementStrategy))
    def test_complete_placement(self, strategy: PlacementStrategy, ring_8x6: MachineGraph) -> None:
        dag = build_gate_dag(generate_qft(20))

        config = initial_placement(dag, ring_8x6, strategy)

        assert config.qubits == list(range(20))
        assert all(config.occupancy(t) <= ring_8x6.capacity(t) for t in ring_8x6.trap_ids)

    @allure.title("Too many qubits for the machine")
    @pytest.mark.regression
    @pytest.mark.parametrize("strategy", list(PlacementStrategy))
    def test_capacity_error(self, strategy: PlacementStrategy) -> None:
        with pytest.raises(CapacityError, match="10"):
            initial_placement(build_gate_dag(generate_qft(10)), build_linear(2, 4), strategy)

    @allure.title("Built-in policies satisfy the placement protocol")
    @pytest.mark.regression
    def test_protocol(self) -> None:
        assert isinstance(SequentialPlacement(), PlacementPolicy)
