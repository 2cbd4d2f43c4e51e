"""Individual score components against hand-computed values."""

from __future__ import annotations

import allure
import pytest

from qccd_router.data.cases.circuit_ddt import cx
from qccd_router.data.cases.scoring_ddt import (
    BOTTLENECK_SCORE_CASES,
    EXCESS_CAPACITY_CASES,
    FUTURE_OPS_CASES,
    MOVEMENT_COUNT_CASES,
    PARALLELISM_CASES,
    BottleneckScoreCase,
    ExcessCapacityCase,
    FutureOpsCase,
    MovementCountCase,
    ParallelismCase,
)
from qccd_router.data.models.circuit import Gate
from qccd_router.data.models.core import QubitId
from qccd_router.router.ion_configuration import IonConfiguration
from qccd_router.scoring.components import (
    Lookahead,
    excess_capacity_score,
    future_ops_score,
    movement_counts,
    parallelism_score,
    split_path,
)
from qccd_router.scoring.trap_score import bottleneck_score
from qccd_router.topology.builders import build_custom, build_grid, build_linear


def _window(layers: list[list[tuple[QubitId, QubitId]]]) -> list[list[Gate]]:
    gate_ids = iter(range(1000))
    return [[cx(next(gate_ids), a, b) for a, b in layer] for layer in layers]


@allure.suite("Scoring")
@allure.sub_suite("Components")
@pytest.mark.scoring
class TestComponents:
    @allure.title("Future operations: {case}")  # type: ignore[misc]
    @pytest.mark.smoke
    @pytest.mark.regression
    @pytest.mark.parametrize("case", FUTURE_OPS_CASES)
    def test_future_ops(self, case: FutureOpsCase) -> None:
        config = IonConfiguration(build_linear(2, 4), {0: [0, 2], 1: [1, 3]})
        lookahead = Lookahead.from_layers(_window(case.layers), case.depth)

        assert future_ops_score(case.qubit, case.trap, lookahead, config) == case.expected

    @allure.title("Future operations leave out the gate being placed")
    @pytest.mark.regression
    def test_future_ops_excludes_current_gate(self) -> None:
        config = IonConfiguration(build_linear(2, 4), {0: [0, 2], 1: [1, 3]})
        lookahead = Lookahead.from_layers(_window([[(0, 1)], [(0, 1)]]), 3)

        assert future_ops_score(0, 1, lookahead, config, exclude=0) == 1.0

    @allure.title("Lookahead from remaining gates skips single-qubit gates")
    @pytest.mark.regression
    def test_lookahead_from_gates(self) -> None:
        lookahead = Lookahead.from_gates([cx(0, 0, 1), cx(1, 1, 2)], 3)

        assert lookahead.entries[1] == [(1, 0, 0), (2, 2, 1)]
        assert lookahead.entries[2] == [(2, 1, 1)]

    @allure.title("Movement counts: {case}")  # type: ignore[misc]
    @pytest.mark.smoke
    @pytest.mark.regression
    @pytest.mark.parametrize("case", MOVEMENT_COUNT_CASES)
    def test_movement_counts(self, case: MovementCountCase) -> None:
        links = [(t, t + 1) for t in range(len(case.capacities) - 1)]
        config = IonConfiguration(build_custom(case.capacities, links), case.chains)

        assert movement_counts(case.q1, case.q2, case.path, case.target, config) == (case.shuttles, case.swaps)

    @allure.title("Grid transit through one chain end still costs the trap's occupancy")
    @pytest.mark.regression
    def test_movement_counts_grid_transit(self) -> None:
        machine = build_grid(2, 3, 4)
        config = IonConfiguration(machine, {1: [1, 2], 2: [0], 4: [3]})

        assert machine.exit_end(1, 2) is machine.exit_end(1, 4)
        assert movement_counts(0, 3, (2, 1, 4), 4, config) == (2, 2)

    @allure.title("Path splits at the target trap")
    @pytest.mark.regression
    def test_split_path(self) -> None:
        assert split_path((0, 1, 2, 3), 2) == ((0, 1, 2), (3, 2))
        assert split_path((4,), 4) == ((4,), (4,))

    @allure.title("Excess capacity: {case}")  # type: ignore[misc]
    @pytest.mark.regression
    @pytest.mark.parametrize("case", EXCESS_CAPACITY_CASES)
    def test_excess_capacity(self, case: ExcessCapacityCase) -> None:
        config = IonConfiguration(build_linear(1, case.capacity), {0: list(range(case.occupancy))})

        assert excess_capacity_score(0, config, case.incoming) == case.expected

    @allure.title("Parallelism: {case}")  # type: ignore[misc]
    @pytest.mark.regression
    @pytest.mark.parametrize("case", PARALLELISM_CASES)
    def test_parallelism(self, case: ParallelismCase) -> None:
        assert parallelism_score(case.trap, case.busy) == case.expected

    @allure.title("Bottleneck score: {case}")  # type: ignore[misc]
    @pytest.mark.regression
    @pytest.mark.parametrize("case", BOTTLENECK_SCORE_CASES)
    def test_bottleneck_score(self, case: BottleneckScoreCase) -> None:
        config = IonConfiguration(build_linear(2, 3), case.chains)
        lookahead = Lookahead.from_layers(_window([case.future_pairs]) if case.future_pairs else [], 3)
        origin = config.trap_of(case.qubit)

        assert bottleneck_score(case.qubit, case.destination, (origin, case.destination), config, lookahead) == (
            case.expected
        )
