"""Round durations and execution time."""

from __future__ import annotations

import allure
import pytest

from qccd_router.data.cases.physics_ddt import ROUND_DURATION_CASES, RoundDurationCase
from qccd_router.data.models.physics import PhysicsParams
from qccd_router.data.models.trace import ExecutionTrace, GateRound, ShuttleRound
from qccd_router.physics.timing import annotate_durations, execution_time, round_duration


@allure.suite("Physics")
@allure.sub_suite("Timing")
@pytest.mark.physics
class TestTiming:
    @allure.title("Round duration: {case}")  # type: ignore[misc]
    @pytest.mark.smoke
    @pytest.mark.regression
    @pytest.mark.parametrize("case", ROUND_DURATION_CASES)
    def test_round_duration(self, case: RoundDurationCase, physics: PhysicsParams) -> None:
        assert round_duration(case.round_, physics) == pytest.approx(case.expected_us)

    @allure.title("Execution time sums the rounds")
    @pytest.mark.regression
    def test_execution_time(self, trace: ExecutionTrace, physics: PhysicsParams) -> None:
        # gate rounds of 40 us each around one hop with a single SWAP
        assert execution_time(trace, physics) == pytest.approx(3 * 40.0 + 120.0 + 80.0 + 100.0)

    @allure.title("Durations scale with the parameters")
    @pytest.mark.regression
    def test_custom_parameters(self, trace: ExecutionTrace) -> None:
        params = PhysicsParams(t_2q=10.0, t_swap=1.0, t_shuttle=2.0, t_split_merge=3.0)

        assert execution_time(trace, params) == pytest.approx(3 * 10.0 + 1.0 + 3.0 + 2.0)

    @allure.title("Annotated trace carries every duration")
    @pytest.mark.regression
    def test_annotate(self, trace: ExecutionTrace, physics: PhysicsParams) -> None:
        annotated = annotate_durations(trace, physics)
        shuttle = annotated.rounds[1]
        gates = annotated.rounds[0]

        assert isinstance(shuttle, ShuttleRound)
        assert isinstance(gates, GateRound)
        assert shuttle.duration_us == pytest.approx(300.0)
        assert shuttle.shuttles[0].duration_us == pytest.approx(180.0)
        assert shuttle.shuttles[0].swaps[0].duration_us == pytest.approx(120.0)
        assert [g.duration_us for g in gates.gates] == [40.0, 40.0]
        assert all(r.duration_us is None for r in trace.rounds)
        assert sum(r.duration_us or 0.0 for r in annotated.rounds) == pytest.approx(execution_time(trace, physics))
