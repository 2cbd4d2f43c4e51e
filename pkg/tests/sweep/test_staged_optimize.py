"""Staged weight optimisation on small benches."""

from __future__ import annotations

from pathlib import Path

import allure
import pytest

from qccd_router.circuit.gate_dag import build_gate_dag
from qccd_router.circuit.generators import generate_qft
from qccd_router.cli.reports import write_evaluations
from qccd_router.data.cases.circuit_ddt import cx
from qccd_router.data.models.scoring import ScoreWeights
from qccd_router.data.models.sweep import STAGE_PARAMETERS, EvaluationRecord, StagePlan
from qccd_router.data.stages import SweepStage
from qccd_router.sweep.stages import SweepBench, _retain, evaluate, run_stage, staged_optimize
from qccd_router.topology.builders import build_linear

COARSE_GRIDS = {
    "lambda_swap": [1.0, 33.0, 65.0],
    "alpha_shuttle": [30.0, 105.0, 180.0],
    "threshold": [-350.0, -205.0, -60.0],
    "gamma_parallel": [1.0, 10.0, 20.0],
    "beta_future": [1.0, 10.0, 20.0],
    "sigma_capacity": [1.0, 10.0, 20.0],
}
SINGLETON_GRIDS = {name: [-350.0] if name == "threshold" else [1.0] for name in COARSE_GRIDS}


@pytest.fixture(scope="module")
def qft_bench() -> SweepBench:
    return SweepBench(dag=build_gate_dag(generate_qft(8)), machine=build_linear(4, 3), seed=11)


@pytest.fixture(scope="module")
def coarse_plan() -> StagePlan:
    return StagePlan(grids=COARSE_GRIDS, retain_k=2)


@allure.suite("Sweep")
@allure.sub_suite("Staged optimisation")
@pytest.mark.sweep
class TestStagedOptimize:
    @allure.title("Single point evaluation")
    @pytest.mark.smoke
    @pytest.mark.regression
    def test_evaluate(self, qft_bench: SweepBench) -> None:
        record = evaluate(qft_bench, ScoreWeights(), SweepStage.THRESHOLD)

        assert record.error is None
        assert record.metrics is not None
        assert 0.0 < record.fidelity <= 1.0
        assert record.stage is SweepStage.THRESHOLD

    @allure.title("Best fidelity never drops from stage to stage")
    @pytest.mark.regression
    def test_monotone(self, qft_bench: SweepBench, coarse_plan: StagePlan) -> None:
        result = staged_optimize(coarse_plan, qft_bench, workers=1)
        best = [summary.best_fidelity for summary in result.stages]

        assert [s.stage for s in result.stages] == list(coarse_plan.stage_order)
        assert best == sorted(best)
        assert best[0] >= result.baseline.fidelity
        assert result.best.fidelity == best[-1]

    @allure.title("Each stage evaluates carried configurations times its grid")
    @pytest.mark.regression
    def test_evaluation_count(self, qft_bench: SweepBench, coarse_plan: StagePlan) -> None:
        result = staged_optimize(coarse_plan, qft_bench, workers=1)

        carried = 1
        for summary in result.stages:
            grid = len(coarse_plan.stage_grid(summary.stage))
            assert summary.evaluations == carried * grid
            assert len(summary.retained) <= coarse_plan.retain_k
            carried = len(summary.retained)
        assert len(result.evaluations) == sum(s.evaluations for s in result.stages)

    @allure.title("Singleton grids return the base configuration")
    @pytest.mark.regression
    def test_singleton_grids(self, qft_bench: SweepBench) -> None:
        plan = StagePlan(grids=SINGLETON_GRIDS, retain_k=3)

        result = staged_optimize(plan, qft_bench, workers=1)

        assert result.best.weights == plan.base
        assert all(summary.evaluations == 1 for summary in result.stages)
        assert all(summary.no_impact for summary in result.stages)
        assert result.best.fidelity == result.baseline.fidelity

    @allure.title("Equal seeds give byte-identical evaluation logs")
    @pytest.mark.regression
    def test_deterministic(self, qft_bench: SweepBench, coarse_plan: StagePlan, tmp_path: Path) -> None:
        first = write_evaluations(tmp_path / "first", staged_optimize(coarse_plan, qft_bench, workers=1))
        second = write_evaluations(tmp_path / "second", staged_optimize(coarse_plan, qft_bench, workers=1))

        assert first.read_bytes() == second.read_bytes()

    @allure.title("Failing points are recorded with zero fidelity")
    @pytest.mark.regression
    def test_failing_bench(self) -> None:
        bench = SweepBench(dag=build_gate_dag([cx(0, 0, 2)], n_qubits=4), machine=build_linear(2, 2))
        plan = StagePlan(grids=SINGLETON_GRIDS, retain_k=1)

        result = staged_optimize(plan, bench, workers=1)

        assert result.baseline.error is not None
        assert all(r.fidelity == 0.0 and r.metrics is None for r in result.evaluations)
        assert result.best.error is not None

    @allure.title("Stage parameters map onto weight fields")
    @pytest.mark.regression
    def test_stage_parameters(self) -> None:
        for names in STAGE_PARAMETERS.values():
            assert all(name in ScoreWeights.model_fields for name in names)

    @allure.title("One stage keeps at most retain_k configurations")
    @pytest.mark.regression
    def test_run_stage(self, qft_bench: SweepBench, coarse_plan: StagePlan) -> None:
        records, retained = run_stage(SweepStage.THRESHOLD, [ScoreWeights()], coarse_plan, qft_bench)

        assert [r.weights.threshold for r in records] == COARSE_GRIDS["threshold"]
        assert 1 <= len(retained) <= coarse_plan.retain_k
        best = min(records, key=lambda r: r.rank_key())
        assert retained[0] == best.weights

    @allure.title("A stage without carried configurations is rejected")
    @pytest.mark.regression
    def test_run_stage_needs_carried(self, qft_bench: SweepBench, coarse_plan: StagePlan) -> None:
        with pytest.raises(ValueError, match="at least one carried configuration"):
            run_stage(SweepStage.THRESHOLD, [], coarse_plan, qft_bench)

    @allure.title("A stronger incumbent leads the retained configurations")
    @pytest.mark.regression
    def test_retain_incumbent_first(self, qft_bench: SweepBench) -> None:
        incumbent = evaluate(qft_bench, ScoreWeights(), SweepStage.THRESHOLD)
        failed = [
            EvaluationRecord(stage=SweepStage.PARALLELISM, weights=ScoreWeights(gamma_parallel=g), error="routing failed")
            for g in (5.0, 9.0)
        ]

        retained = _retain(failed, 2, incumbent)

        assert incumbent.fidelity > 0.0
        assert retained == [incumbent.weights, ScoreWeights(gamma_parallel=5.0)]
