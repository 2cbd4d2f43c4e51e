"""Sequential staged weight optimisation.

Each stage sweeps its grid over every carried configuration, keeps the best ``retain_k`` and
hands them to the next stage. The best point seen so far always stays in the carried set, so
the best fidelity never drops from one stage to the next.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from qccd_router.circuit.gate_dag import GateDag
from qccd_router.config.env import SWEEP_WORKERS
from qccd_router.data.errors import QccdRouterError
from qccd_router.data.models.machine import MachineGraph
from qccd_router.data.models.physics import PhysicsParams
from qccd_router.data.models.scoring import ScoreWeights
from qccd_router.data.models.sweep import EvaluationRecord, StagePlan, StageSummary, SweepResult
from qccd_router.data.modes import PlacementStrategy
from qccd_router.data.stages import SweepStage
from qccd_router.physics.fidelity import accumulate_fidelity
from qccd_router.router.router import route
from qccd_router.utils.log_utils import get_logger

logger = get_logger(__name__)

NO_IMPACT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class SweepBench:
    """The fixed workload every sweep point is evaluated on."""

    dag: GateDag
    machine: MachineGraph
    physics: PhysicsParams = PhysicsParams()
    placement: PlacementStrategy = PlacementStrategy.SEQUENTIAL
    seed: int = 0


def evaluate(bench: SweepBench, weights: ScoreWeights, stage: SweepStage | None = None) -> EvaluationRecord:
    """Route and simulate one weight configuration.

    Routing failures are recorded with zero fidelity instead of aborting the sweep.
    """
    try:
        trace = route(bench.dag, bench.machine, weights, bench.placement, seed=bench.seed)
        metrics = accumulate_fidelity(trace, bench.physics)
    except QccdRouterError as exc:
        logger.warning("sweep point %s failed: %s", weights.sort_key(), exc)
        return EvaluationRecord(stage=stage, weights=weights, error=str(exc))
    return EvaluationRecord(stage=stage, weights=weights, metrics=metrics)


def _evaluate_task(task: tuple[SweepBench, ScoreWeights, SweepStage]) -> EvaluationRecord:
    return evaluate(*task)


def _evaluate_all(
    bench: SweepBench, points: Sequence[ScoreWeights], stage: SweepStage, workers: int
) -> list[EvaluationRecord]:
    unique = list(dict.fromkeys(points, None))
    tasks = [(bench, weights, stage) for weights in unique]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_evaluate_task, tasks))
    else:
        results = [_evaluate_task(task) for task in tasks]
    by_weights = dict(zip(unique, results, strict=True))
    return [by_weights[weights] for weights in points]


def _retain(records: Sequence[EvaluationRecord], k: int, incumbent: EvaluationRecord | None) -> list[ScoreWeights]:
    """Top *k* weights, best first; an incumbent ranked below them takes the last place."""
    pool = [incumbent, *records] if incumbent is not None else list(records)
    ranked = [r.weights for r in sorted({r.weights: r for r in pool}.values(), key=EvaluationRecord.rank_key)]
    kept = ranked[:k]
    if incumbent is not None and incumbent.weights not in kept:
        kept = [*kept[: k - 1], incumbent.weights]
    return kept


def run_stage(
    stage: SweepStage,
    carried: Sequence[ScoreWeights],
    plan: StagePlan,
    bench: SweepBench,
    *,
    incumbent: EvaluationRecord | None = None,
    workers: int = 1,
) -> tuple[list[EvaluationRecord], list[ScoreWeights]]:
    """Evaluate ``carried x grid`` for *stage*.

    Returns:
        The evaluations in carried-major order and the retained configurations, best first,
        with the incumbent included.
    """
    if not carried:
        raise ValueError("run_stage needs at least one carried configuration")
    points = [
        weights.model_copy(update=update)
        for weights, update in itertools.product(carried, plan.stage_grid(stage))
    ]
    records = _evaluate_all(bench, points, stage, workers)
    best_here = min(records, key=EvaluationRecord.rank_key)
    if incumbent is None or best_here.rank_key() < incumbent.rank_key():
        incumbent = best_here
    return records, _retain(records, plan.retain_k, incumbent)


def staged_optimize(plan: StagePlan, bench: SweepBench, *, workers: int | None = None) -> SweepResult:
    """Run every stage of *plan* in order and return the full evaluation log."""
    workers = SWEEP_WORKERS if workers is None else workers
    baseline = evaluate(bench, plan.base)
    incumbent = baseline
    carried: list[ScoreWeights] = [plan.base]
    evaluations: list[EvaluationRecord] = []
    summaries: list[StageSummary] = []

    for stage in plan.stage_order:
        records, carried = run_stage(stage, carried, plan, bench, incumbent=incumbent, workers=workers)
        evaluations.extend(records)
        stage_best = min(records, key=EvaluationRecord.rank_key)
        if stage_best.rank_key() < incumbent.rank_key():
            incumbent = stage_best
        fidelities = [r.fidelity for r in records]
        summary = StageSummary(
            stage=stage,
            evaluations=len(records),
            retained=carried,
            best_fidelity=incumbent.fidelity,
            no_impact=max(fidelities) - min(fidelities) < NO_IMPACT_TOLERANCE,
        )
        summaries.append(summary)
        logger.info(
            "stage %s: %d points, best fidelity %.6f%s",
            stage,
            len(records),
            incumbent.fidelity,
            " (no impact)" if summary.no_impact else "",
        )

    return SweepResult(
        seed=bench.seed,
        baseline=baseline,
        evaluations=evaluations,
        stages=summaries,
        best=incumbent,
    )
