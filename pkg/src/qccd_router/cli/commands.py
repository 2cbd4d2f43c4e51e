"""Command implementations behind the ``qccd-router`` subcommands.

Each command takes validated inputs, writes its artifacts and returns what it produced;
errors propagate to :func:`qccd_router.cli.main.main`, which maps them to exit codes.
"""

from __future__ import annotations

import time
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

from pydantic import ValidationError

from qccd_router.circuit.gate_dag import GateDag, build_gate_dag
from qccd_router.circuit.generators import generate_benchmark
from qccd_router.circuit.metrics import compute_metrics
from qccd_router.cli import reports
from qccd_router.config.run_config import RunConfig, TopologyConfig
from qccd_router.data.errors import TraceValidationError
from qccd_router.data.models.machine import MachineGraph
from qccd_router.data.models.physics import PhysicsParams, RunMetrics
from qccd_router.data.models.scoring import ScoreWeights
from qccd_router.data.models.sweep import SweepResult
from qccd_router.data.models.trace import ExecutionTrace
from qccd_router.data.modes import PlacementStrategy, RoutingMode
from qccd_router.data.schemas.trace_schema import TRACE_SCHEMA
from qccd_router.physics.fidelity import accumulate_fidelity
from qccd_router.physics.timing import annotate_durations
from qccd_router.router.replay import validate_trace
from qccd_router.router.router import route
from qccd_router.sweep.stages import SweepBench, staged_optimize
from qccd_router.utils.files.export_file_utils import read_json_artifact
from qccd_router.utils.log_utils import get_logger
from qccd_router.utils.validation.schema_check import SCHEMA_INVARIANT, ensure_matches_schema

logger = get_logger(__name__)


@dataclass(frozen=True)
class RouteOutcome:
    trace: ExecutionTrace
    metrics: RunMetrics
    paths: tuple[Path, ...]


def _load_dag(config: RunConfig, base_dir: Path | None) -> GateDag:
    return build_gate_dag(config.circuit.load(config.seed, base_dir))


def route_and_measure(
    dag: GateDag,
    machine: MachineGraph,
    weights: ScoreWeights,
    physics: PhysicsParams,
    placement: PlacementStrategy = PlacementStrategy.SEQUENTIAL,
    seed: int = 0,
) -> tuple[ExecutionTrace, RunMetrics]:
    """Route, simulate and annotate durations; the compile wall time is logged, not returned."""
    started = time.perf_counter()
    trace = route(dag, machine, weights, placement, seed=seed)
    logger.info("compiled %d gates in %.3f s", len(dag.gates), time.perf_counter() - started)
    metrics = accumulate_fidelity(trace, physics)
    return annotate_durations(trace, physics), metrics


def cmd_route(config: RunConfig, base_dir: Path | None = None) -> RouteOutcome:
    """Route the configured circuit and write trace.json, metrics.csv and summary.txt."""
    weights = config.require_weights()
    dag = _load_dag(config, base_dir)
    machine = config.topology.build()
    trace, metrics = route_and_measure(dag, machine, weights, config.physics, config.placement, config.seed)

    out_dir = config.output.out_dir
    paths = (
        reports.write_trace(out_dir, trace),
        reports.write_metrics(out_dir, metrics, config.seed),
        reports.write_summary(out_dir, trace, metrics, config.topology.label),
    )
    for path in paths:
        logger.info("wrote %s", path)
    return RouteOutcome(trace, metrics, paths)


def cmd_sweep(config: RunConfig, base_dir: Path | None = None, workers: int | None = None) -> SweepResult:
    """Run the staged sweep and write evaluations.csv and best.json."""
    plan = config.require_sweep()
    bench = SweepBench(
        dag=_load_dag(config, base_dir),
        machine=config.topology.build(),
        physics=config.physics,
        placement=config.placement,
        seed=config.seed,
    )
    result = staged_optimize(plan, bench, workers=workers)
    out_dir = config.output.out_dir
    for path in (reports.write_evaluations(out_dir, result), reports.write_best(out_dir, result)):
        logger.info("wrote %s", path)
    return result


def cmd_bench(circuits: Sequence[str], n_qubits: int, out_dir: Path, seed: int = 0) -> Path:
    """Write benchmark-stats.csv with the structure metrics of each named benchmark."""
    rows = []
    for name in circuits:
        metrics = compute_metrics(build_gate_dag(generate_benchmark(name, n_qubits, seed)))
        rows.append(reports.bench_row(name, n_qubits, metrics, seed))
    path = reports.write_bench(out_dir, rows)
    logger.info("wrote %s", path)
    return path


def load_trace(path: Path) -> ExecutionTrace:
    """Read trace.json, check it against the trace schema and build the model.

    Raises:
        FileNotFoundError:    *path* does not exist.
        TraceValidationError: the document does not match the schema.
    """
    document = read_json_artifact(path)
    ensure_matches_schema(document, TRACE_SCHEMA, str(path))
    try:
        return ExecutionTrace.model_validate(document)
    except ValidationError as exc:
        raise TraceValidationError(SCHEMA_INVARIANT, f"{path}: {exc.error_count()} invalid field(s)") from None


def cmd_validate(path: Path) -> ExecutionTrace:
    """Replay the trace at *path*; returns it when every invariant holds."""
    trace = load_trace(path)
    validate_trace(trace)
    return trace


def cmd_compare(config: RunConfig, topologies: Sequence[str], base_dir: Path | None = None) -> Path:
    """Route on each topology in parallel and sequential-ablation mode; write comparison.csv."""
    weights = config.require_weights()
    dag = _load_dag(config, base_dir)
    entries: list[reports.ComparisonEntry] = []
    for text in topologies:
        topology = TopologyConfig.parse(text)
        machine = topology.build()
        for mode, mode_weights in (
            (RoutingMode.PARALLEL, weights),
            (RoutingMode.SEQUENTIAL, weights.sequential_ablation()),
        ):
            _, metrics = route_and_measure(dag, machine, mode_weights, config.physics, config.placement, config.seed)
            entries.append(reports.ComparisonEntry(topology.label, mode, metrics))
    path = reports.write_comparison(config.output.out_dir, entries, config.seed)
    logger.info("wrote %s", path)
    return path
