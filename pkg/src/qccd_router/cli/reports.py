"""Artifact writers for the CLI commands.

Nothing written here depends on wall-clock time, so reruns with the same config and seed
produce identical files.
"""

from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from qccd_router.config import artifacts
from qccd_router.data.models.circuit import CircuitMetrics
from qccd_router.data.models.physics import RunMetrics
from qccd_router.data.models.sweep import EvaluationRecord, SweepResult
from qccd_router.data.models.trace import ExecutionTrace
from qccd_router.data.modes import RoutingMode
from qccd_router.utils.files.csv_utils import CsvValue, write_records

METRICS_COLUMNS = ("seed", "shuttles", "swaps", "depth", "exec_time_us", "coherence", "fidelity")

WEIGHT_COLUMNS = (
    "alpha_shuttle",
    "lambda_swap",
    "beta_future",
    "sigma_capacity",
    "gamma_parallel",
    "threshold",
    "lookahead_layers",
)

EVALUATION_COLUMNS = (
    "seed",
    "stage",
    *WEIGHT_COLUMNS,
    "shuttles",
    "swaps",
    "depth",
    "exec_time_us",
    "coherence",
    "fidelity",
    "error",
)

BENCH_COLUMNS = ("Circuit", "Qubits", "Depth", "2q Gates", "Av. 2q-Gates/TS", "Av. Ion Mov/TS", "seed")

COMPARISON_COLUMNS = (
    "seed",
    "topology",
    "mode",
    "shuttles",
    "swaps",
    "exec_time_us",
    "fidelity",
    "ops_delta",
    "exec_time_delta",
    "fidelity_delta",
)


def _metrics_cells(metrics: RunMetrics | None) -> dict[str, CsvValue]:
    if metrics is None:
        return {}
    return {
        "shuttles": metrics.shuttle_count,
        "swaps": metrics.swap_count,
        "depth": metrics.gate_rounds,
        "exec_time_us": metrics.exec_time_us,
        "coherence": metrics.coherence_factor,
        "fidelity": metrics.total_fidelity,
    }


def write_trace(out_dir: Path, trace: ExecutionTrace) -> Path:
    path = artifacts.trace_path(out_dir)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(trace.model_dump_json(indent=2) + "\n", encoding="utf-8")
    return path


def write_metrics(out_dir: Path, metrics: RunMetrics, seed: int) -> Path:
    return write_records(artifacts.metrics_path(out_dir), METRICS_COLUMNS, [{"seed": seed, **_metrics_cells(metrics)}])


def render_summary(trace: ExecutionTrace, metrics: RunMetrics, label: str) -> str:
    lines = [
        f"run:               {label}",
        f"seed:              {trace.seed}",
        f"qubits:            {trace.n_qubits}",
        f"traps:             {len(trace.machine.traps)} ({trace.machine.kind})",
        f"gates:             {len(trace.gates)}",
        f"rounds:            {metrics.rounds} ({metrics.gate_rounds} gate rounds)",
        f"shuttles:          {metrics.shuttle_count}",
        f"swaps:             {metrics.swap_count}",
        f"exec time (us):    {metrics.exec_time_us:.1f}",
        f"gate fidelity:     {metrics.gate_fidelity_product:.6f}",
        f"coherence factor:  {metrics.coherence_factor:.6f}",
        f"total fidelity:    {metrics.total_fidelity:.6f}",
    ]
    return "\n".join(lines) + "\n"


def write_summary(out_dir: Path, trace: ExecutionTrace, metrics: RunMetrics, label: str) -> Path:
    path = artifacts.summary_path(out_dir)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_summary(trace, metrics, label), encoding="utf-8")
    return path


def _evaluation_row(record: EvaluationRecord, seed: int) -> dict[str, CsvValue]:
    weights: dict[str, Any] = record.weights.model_dump()
    return {
        "seed": seed,
        "stage": str(record.stage) if record.stage is not None else "baseline",
        **{name: weights[name] for name in WEIGHT_COLUMNS},
        **_metrics_cells(record.metrics),
        "error": record.error,
    }


def write_evaluations(out_dir: Path, result: SweepResult) -> Path:
    rows = [_evaluation_row(result.baseline, result.seed)]
    rows.extend(_evaluation_row(record, result.seed) for record in result.evaluations)
    return write_records(artifacts.evaluations_path(out_dir), EVALUATION_COLUMNS, rows)


def best_document(result: SweepResult) -> dict[str, Any]:
    best = result.best
    return {
        "seed": result.seed,
        "weights": best.weights.model_dump(mode="json"),
        "metrics": best.metrics.model_dump(mode="json", exclude={"heat_trace"}) if best.metrics else None,
        "baseline_fidelity": result.baseline.fidelity,
        "stages": [
            {
                "stage": str(summary.stage),
                "evaluations": summary.evaluations,
                "best_fidelity": summary.best_fidelity,
                "no_impact": summary.no_impact,
            }
            for summary in result.stages
        ],
    }


def write_best(out_dir: Path, result: SweepResult) -> Path:
    path = artifacts.best_path(out_dir)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(best_document(result), indent=2) + "\n", encoding="utf-8")
    return path


def bench_row(name: str, n_qubits: int, metrics: CircuitMetrics, seed: int) -> dict[str, CsvValue]:
    return {
        "Circuit": name,
        "Qubits": n_qubits,
        "Depth": metrics.depth,
        "2q Gates": metrics.two_q_count,
        "Av. 2q-Gates/TS": f"{metrics.avg_2q_per_ts:.2f}",
        "Av. Ion Mov/TS": f"{metrics.avg_ion_mov_per_ts:.2f}",
        "seed": seed,
    }


def write_bench(out_dir: Path, rows: Sequence[dict[str, CsvValue]]) -> Path:
    return write_records(artifacts.benchmark_stats_path(out_dir), BENCH_COLUMNS, rows)


@dataclass(frozen=True)
class ComparisonEntry:
    topology: str
    mode: RoutingMode
    metrics: RunMetrics


def _relative(value: float, reference: float) -> float | None:
    return (value - reference) / reference if reference else None


def comparison_rows(entries: Sequence[ComparisonEntry], seed: int) -> list[dict[str, CsvValue]]:
    """One row per entry; parallel rows carry relative deltas against the same topology's ablation."""
    ablation = {e.topology: e.metrics for e in entries if e.mode is RoutingMode.SEQUENTIAL}
    rows: list[dict[str, CsvValue]] = []
    for entry in entries:
        m = entry.metrics
        row: dict[str, CsvValue] = {
            "seed": seed,
            "topology": entry.topology,
            "mode": str(entry.mode),
            "shuttles": m.shuttle_count,
            "swaps": m.swap_count,
            "exec_time_us": m.exec_time_us,
            "fidelity": m.total_fidelity,
        }
        reference = ablation.get(entry.topology)
        if entry.mode is RoutingMode.PARALLEL and reference is not None:
            row["ops_delta"] = _relative(m.total_ops, reference.total_ops)
            row["exec_time_delta"] = _relative(m.exec_time_us, reference.exec_time_us)
            row["fidelity_delta"] = _relative(m.total_fidelity, reference.total_fidelity)
        rows.append(row)
    return rows


def write_comparison(out_dir: Path, entries: Sequence[ComparisonEntry], seed: int) -> Path:
    return write_records(artifacts.comparison_path(out_dir), COMPARISON_COLUMNS, comparison_rows(entries, seed))
