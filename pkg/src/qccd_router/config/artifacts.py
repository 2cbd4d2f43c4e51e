"""Artifact file names written by the CLI.

Static names are module-level constants; paths inside an output directory are
plain functions, not static methods on a class.

Usage:
    from qccd_router.config import artifacts

    path = artifacts.trace_path(out_dir)
"""

from pathlib import Path

TRACE_FILE: str = "trace.json"
METRICS_FILE: str = "metrics.csv"
SUMMARY_FILE: str = "summary.txt"

EVALUATIONS_FILE: str = "evaluations.csv"
BEST_FILE: str = "best.json"

BENCHMARK_STATS_FILE: str = "benchmark-stats.csv"
COMPARISON_FILE: str = "comparison.csv"

TRACE_VERSION: str = "1.0"


# ---------------------------------------------------------------------------
# Paths inside an output directory (plain functions)
# ---------------------------------------------------------------------------


def trace_path(out_dir: Path) -> Path:
    return out_dir / TRACE_FILE


def metrics_path(out_dir: Path) -> Path:
    return out_dir / METRICS_FILE


def summary_path(out_dir: Path) -> Path:
    return out_dir / SUMMARY_FILE


def evaluations_path(out_dir: Path) -> Path:
    return out_dir / EVALUATIONS_FILE


def best_path(out_dir: Path) -> Path:
    return out_dir / BEST_FILE


def benchmark_stats_path(out_dir: Path) -> Path:
    return out_dir / BENCHMARK_STATS_FILE


def comparison_path(out_dir: Path) -> Path:
    return out_dir / COMPARISON_FILE
