"""Soft checks of CLI report rows against expected values."""

from __future__ import annotations

import pytest_check as check

from qccd_router.data.models.physics import RunMetrics
from qccd_router.utils.files.csv_utils import CsvRecord
from qccd_router.utils.report.allure_step import step

BENCH_COLUMNS = ("Depth", "2q Gates", "Av. 2q-Gates/TS", "Av. Ion Mov/TS")


@step("Validate benchmark statistics row")
def validate_bench_row(
    row: CsvRecord,
    *,
    depth: int | None = None,
    two_q: int | None = None,
    avg_2q_per_ts: str | None = None,
    avg_ion_mov_per_ts: str | None = None,
) -> None:
    """Soft-check the benchmark-stats columns that are given; ratios compare as 2-decimal text."""
    for column in BENCH_COLUMNS:
        check.is_in(column, row, f"Column '{column}' missing from {sorted(row)}")
    if depth is not None:
        check.equal(row.get("Depth"), str(depth), f"Expected depth {depth}, got {row.get('Depth')}")
    if two_q is not None:
        check.equal(row.get("2q Gates"), str(two_q), f"Expected {two_q} two-qubit gates, got {row.get('2q Gates')}")
    if avg_2q_per_ts is not None:
        check.equal(row.get("Av. 2q-Gates/TS"), avg_2q_per_ts)
    if avg_ion_mov_per_ts is not None:
        check.equal(row.get("Av. Ion Mov/TS"), avg_ion_mov_per_ts)


@step("Validate metrics row")
def validate_metrics_row(row: CsvRecord, expected: RunMetrics) -> None:
    """Soft-check a metrics.csv row against the metrics it was written from."""
    check.equal(int(row["shuttles"]), expected.shuttle_count, "shuttle count")
    check.equal(int(row["swaps"]), expected.swap_count, "swap count")
    check.equal(int(row["depth"]), expected.gate_rounds, "gate rounds")
    check.equal(float(row["exec_time_us"]), expected.exec_time_us, "execution time")
    check.equal(float(row["coherence"]), expected.coherence_factor, "coherence factor")
    check.equal(float(row["fidelity"]), expected.total_fidelity, "total fidelity")
