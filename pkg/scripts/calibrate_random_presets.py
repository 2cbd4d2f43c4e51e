"""Re-derive the repeat bias of the random benchmark presets.

Usage (from the repo root)::

    python scripts/calibrate_random_presets.py --target 2.95 --target 30.1

For each target ion-movement-per-time-step value the script sweeps ``repeat_bias`` over a
grid, averages the movement ratio over a few seeds and prints the bias whose average lands
closest. The chosen values are frozen in ``qccd_router.data.benchmarks``.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

# Make sure the package is importable when the script is run from the repo root
# even without ``pip install -e .``.
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from qccd_router.circuit.gate_dag import build_gate_dag
from qccd_router.circuit.generators import generate_random
from qccd_router.circuit.metrics import compute_metrics
from qccd_router.data.benchmarks import RANDOM_PRESET_LAYERS


def mean_movement(n_qubits: int, layers: int, repeat_bias: float, seeds: int) -> float:
    """Average ``Av. Ion Mov/TS`` of random circuits over seeds ``0..seeds-1``."""
    values = [
        compute_metrics(build_gate_dag(generate_random(n_qubits, layers, repeat_bias, seed))).avg_ion_mov_per_ts
        for seed in range(seeds)
    ]
    return float(np.mean(values))


def calibrate(target: float, n_qubits: int, layers: int, seeds: int, points: int) -> tuple[float, float]:
    """Return ``(repeat_bias, achieved)`` closest to *target* on a uniform bias grid."""
    best: tuple[float, float] | None = None
    for bias in np.linspace(0.0, 1.0, points):
        achieved = mean_movement(n_qubits, layers, float(bias), seeds)
        if best is None or abs(achieved - target) < abs(best[1] - target):
            best = (float(bias), achieved)
    assert best is not None
    return best


def main() -> None:
    """Parse CLI arguments and print one calibrated bias per target."""
    parser = argparse.ArgumentParser(description="Calibrate repeat_bias of the random benchmark presets.")
    parser.add_argument(
        "--target",
        type=float,
        action="append",
        required=True,
        help="Target Av. Ion Mov/TS; repeat for several presets.",
    )
    parser.add_argument("--qubits", type=int, default=40, help="Qubits per circuit.")
    parser.add_argument("--layers", type=int, default=RANDOM_PRESET_LAYERS, help="Two-qubit layers per circuit.")
    parser.add_argument("--seeds", type=int, default=5, help="Seeds averaged per grid point.")
    parser.add_argument("--points", type=int, default=81, help="Grid points over [0, 1].")

    args = parser.parse_args()

    for target in args.target:
        bias, achieved = calibrate(target, args.qubits, args.layers, args.seeds, args.points)
        print(f"target {target:.2f}: repeat_bias {bias:.4f} gives {achieved:.2f}")


if __name__ == "__main__":
    main()
