"""Benchmark circuit families and the frozen random-circuit presets."""

from enum import StrEnum


class Benchmark(StrEnum):
    QFT = "qft"
    QAOA = "qaoa"
    CUCCARO = "ca"
    DRAPER = "da"
    RND10 = "rnd10"
    RND80 = "rnd80"


# Probability that a qubit pair survives from one random layer to the next.
# Calibrated with scripts/calibrate_random_presets.py at 40 qubits x 40 layers.
RANDOM_PRESET_REPEAT_BIAS: dict[Benchmark, float] = {
    Benchmark.RND10: 0.925,
    Benchmark.RND80: 0.23,
}

RANDOM_PRESET_LAYERS: int = 40
