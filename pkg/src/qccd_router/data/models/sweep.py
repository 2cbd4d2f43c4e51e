"""Staged weight sweep: the plan, each evaluated point and the final result."""

from __future__ import annotations

from typing import Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from qccd_router.data.models.physics import RunMetrics
from qccd_router.data.models.scoring import ScoreWeights
from qccd_router.data.stages import DEFAULT_STAGE_ORDER, SweepStage

GRID_POINTS = 8

# Weight fields swept by each stage; the first stage is a joint 2-D grid.
STAGE_PARAMETERS: dict[SweepStage, tuple[str, ...]] = {
    SweepStage.SWAP_AND_SHUTTLE: ("lambda_swap", "alpha_shuttle"),
    SweepStage.THRESHOLD: ("threshold",),
    SweepStage.PARALLELISM: ("gamma_parallel",),
    SweepStage.FUTURE_OPS: ("beta_future",),
    SweepStage.EXCESS_CAPACITY: ("sigma_capacity",),
}


def linear_grid(start: float, stop: float, points: int = GRID_POINTS) -> list[float]:
    return [float(v) for v in np.linspace(start, stop, points)]


def default_grids() -> dict[str, list[float]]:
    return {
        "lambda_swap": linear_grid(1, 65),
        "alpha_shuttle": linear_grid(30, 180),
        "threshold": linear_grid(-350, -60),
        "gamma_parallel": linear_grid(1, 20),
        "beta_future": linear_grid(1, 20),
        "sigma_capacity": linear_grid(1, 20),
    }


class StagePlan(BaseModel):
    """Stage order, one inclusive grid per swept weight, and how many configs each stage keeps.

    ``base`` holds the weights of the first carried configuration; the sweep starts from it.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    stage_order: tuple[SweepStage, ...] = DEFAULT_STAGE_ORDER
    grids: dict[str, list[float]] = Field(default_factory=default_grids)
    retain_k: int = Field(default=10, ge=1)
    base: ScoreWeights = Field(default_factory=ScoreWeights)

    @field_validator("grids")
    @classmethod
    def _grids_complete(cls, grids: dict[str, list[float]]) -> dict[str, list[float]]:
        merged = default_grids() | grids
        for name, values in merged.items():
            if name not in ScoreWeights.model_fields:
                raise ValueError(f"unknown weight '{name}' in sweep grids")
            if not values:
                raise ValueError(f"grid for '{name}' is empty")
        return merged

    @model_validator(mode="after")
    def _stages_unique(self) -> Self:
        if len(set(self.stage_order)) != len(self.stage_order):
            raise ValueError("stage_order lists a stage twice")
        return self

    def stage_grid(self, stage: SweepStage) -> list[dict[str, float]]:
        """All weight updates of *stage* in row-major order of its parameters."""
        points: list[dict[str, float]] = [{}]
        for name in STAGE_PARAMETERS[stage]:
            points = [point | {name: value} for point in points for value in self.grids[name]]
        return points


class EvaluationRecord(BaseModel):
    """One routed and simulated sweep point; ``metrics`` is ``None`` when routing failed."""

    model_config = ConfigDict(frozen=True)

    stage: SweepStage | None
    weights: ScoreWeights
    metrics: RunMetrics | None = None
    error: str | None = None

    @property
    def fidelity(self) -> float:
        return self.metrics.total_fidelity if self.metrics is not None else 0.0

    def rank_key(self) -> tuple[float, int, tuple[float, ...]]:
        """Higher fidelity first, then fewer transport operations, then lexicographic weights."""
        ops = self.metrics.total_ops if self.metrics is not None else 2**62
        return (-self.fidelity, ops, self.weights.sort_key())


class StageSummary(BaseModel):
    stage: SweepStage
    evaluations: int
    retained: list[ScoreWeights]
    best_fidelity: float
    no_impact: bool


class SweepResult(BaseModel):
    """Every evaluation in stage order, per-stage summaries and the best point seen.

    ``baseline`` is the plan's base configuration evaluated once before the first stage.
    """

    seed: int = 0
    baseline: EvaluationRecord
    evaluations: list[EvaluationRecord]
    stages: list[StageSummary]
    best: EvaluationRecord
