"""Score weights and the per-trap score breakdown."""

from __future__ import annotations

import math
from dataclasses import dataclass

from pydantic import BaseModel, ConfigDict, Field


class ScoreWeights(BaseModel):
    """Tunable routing weights.

    ``threshold`` may be ``+inf``; routing then commits one two-qubit gate per slice through the
    force-commit escape.
    """

    model_config = ConfigDict(frozen=True, extra="forbid", ser_json_inf_nan="constants")

    alpha_shuttle: float = Field(default=1.0, ge=0)
    lambda_swap: float = Field(default=1.0, ge=0)
    beta_future: float = Field(default=1.0, ge=0)
    sigma_capacity: float = Field(default=1.0, ge=0)
    gamma_parallel: float = Field(default=1.0, ge=0)
    threshold: float = -350.0
    lookahead_layers: int = Field(default=7, ge=1)

    def sequential_ablation(self) -> ScoreWeights:
        """Same weights with ``threshold = +inf`` and ``gamma_parallel = 0``."""
        return self.model_copy(update={"threshold": math.inf, "gamma_parallel": 0.0})

    def scaled(self, factor: float) -> ScoreWeights:
        """The five component weights multiplied by *factor*; threshold and window unchanged."""
        return self.model_copy(
            update={
                "alpha_shuttle": self.alpha_shuttle * factor,
                "lambda_swap": self.lambda_swap * factor,
                "beta_future": self.beta_future * factor,
                "sigma_capacity": self.sigma_capacity * factor,
                "gamma_parallel": self.gamma_parallel * factor,
            }
        )

    def sort_key(self) -> tuple[float, ...]:
        return (
            self.alpha_shuttle,
            self.lambda_swap,
            self.beta_future,
            self.sigma_capacity,
            self.gamma_parallel,
            self.threshold,
            float(self.lookahead_layers),
        )


@dataclass(frozen=True)
class TrapScore:
    shuttle_count: int
    swap_count: int
    future_ops: float
    excess_capacity: int
    parallelism: int
    total: float

    @classmethod
    def combine(
        cls,
        weights: ScoreWeights,
        shuttle_count: int,
        swap_count: int,
        future_ops: float,
        excess_capacity: int,
        parallelism: int,
    ) -> TrapScore:
        total = (
            -weights.alpha_shuttle * shuttle_count
            - weights.lambda_swap * swap_count
            + weights.beta_future * future_ops
            + weights.sigma_capacity * excess_capacity
            + weights.gamma_parallel * parallelism
        )
        return cls(shuttle_count, swap_count, future_ops, excess_capacity, parallelism, total)
