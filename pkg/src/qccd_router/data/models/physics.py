"""Physics parameters of the time and fidelity model and the per-run metrics it produces."""

from __future__ import annotations

import math

from pydantic import BaseModel, ConfigDict, Field, computed_field

from qccd_router.data.models.core import TrapId


class PhysicsParams(BaseModel):
    """Durations in microseconds and per-operation error probabilities.

    The defaults are order-of-magnitude placeholders; every field is overridable from the
    ``[physics]`` section of a run config.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    t_1q: float = Field(default=1.0, ge=0)
    t_2q: float = Field(default=40.0, ge=0)
    t_swap: float = Field(default=120.0, ge=0)
    t_shuttle: float = Field(default=100.0, ge=0)
    t_split_merge: float = Field(default=80.0, ge=0)
    e_1q: float = Field(default=1e-5, ge=0, lt=1)
    e_2q_base: float = Field(default=5e-3, ge=0, lt=1)
    heat_per_shuttle: float = Field(default=0.1, ge=0)
    e_heat_coeff: float = Field(default=1e-4, ge=0, lt=1)
    chain_coeff: float = Field(default=1e-4, ge=0, lt=1)
    t2: float = Field(default=2e6, gt=0)

    @classmethod
    def noiseless(cls, **overrides: float) -> PhysicsParams:
        """All error rates zero; durations and T2 keep their defaults unless overridden."""
        base: dict[str, float] = {
            "e_1q": 0.0,
            "e_2q_base": 0.0,
            "heat_per_shuttle": 0.0,
            "e_heat_coeff": 0.0,
            "chain_coeff": 0.0,
        }
        return cls(**(base | overrides))

    def coherence(self, exec_time_us: float) -> float:
        return math.exp(-exec_time_us / self.t2)


class RunMetrics(BaseModel):
    """Counts, modeled time and fidelity of one routed trace."""

    model_config = ConfigDict(frozen=True)

    shuttle_count: int
    swap_count: int
    gate_rounds: int
    rounds: int
    exec_time_us: float
    gate_fidelity_product: float
    coherence_factor: float
    heat: dict[TrapId, float] = Field(default_factory=dict)
    heat_trace: list[dict[TrapId, float]] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def total_fidelity(self) -> float:
        return self.gate_fidelity_product * self.coherence_factor

    @property
    def total_ops(self) -> int:
        """Shuttles plus SWAPs, the transport overhead of the run."""
        return self.shuttle_count + self.swap_count
