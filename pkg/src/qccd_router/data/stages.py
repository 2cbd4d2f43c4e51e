"""Sweep stage names in their default execution order."""

from enum import StrEnum


class SweepStage(StrEnum):
    SWAP_AND_SHUTTLE = "swap_and_shuttle"
    THRESHOLD = "threshold"
    PARALLELISM = "parallelism"
    FUTURE_OPS = "future_ops"
    EXCESS_CAPACITY = "excess_capacity"


DEFAULT_STAGE_ORDER: tuple[SweepStage, ...] = (
    SweepStage.SWAP_AND_SHUTTLE,
    SweepStage.THRESHOLD,
    SweepStage.PARALLELISM,
    SweepStage.FUTURE_OPS,
    SweepStage.EXCESS_CAPACITY,
)
