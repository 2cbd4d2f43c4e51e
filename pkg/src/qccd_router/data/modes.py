"""Placement strategies, routing modes and trap-selection outcomes."""

from enum import StrEnum


class PlacementStrategy(StrEnum):
    SEQUENTIAL = "sequential"
    GREEDY = "greedy"


class RoutingMode(StrEnum):
    PARALLEL = "parallel"
    SEQUENTIAL = "sequential"


class DeferReason(StrEnum):
    THRESHOLD = "threshold"
    BUSY_TRAP = "busy_trap"
    INFEASIBLE = "infeasible"
