"""Pytest marker tag constants."""

from enum import StrEnum


class Tags(StrEnum):
    SMOKE = "smoke"
    REGRESSION = "regression"
    TOPOLOGY = "topology"
    CIRCUIT = "circuit"
    SCORING = "scoring"
    ROUTER = "router"
    SHUTTLE = "shuttle"
    PHYSICS = "physics"
    SWEEP = "sweep"
    CLI = "cli"
    ORACLE = "oracle"
    SLOW = "slow"
