"""Machine topology kinds and chain-end labels."""

from enum import StrEnum


class TopologyKind(StrEnum):
    LINEAR = "linear"
    RING = "ring"
    GRID = "grid"
    CUSTOM = "custom"


class ChainEnd(StrEnum):
    LEFT = "left"
    RIGHT = "right"
