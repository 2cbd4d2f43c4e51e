"""Gate names of the supported instruction set."""

from enum import StrEnum


class GateName(StrEnum):
    H = "h"
    X = "x"
    RZ = "rz"
    CX = "cx"
    CP = "cp"
    CZ = "cz"
    SWAP = "swap"


SINGLE_QUBIT_GATES: frozenset[GateName] = frozenset({GateName.H, GateName.X, GateName.RZ})
TWO_QUBIT_GATES: frozenset[GateName] = frozenset({GateName.CX, GateName.CP, GateName.CZ, GateName.SWAP})
PARAMETRIC_GATES: frozenset[GateName] = frozenset({GateName.RZ, GateName.CP})
