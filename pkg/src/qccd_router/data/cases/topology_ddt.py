"""DDT cases for the topology builders and shortest-path queries."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import pytest

from qccd_router.data.cases.core import Case
from qccd_router.data.models.core import TrapPath
from qccd_router.data.models.machine import MachineGraph
from qccd_router.topology.builders import build_grid, build_linear, build_ring


@dataclass
class BuildCase(Case):
    build: Callable[[], MachineGraph]
    traps: int
    junctions: int


@dataclass
class InvalidBuildCase(Case):
    build: Callable[[], MachineGraph]
    message_part: str


@dataclass
class PathsCase(Case):
    machine: Callable[[], MachineGraph]
    source: int
    target: int
    expected: list[TrapPath]


BUILD_CASES = [
    pytest.param(
        BuildCase(title="Linear 8 traps of 6 ions", build=lambda: build_linear(8, 6), traps=8, junctions=7),
        id="linear-8x6",
    ),
    pytest.param(
        BuildCase(title="Linear single trap", build=lambda: build_linear(1, 4), traps=1, junctions=0),
        id="linear-1x4",
    ),
    pytest.param(
        BuildCase(title="Linear 2 traps of 21 ions", build=lambda: build_linear(2, 21), traps=2, junctions=1),
        id="linear-2x21",
    ),
    pytest.param(
        BuildCase(title="Ring 8 traps of 6 ions", build=lambda: build_ring(8, 6), traps=8, junctions=8),
        id="ring-8x6",
    ),
    pytest.param(
        BuildCase(title="Ring triangle", build=lambda: build_ring(3, 1), traps=3, junctions=3),
        id="ring-3x1",
    ),
    pytest.param(
        BuildCase(title="Grid 2x4 of 6 ions", build=lambda: build_grid(2, 4, 6), traps=8, junctions=10),
        id="grid-2x4x6",
    ),
    pytest.param(
        BuildCase(title="Grid unit square", build=lambda: build_grid(2, 2, 1), traps=4, junctions=4),
        id="grid-2x2x1",
    ),
    pytest.param(
        BuildCase(title="Grid 3x3", build=lambda: build_grid(3, 3, 2), traps=9, junctions=12),
        id="grid-3x3x2",
    ),
]

INVALID_BUILD_CASES = [
    pytest.param(
        InvalidBuildCase(title="Linear with zero traps", build=lambda: build_linear(0, 4), message_part="n_traps"),
        id="linear-zero-traps",
    ),
    pytest.param(
        InvalidBuildCase(title="Linear with zero capacity", build=lambda: build_linear(3, 0), message_part="capacity"),
        id="linear-zero-capacity",
    ),
    pytest.param(
        InvalidBuildCase(title="Ring with two traps", build=lambda: build_ring(2, 4), message_part="n_traps"),
        id="ring-two-traps",
    ),
    pytest.param(
        InvalidBuildCase(title="Grid with a single trap", build=lambda: build_grid(1, 1, 4), message_part="rows * cols"),
        id="grid-single-trap",
    ),
    pytest.param(
        InvalidBuildCase(title="Grid with zero columns", build=lambda: build_grid(2, 0, 4), message_part="cols"),
        id="grid-zero-cols",
    ),
]

SHORTEST_PATHS_CASES = [
    pytest.param(
        PathsCase(
            title="Ring antipodal traps have two paths",
            machine=lambda: build_ring(8, 6),
            source=0,
            target=4,
            expected=[(0, 1, 2, 3, 4), (0, 7, 6, 5, 4)],
        ),
        id="ring-antipodal",
    ),
    pytest.param(
        PathsCase(
            title="Linear path is unique",
            machine=lambda: build_linear(8, 6),
            source=0,
            target=3,
            expected=[(0, 1, 2, 3)],
        ),
        id="linear-unique",
    ),
    pytest.param(
        PathsCase(
            title="Grid corner to diagonal neighbour",
            machine=lambda: build_grid(2, 4, 6),
            source=0,
            target=5,
            expected=[(0, 1, 5), (0, 4, 5)],
        ),
        id="grid-diagonal",
    ),
    pytest.param(
        PathsCase(
            title="Same trap is a zero-hop path",
            machine=lambda: build_ring(4, 2),
            source=2,
            target=2,
            expected=[(2,)],
        ),
        id="same-trap",
    ),
    pytest.param(
        PathsCase(
            title="Ring odd cycle has one shortest path",
            machine=lambda: build_ring(5, 2),
            source=0,
            target=2,
            expected=[(0, 1, 2)],
        ),
        id="ring-odd",
    ),
]
