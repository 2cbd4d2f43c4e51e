"""DDT cases for hop decomposition, round extraction and SWAP expansion."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import pytest

from qccd_router.data.cases.core import Case
from qccd_router.data.models.core import QubitId, TrapId
from qccd_router.data.models.machine import MachineGraph
from qccd_router.shuttle.shuttle_dag import Move
from qccd_router.topology.builders import build_custom, build_linear, build_ring


@dataclass
class DecomposeCase(Case):
    machine: Callable[[], MachineGraph]
    moves: list[Move]
    hops: list[tuple[QubitId, TrapId, TrapId]]
    edges: list[tuple[int, int]]
    level_count: int


@dataclass
class ExtractCase(Case):
    """``guarded`` rounds use ``chains`` as the configuration before the first op."""

    machine: Callable[[], MachineGraph]
    chains: dict[TrapId, list[QubitId]]
    moves: list[Move]
    level_rounds: list[list[int]]
    guarded_rounds: list[list[int]]


@dataclass
class ExpandCase(Case):
    machine: Callable[[], MachineGraph]
    chains: dict[TrapId, list[QubitId]]
    moves: list[Move]
    swap_positions: list[tuple[TrapId, int]]
    final_chains: dict[TrapId, tuple[QubitId, ...]]


def _star() -> MachineGraph:
    """Hub trap 0 of capacity 1 with three leaves."""
    return build_custom([1, 1, 1, 1], [(0, 1), (0, 2), (0, 3)])


DECOMPOSE_CASES = [
    pytest.param(
        DecomposeCase(
            title="Independent hops share no level",
            machine=lambda: build_linear(4, 4),
            moves=[Move(0, (0, 1)), Move(5, (3, 2))],
            hops=[(0, 0, 1), (5, 3, 2)],
            edges=[],
            level_count=1,
        ),
        id="independent",
    ),
    pytest.param(
        DecomposeCase(
            title="Multi-hop move chains its own hops",
            machine=lambda: build_linear(4, 4),
            moves=[Move(0, (0, 1, 2, 3))],
            hops=[(0, 0, 1), (0, 1, 2), (0, 2, 3)],
            edges=[(0, 1), (0, 2), (1, 2)],
            level_count=3,
        ),
        id="multi-hop",
    ),
    pytest.param(
        DecomposeCase(
            title="Shared junction orders two ions",
            machine=lambda: build_linear(2, 4),
            moves=[Move(1, (0, 1)), Move(2, (1, 0))],
            hops=[(1, 0, 1), (2, 1, 0)],
            edges=[(0, 1)],
            level_count=2,
        ),
        id="shared-junction",
    ),
    pytest.param(
        DecomposeCase(
            title="Ring hops on distinct junctions run together",
            machine=lambda: build_ring(4, 2),
            moves=[Move(0, (0, 1)), Move(2, (2, 3)), Move(1, (1, 2))],
            hops=[(0, 0, 1), (2, 2, 3), (1, 1, 2)],
            edges=[],
            level_count=1,
        ),
        id="ring-distinct",
    ),
]

EXTRACT_CASES = [
    pytest.param(
        ExtractCase(
            title="Hub capacity delays a transit",
            machine=_star,
            chains={1: [1], 3: [3]},
            moves=[Move(1, (1, 0, 2)), Move(3, (3, 0))],
            level_rounds=[[0, 2], [1]],
            guarded_rounds=[[0], [1, 2]],
        ),
        id="hub-capacity",
    ),
    pytest.param(
        ExtractCase(
            title="Conflict-free ops stay in one round",
            machine=lambda: build_linear(4, 4),
            chains={0: [0], 3: [5]},
            moves=[Move(0, (0, 1)), Move(5, (3, 2))],
            level_rounds=[[0, 1]],
            guarded_rounds=[[0, 1]],
        ),
        id="conflict-free",
    ),
]

EXPAND_CASES = [
    pytest.param(
        ExpandCase(
            title="Left-end ion bubbles across the chain",
            machine=lambda: build_linear(2, 5),
            chains={0: [0, 1, 2, 3], 1: []},
            moves=[Move(0, (0, 1))],
            swap_positions=[(0, 0), (0, 1), (0, 2)],
            final_chains={0: (1, 2, 3), 1: (0,)},
        ),
        id="bubble-right",
    ),
    pytest.param(
        ExpandCase(
            title="Exit-end ion leaves without SWAPs",
            machine=lambda: build_linear(2, 5),
            chains={0: [0, 1, 2, 3], 1: [4]},
            moves=[Move(3, (0, 1))],
            swap_positions=[],
            final_chains={0: (0, 1, 2), 1: (3, 4)},
        ),
        id="exit-end",
    ),
    pytest.param(
        ExpandCase(
            title="Right-hand trap exits from its left end",
            machine=lambda: build_linear(2, 5),
            chains={0: [0], 1: [1, 2, 3]},
            moves=[Move(3, (1, 0))],
            swap_positions=[(1, 1), (1, 0)],
            final_chains={0: (0, 3), 1: (1, 2)},
        ),
        id="bubble-left",
    ),
]
