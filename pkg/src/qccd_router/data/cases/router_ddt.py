"""DDT cases for placement, trap selection, bottleneck resolution and whole routing runs."""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass, field

import pytest

from qccd_router.data.cases.circuit_ddt import cx, h
from qccd_router.data.cases.core import Case
from qccd_router.data.models.circuit import Gate
from qccd_router.data.models.core import QubitId, TrapId, TrapPath
from qccd_router.data.models.machine import MachineGraph
from qccd_router.data.models.scoring import ScoreWeights
from qccd_router.data.modes import DeferReason, PlacementStrategy
from qccd_router.shuttle.shuttle_dag import Move
from qccd_router.topology.builders import build_linear, build_ring


@dataclass
class PlacementCase(Case):
    strategy: PlacementStrategy
    machine: Callable[[], MachineGraph]
    n_qubits: int
    gates: list[Gate]
    chains: dict[TrapId, tuple[QubitId, ...]]


@dataclass
class SelectTrapCase(Case):
    """``trap is None`` expects a defer with ``reason``; otherwise a commit at ``trap``."""

    machine: Callable[[], MachineGraph]
    chains: dict[TrapId, list[QubitId]]
    gate: Gate
    trap: TrapId | None = None
    path: TrapPath | None = None
    reason: DeferReason | None = None
    busy: frozenset[TrapId] = frozenset()
    weights: ScoreWeights = field(default_factory=ScoreWeights)


@dataclass
class BottleneckCase(Case):
    machine: Callable[[], MachineGraph]
    chains: dict[TrapId, list[QubitId]]
    trap: TrapId
    immovable: frozenset[QubitId]
    moves: tuple[Move, ...]
    final_chains: dict[TrapId, tuple[QubitId, ...]]


@dataclass
class RouteCase(Case):
    machine: Callable[[], MachineGraph]
    chains: dict[TrapId, list[QubitId]]
    gates: list[Gate]
    n_qubits: int
    shuttles: int
    swaps: int
    first_round_gates: set[int] | None = None


PLACEMENT_CASES = [
    pytest.param(
        PlacementCase(
            title="Sequential fills traps in id order",
            strategy=PlacementStrategy.SEQUENTIAL,
            machine=lambda: build_linear(2, 4),
            n_qubits=6,
            gates=[],
            chains={0: (0, 1, 2, 3), 1: (4, 5)},
        ),
        id="sequential",
    ),
    pytest.param(
        PlacementCase(
            title="Greedy co-locates a first-layer pair",
            strategy=PlacementStrategy.GREEDY,
            machine=lambda: build_linear(3, 6),
            n_qubits=3,
            gates=[cx(0, 0, 1)],
            chains={0: (0, 1, 2), 1: (), 2: ()},
        ),
        id="greedy-pair",
    ),
    pytest.param(
        PlacementCase(
            title="Greedy splits sequential neighbours to pair partners",
            strategy=PlacementStrategy.GREEDY,
            machine=lambda: build_linear(2, 2),
            n_qubits=4,
            gates=[cx(0, 0, 2)],
            chains={0: (0, 2), 1: (1, 3)},
        ),
        id="greedy-split",
    ),
]

# Ring of four traps; ion 4 reaches trap 0 over trap 3 with one SWAP on the way.
SELECT_TRAP_CASES = [
    pytest.param(
        SelectTrapCase(
            title="Ring pair commits at the emptier end",
            machine=lambda: build_ring(4, 4),
            chains={0: [0], 1: [1, 2, 3], 2: [4], 3: [5]},
            gate=cx(0, 0, 4),
            trap=0,
            path=(0, 3, 2),
        ),
        id="ring-pair",
    ),
    pytest.param(
        SelectTrapCase(
            title="Co-located pair commits in place",
            machine=lambda: build_linear(2, 4),
            chains={0: [0, 1], 1: [2]},
            gate=cx(0, 0, 1),
            trap=0,
            path=(0,),
        ),
        id="co-located",
    ),
    pytest.param(
        SelectTrapCase(
            title="Co-located pair defers on a busy trap",
            machine=lambda: build_linear(2, 4),
            chains={0: [0, 1], 1: [2]},
            gate=cx(0, 0, 1),
            reason=DeferReason.BUSY_TRAP,
            busy=frozenset({0}),
        ),
        id="busy-trap",
    ),
    pytest.param(
        SelectTrapCase(
            title="Unreachable threshold defers",
            machine=lambda: build_linear(2, 4),
            chains={0: [0, 1], 1: [2]},
            gate=cx(0, 0, 2),
            reason=DeferReason.THRESHOLD,
            weights=ScoreWeights(threshold=math.inf),
        ),
        id="threshold",
    ),
    pytest.param(
        SelectTrapCase(
            title="Full machine leaves no candidate",
            machine=lambda: build_linear(2, 2),
            chains={0: [0, 1], 1: [2, 3]},
            gate=cx(0, 0, 2),
            reason=DeferReason.INFEASIBLE,
        ),
        id="infeasible",
    ),
]

BOTTLENECK_CASES = [
    pytest.param(
        BottleneckCase(
            title="Relief propagates through a full neighbour",
            machine=lambda: build_linear(3, 2),
            chains={0: [0, 1], 1: [2, 3], 2: [4]},
            trap=0,
            immovable=frozenset(),
            moves=(Move(3, (1, 2)), Move(1, (0, 1))),
            final_chains={0: (0,), 1: (1, 2), 2: (3, 4)},
        ),
        id="propagate",
    ),
    pytest.param(
        BottleneckCase(
            title="Immovable ion stays behind",
            machine=lambda: build_linear(2, 2),
            chains={0: [0, 1], 1: [2]},
            trap=0,
            immovable=frozenset({1}),
            moves=(Move(0, (0, 1)),),
            final_chains={0: (1,), 1: (0, 2)},
        ),
        id="immovable-exit-ion",
    ),
    pytest.param(
        BottleneckCase(
            title="Single hop to a free neighbour",
            machine=lambda: build_linear(2, 2),
            chains={0: [0, 1], 1: [2]},
            trap=0,
            immovable=frozenset({0}),
            moves=(Move(1, (0, 1)),),
            final_chains={0: (0,), 1: (1, 2)},
        ),
        id="single-hop",
    ),
]

ROUTE_CASES = [
    pytest.param(
        RouteCase(
            title="Two traps with one cross-trap pair",
            machine=lambda: build_linear(2, 4),
            chains={0: [0, 1, 2], 1: [3, 4, 5]},
            gates=[cx(0, 0, 2), cx(1, 3, 4), cx(2, 1, 3), cx(3, 1, 4)],
            n_qubits=6,
            shuttles=1,
            swaps=1,
            first_round_gates={0, 1},
        ),
        id="two-traps",
    ),
    pytest.param(
        RouteCase(
            title="Single trap needs no transport",
            machine=lambda: build_linear(1, 4),
            chains={0: [0, 1, 2]},
            gates=[h(0, 0), cx(1, 0, 1), cx(2, 1, 2), cx(3, 0, 2)],
            n_qubits=3,
            shuttles=0,
            swaps=0,
        ),
        id="single-trap",
    ),
    pytest.param(
        RouteCase(
            title="Empty circuit",
            machine=lambda: build_linear(2, 4),
            chains={0: [0, 1], 1: [2]},
            gates=[],
            n_qubits=3,
            shuttles=0,
            swaps=0,
        ),
        id="empty-circuit",
    ),
]
