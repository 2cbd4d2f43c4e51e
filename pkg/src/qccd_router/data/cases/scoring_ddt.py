"""DDT cases for the score components and their weighted combination."""

from __future__ import annotations

from dataclasses import dataclass, field

import pytest

from qccd_router.data.cases.core import Case
from qccd_router.data.models.core import QubitId, TrapId, TrapPath
from qccd_router.data.models.scoring import ScoreWeights


@dataclass
class CombineCase(Case):
    weights: ScoreWeights
    shuttle_count: int
    swap_count: int
    future_ops: float
    excess_capacity: int
    parallelism: int
    total: float


@dataclass
class FutureOpsCase(Case):
    """Qubits 0 and 2 sit in trap 0, qubits 1 and 3 in trap 1; window gates are operand pairs per layer."""

    depth: int
    layers: list[list[tuple[QubitId, QubitId]]]
    qubit: QubitId
    trap: TrapId
    expected: float


@dataclass
class MovementCountCase(Case):
    capacities: list[int]
    chains: dict[TrapId, list[QubitId]]
    q1: QubitId
    q2: QubitId
    path: TrapPath
    target: TrapId
    shuttles: int
    swaps: int


@dataclass
class ExcessCapacityCase(Case):
    capacity: int
    occupancy: int
    incoming: int
    expected: int


@dataclass
class ParallelismCase(Case):
    trap: TrapId
    busy: frozenset[TrapId]
    expected: int


@dataclass
class BottleneckScoreCase(Case):
    chains: dict[TrapId, list[QubitId]]
    qubit: QubitId
    destination: TrapId
    future_pairs: list[tuple[QubitId, QubitId]] = field(default_factory=list)
    expected: float = 0.0


_ONES = ScoreWeights()
_ONLY_SHUTTLE = ScoreWeights(alpha_shuttle=65, lambda_swap=0, beta_future=0, sigma_capacity=0, gamma_parallel=0)

COMBINE_CASES = [
    pytest.param(
        CombineCase(
            title="Unit weights sum the signed components",
            weights=_ONES,
            shuttle_count=2,
            swap_count=3,
            future_ops=1,
            excess_capacity=2,
            parallelism=1,
            total=-1.0,
        ),
        id="unit-weights",
    ),
    pytest.param(
        CombineCase(
            title="Co-located idle pair in an exactly full trap",
            weights=_ONES,
            shuttle_count=0,
            swap_count=0,
            future_ops=0,
            excess_capacity=0,
            parallelism=1,
            total=1.0,
        ),
        id="co-located",
    ),
    pytest.param(
        CombineCase(
            title="Shuttle weight alone",
            weights=_ONLY_SHUTTLE,
            shuttle_count=2,
            swap_count=7,
            future_ops=4,
            excess_capacity=3,
            parallelism=1,
            total=-130.0,
        ),
        id="shuttle-weight-only",
    ),
    pytest.param(
        CombineCase(
            title="Busy over-full trap",
            weights=ScoreWeights(alpha_shuttle=30, lambda_swap=10, beta_future=2, sigma_capacity=5, gamma_parallel=4),
            shuttle_count=1,
            swap_count=2,
            future_ops=6,
            excess_capacity=-6,
            parallelism=-1,
            total=-30 - 20 + 12 - 30 - 4,
        ),
        id="busy-overfull",
    ),
]

FUTURE_OPS_CASES = [
    pytest.param(
        FutureOpsCase(title="No future gate", depth=3, layers=[], qubit=0, trap=1, expected=0.0),
        id="no-future-gate",
    ),
    pytest.param(
        FutureOpsCase(title="One gate in the first layer", depth=3, layers=[[(0, 1)]], qubit=0, trap=1, expected=2.0),
        id="first-layer",
    ),
    pytest.param(
        FutureOpsCase(
            title="Gates in the first two layers",
            depth=3,
            layers=[[(0, 1)], [(0, 1)]],
            qubit=0,
            trap=1,
            expected=3.0,
        ),
        id="two-layers",
    ),
    pytest.param(
        FutureOpsCase(
            title="Last window layer weighs zero",
            depth=3,
            layers=[[(2, 3)], [(2, 3)], [(0, 1)]],
            qubit=0,
            trap=1,
            expected=0.0,
        ),
        id="last-layer",
    ),
    pytest.param(
        FutureOpsCase(
            title="Partner outside the trap",
            depth=3,
            layers=[[(0, 1)]],
            qubit=0,
            trap=0,
            expected=0.0,
        ),
        id="partner-elsewhere",
    ),
    pytest.param(
        FutureOpsCase(
            title="Layers beyond the window are ignored",
            depth=2,
            layers=[[(0, 1)], [(0, 1)], [(0, 1)]],
            qubit=0,
            trap=1,
            expected=1.0,
        ),
        id="beyond-window",
    ),
]

MOVEMENT_COUNT_CASES = [
    pytest.param(
        MovementCountCase(
            title="Both ions already in the target",
            capacities=[4, 4],
            chains={0: [0, 1], 1: [2]},
            q1=0,
            q2=1,
            path=(0,),
            target=0,
            shuttles=0,
            swaps=0,
        ),
        id="co-located",
    ),
    pytest.param(
        MovementCountCase(
            title="Interior ion reaches the adjacent trap",
            capacities=[4, 4],
            chains={0: [0, 1, 2], 1: [3]},
            q1=1,
            q2=3,
            path=(0, 1),
            target=1,
            shuttles=1,
            swaps=1,
        ),
        id="interior-ion",
    ),
    pytest.param(
        MovementCountCase(
            title="Crossing an intermediate trap of three ions",
            capacities=[4, 4, 4],
            chains={0: [0], 1: [1, 2, 3], 2: [4]},
            q1=0,
            q2=4,
            path=(0, 1, 2),
            target=2,
            shuttles=2,
            swaps=3,
        ),
        id="intermediate-trap",
    ),
    pytest.param(
        MovementCountCase(
            title="Both ions meet in the middle trap",
            capacities=[4, 4, 4],
            chains={0: [0, 5], 1: [1], 2: [6, 4]},
            q1=0,
            q2=4,
            path=(0, 1, 2),
            target=1,
            shuttles=2,
            swaps=2,
        ),
        id="meet-in-middle",
    ),
]

EXCESS_CAPACITY_CASES = [
    pytest.param(ExcessCapacityCase(title="Free slots remain", capacity=6, occupancy=3, incoming=1, expected=2), id="free"),
    pytest.param(
        ExcessCapacityCase(title="Over-full trap", capacity=6, occupancy=6, incoming=1, expected=-6), id="over-full"
    ),
    pytest.param(
        ExcessCapacityCase(title="Exactly full trap", capacity=6, occupancy=5, incoming=1, expected=0), id="exactly-full"
    ),
    pytest.param(
        ExcessCapacityCase(title="Two incoming ions", capacity=4, occupancy=1, incoming=2, expected=1), id="two-incoming"
    ),
]

PARALLELISM_CASES = [
    pytest.param(ParallelismCase(title="Empty slice", trap=0, busy=frozenset(), expected=1), id="empty-slice"),
    pytest.param(ParallelismCase(title="Trap already busy", trap=0, busy=frozenset({0}), expected=-1), id="busy"),
    pytest.param(
        ParallelismCase(title="Other traps busy", trap=0, busy=frozenset({1, 2}), expected=1), id="others-busy"
    ),
]

# Two traps of capacity 3; trap 0 exits to trap 1 from its right end.
BOTTLENECK_SCORE_CASES = [
    pytest.param(
        BottleneckScoreCase(
            title="Exit-end ion to a free neighbour",
            chains={0: [0, 1, 2], 1: []},
            qubit=2,
            destination=1,
            expected=-1.0,
        ),
        id="exit-end",
    ),
    pytest.param(
        BottleneckScoreCase(
            title="Ion behind two others",
            chains={0: [0, 1, 2], 1: []},
            qubit=0,
            destination=1,
            expected=-3.0,
        ),
        id="behind-two",
    ),
    pytest.param(
        BottleneckScoreCase(
            title="Future partner waits in the destination",
            chains={0: [0, 1, 2], 1: [3]},
            qubit=2,
            destination=1,
            future_pairs=[(2, 3)],
            expected=1.0,
        ),
        id="future-partner",
    ),
]
