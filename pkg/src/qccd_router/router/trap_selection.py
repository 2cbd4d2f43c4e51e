"""Trap selection for a two-qubit gate and the per-slice bookkeeping it reads."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from qccd_router.data.models.circuit import Gate
from qccd_router.data.models.core import GateId, QubitId, TrapId, TrapPath
from qccd_router.data.models.machine import MachineGraph
from qccd_router.data.models.scoring import ScoreWeights, TrapScore
from qccd_router.data.modes import DeferReason
from qccd_router.router.bottleneck import Infeasible, resolve_bottleneck
from qccd_router.router.ion_configuration import IonConfiguration
from qccd_router.scoring.components import Lookahead, split_path
from qccd_router.scoring.trap_score import trap_score
from qccd_router.shuttle.shuttle_dag import Move
from qccd_router.topology.paths import all_shortest_paths


@dataclass
class SliceAssignment:
    """Decisions of the time slice being built.

    ``pending_moves`` is the slice's move list in recording order (each gate's bottleneck
    relocations and transports in the order they must run); ``pending_swaps`` holds the planned
    SWAPs of each move.
    """

    scheduled_gates: dict[GateId, TrapId] = field(default_factory=dict)
    single_qubit_gates: list[Gate] = field(default_factory=list)
    two_qubit_gates: list[Gate] = field(default_factory=list)
    reserved_qubits: set[QubitId] = field(default_factory=set)
    pending_moves: list[Move] = field(default_factory=list)
    pending_swaps: list[int] = field(default_factory=list)

    @property
    def busy_traps(self) -> frozenset[TrapId]:
        return frozenset(self.scheduled_gates.values())

    @property
    def is_empty(self) -> bool:
        return not self.single_qubit_gates and not self.two_qubit_gates


@dataclass(frozen=True)
class SelectionContext:
    machine: MachineGraph
    config: IonConfiguration
    lookahead: Lookahead
    weights: ScoreWeights
    busy_traps: frozenset[TrapId] = frozenset()
    reserved: frozenset[QubitId] = frozenset()


@dataclass(frozen=True)
class TransportPlan:
    """Everything needed to commit *gate* at *trap*.

    ``config`` is the planned configuration after the relocations and the gate's own moves;
    ``sequence`` lists all of them in recording order.
    """

    gate: Gate
    trap: TrapId
    path: TrapPath
    path_index: int
    relocations: tuple[Move, ...]
    moves: tuple[Move, ...]
    move_swaps: tuple[int, ...]
    score: TrapScore
    config: IonConfiguration
    sequence: tuple[Move, ...]

    @property
    def all_moves(self) -> tuple[Move, ...]:
        return self.sequence

    def rank_key(self) -> tuple[float, TrapId, int, GateId]:
        """Sort key: higher total first, then lower trap id, path order and gate id."""
        return (-self.score.total, self.trap, self.path_index, self.gate.gate_id)


@dataclass(frozen=True)
class Commit:
    plan: TransportPlan


@dataclass(frozen=True)
class Defer:
    reason: DeferReason
    plan: TransportPlan | None = None


def select_trap(gate: Gate, ctx: SelectionContext) -> Commit | Defer:
    """Pick the execution trap of a two-qubit source gate.

    Co-located operands score only their own trap. Otherwise every trap on every shortest path
    between the operands is a candidate. The argmax over all feasible candidates commits when its
    trap is idle this slice and its total reaches the threshold; any other outcome defers.
    """
    q1, q2 = gate.qubits
    t1, t2 = ctx.config.trap_of(q1), ctx.config.trap_of(q2)
    paths = [(t1,)] if t1 == t2 else all_shortest_paths(ctx.machine, t1, t2)

    plans: list[TransportPlan] = []
    for index, path in enumerate(paths):
        for trap in path:
            plan = plan_candidate(gate, trap, path, index, ctx)
            if plan is not None:
                plans.append(plan)
    if not plans:
        return Defer(DeferReason.INFEASIBLE)

    best = min(plans, key=TransportPlan.rank_key)
    if best.trap in ctx.busy_traps:
        return Defer(DeferReason.BUSY_TRAP, best)
    if best.score.total < ctx.weights.threshold:
        return Defer(DeferReason.THRESHOLD, best)
    return Commit(best)


def plan_candidate(
    gate: Gate, trap: TrapId, path: TrapPath, path_index: int, ctx: SelectionContext
) -> TransportPlan | None:
    """Plan *gate* at *trap* along *path*, resolving bottlenecks; ``None`` when infeasible.

    Traversed traps need one free slot and the target needs one per incoming ion. Missing slots
    are first freed up front by relocations that avoid the candidate's other needing traps. When
    that fails the operands travel hop by hop and a full next trap is relieved just before each
    hop, through any trap including those the operand has already left.
    """
    return _plan_up_front(gate, trap, path, path_index, ctx) or _plan_hop_by_hop(gate, trap, path, path_index, ctx)


def _plan_up_front(
    gate: Gate, trap: TrapId, path: TrapPath, path_index: int, ctx: SelectionContext
) -> TransportPlan | None:
    q1, q2 = gate.qubits
    first, second = split_path(path, trap)
    needs: list[tuple[TrapId, int]] = [(t, 1) for t in (*first[1:-1], *second[1:-1])]
    incoming = (len(first) > 1) + (len(second) > 1)
    if incoming:
        needs.append((trap, incoming))
    needing = frozenset(t for t, _ in needs)
    immovable = ctx.reserved | {q1, q2}

    state = ctx.config
    relocations: list[Move] = []
    relocation_swaps: list[int] = []
    for needy, slots in needs:
        while state.free_slots(needy) < slots:
            outcome = resolve_bottleneck(
                needy,
                state,
                ctx.lookahead,
                immovable=immovable,
                blocked=needing - {needy},
                gate_qubits=(q1, q2),
                gate_target=trap,
            )
            if isinstance(outcome, Infeasible):
                return None
            relocations.extend(outcome.moves)
            relocation_swaps.extend(outcome.move_swaps)
            state = outcome.config

    score = trap_score(
        q1,
        q2,
        trap,
        path,
        state,
        ctx.lookahead,
        ctx.busy_traps,
        ctx.weights,
        exclude=gate.gate_id,
        extra_shuttles=len(relocations),
        extra_swaps=sum(relocation_swaps),
    )

    planned = state.copy()
    moves: list[Move] = []
    move_swaps: list[int] = []
    for qubit, route in ((q1, first), (q2, second)):
        if len(route) < 2:
            continue
        swaps = 0
        for destination in route[1:]:
            swaps += planned.move(qubit, destination)
        moves.append(Move(qubit, route))
        move_swaps.append(swaps)
    return TransportPlan(
        gate=gate,
        trap=trap,
        path=path,
        path_index=path_index,
        relocations=tuple(relocations),
        moves=tuple(moves),
        move_swaps=(*relocation_swaps, *move_swaps),
        score=score,
        config=planned,
        sequence=(*relocations, *moves),
    )


def _plan_hop_by_hop(
    gate: Gate, trap: TrapId, path: TrapPath, path_index: int, ctx: SelectionContext
) -> TransportPlan | None:
    q1, q2 = gate.qubits
    first, second = split_path(path, trap)
    immovable = ctx.reserved | {q1, q2}

    planned = ctx.config.copy()
    relocations: list[Move] = []
    relocation_swaps: list[int] = []
    moves: list[Move] = []
    move_swaps: list[int] = []
    sequence: list[Move] = []
    for qubit, route in ((q1, first), (q2, second)):
        if len(route) < 2:
            continue
        swaps = 0
        for origin, destination in itertools.pairwise(route):
            if planned.is_full(destination):
                outcome = resolve_bottleneck(
                    destination,
                    planned,
                    ctx.lookahead,
                    immovable=immovable,
                    gate_qubits=(q1, q2),
                    gate_target=trap,
                )
                if isinstance(outcome, Infeasible):
                    return None
                relocations.extend(outcome.moves)
                relocation_swaps.extend(outcome.move_swaps)
                sequence.extend(outcome.moves)
                planned = outcome.config
            swaps += planned.move(qubit, destination)
            sequence.append(Move(qubit, (origin, destination)))
        moves.append(Move(qubit, route))
        move_swaps.append(swaps)

    # Scored on the starting chains; relief is charged on top.
    score = trap_score(
        q1,
        q2,
        trap,
        path,
        ctx.config,
        ctx.lookahead,
        ctx.busy_traps,
        ctx.weights,
        exclude=gate.gate_id,
        extra_shuttles=len(relocations),
        extra_swaps=sum(relocation_swaps),
    )
    return TransportPlan(
        gate=gate,
        trap=trap,
        path=path,
        path_index=path_index,
        relocations=tuple(relocations),
        moves=tuple(moves),
        move_swaps=(*relocation_swaps, *move_swaps),
        score=score,
        config=planned,
        sequence=tuple(sequence),
    )
