"""Round durations: work in different traps runs in parallel, work inside one trap is serial."""

from __future__ import annotations

from collections import defaultdict

from qccd_router.data.gate_name import TWO_QUBIT_GATES
from qccd_router.data.models.core import TrapId
from qccd_router.data.models.physics import PhysicsParams
from qccd_router.data.models.trace import ExecutionTrace, GateRecord, GateRound, Round, ShuttleRound


def gate_duration(gate: GateRecord, params: PhysicsParams) -> float:
    return params.t_2q if gate.name in TWO_QUBIT_GATES else params.t_1q


def round_duration(round_: Round, params: PhysicsParams) -> float:
    """Duration of one round in microseconds.

    A shuttle round lasts as long as its busiest trap needs for SWAPs, plus one split, hop and
    merge when the round moves any ion; hops across distinct junctions overlap. A gate round
    lasts as long as the longest serial sequence of gates in one trap. Empty rounds take 0.
    """
    if isinstance(round_, ShuttleRound):
        if not round_.shuttles:
            return 0.0
        swaps: dict[TrapId, int] = defaultdict(int)
        for op in round_.shuttles:
            for swap in op.swaps:
                swaps[swap.trap] += 1
        reorder = max(swaps.values(), default=0) * params.t_swap
        return reorder + params.t_split_merge + params.t_shuttle

    per_trap: dict[TrapId, float] = defaultdict(float)
    for gate in round_.gates:
        per_trap[gate.trap] += gate_duration(gate, params)
    return max(per_trap.values(), default=0.0)


def execution_time(trace: ExecutionTrace, params: PhysicsParams) -> float:
    return sum(round_duration(r, params) for r in trace.rounds)


def annotate_durations(trace: ExecutionTrace, params: PhysicsParams) -> ExecutionTrace:
    """Return a copy of *trace* with ``duration_us`` filled on every round, op, SWAP and gate."""
    rounds: list[Round] = []
    for round_ in trace.rounds:
        if isinstance(round_, ShuttleRound):
            shuttles = [
                op.model_copy(
                    update={
                        "swaps": [s.model_copy(update={"duration_us": params.t_swap}) for s in op.swaps],
                        "duration_us": params.t_split_merge + params.t_shuttle,
                    }
                )
                for op in round_.shuttles
            ]
            rounds.append(
                round_.model_copy(update={"shuttles": shuttles, "duration_us": round_duration(round_, params)})
            )
        else:
            assert isinstance(round_, GateRound)
            gates = [g.model_copy(update={"duration_us": gate_duration(g, params)}) for g in round_.gates]
            rounds.append(round_.model_copy(update={"gates": gates, "duration_us": round_duration(round_, params)}))
    return trace.model_copy(update={"rounds": rounds})
