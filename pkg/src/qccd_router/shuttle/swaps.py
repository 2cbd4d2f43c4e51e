"""SWAP expansion of a shuttle round against the physical ion chains."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from qccd_router.data.errors import ErrorMessages, ShuttleInvariantError
from qccd_router.data.models.core import QubitId, TrapId
from qccd_router.data.topology_kind import ChainEnd
from qccd_router.router.ion_configuration import IonConfiguration
from qccd_router.shuttle.shuttle_dag import ShuttleOp


@dataclass(frozen=True)
class ChainSwap:
    """Exchange of the ions at ``position`` and ``position + 1`` of ``trap``."""

    trap: TrapId
    position: int
    qubits: tuple[QubitId, QubitId]


@dataclass(frozen=True)
class RoundExpansion:
    """SWAPs of a round in execution order, grouped per op, and the chains after the round."""

    config: IonConfiguration
    swaps: list[ChainSwap] = field(default_factory=list)
    swaps_by_op: dict[int, list[ChainSwap]] = field(default_factory=dict)


def expand_swaps(round_ops: Iterable[ShuttleOp], config: IonConfiguration) -> RoundExpansion:
    """Execute one round on a copy of *config*.

    Ops run in op-id order: each ion is bubbled to the chain end facing its junction and departs;
    arrivals are applied afterwards, each at the destination end facing the junction.

    Raises:
        ShuttleInvariantError: an ion is not in its origin trap, or a destination overflows.
    """
    state = config.copy()
    machine = state.machine
    swaps: list[ChainSwap] = []
    swaps_by_op: dict[int, list[ChainSwap]] = {}
    departed: list[ShuttleOp] = []
    for op in sorted(round_ops, key=lambda o: o.op_id):
        if state.trap_of(op.qubit) != op.from_trap:
            raise ShuttleInvariantError(f"Qubit {op.qubit} is not in trap {op.from_trap} for op {op.op_id}")
        end = machine.junction_between(op.from_trap, op.to_trap).end_of(op.from_trap)
        op_swaps: list[ChainSwap] = []
        while state.swaps_to_end(op.qubit, end) > 0:
            here = state.position(op.qubit)
            position = here - 1 if end is ChainEnd.LEFT else here
            pair = state.swap_adjacent(op.from_trap, position)
            op_swaps.append(ChainSwap(op.from_trap, position, pair))
        state.remove_from_end(op.qubit, end)
        swaps.extend(op_swaps)
        swaps_by_op[op.op_id] = op_swaps
        departed.append(op)

    for op in departed:
        if state.is_full(op.to_trap):
            raise ShuttleInvariantError(
                ErrorMessages.trap_overfull(op.to_trap, state.occupancy(op.to_trap) + 1, machine.capacity(op.to_trap))
            )
        end = machine.junction_between(op.from_trap, op.to_trap).end_of(op.to_trap)
        state.insert_at_end(op.qubit, op.to_trap, end)
    return RoundExpansion(state, swaps, swaps_by_op)
