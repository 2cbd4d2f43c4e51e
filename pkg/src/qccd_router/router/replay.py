"""Trace replay oracle.

:func:`replay_trace` re-executes a trace from its recorded machine and initial placement and
raises :class:`TraceValidationError` on the first violated invariant. Observers receive every
operation together with the chains it ran on, which is how the fidelity model walks a trace.
"""

from __future__ import annotations

from typing import Protocol, runtime_checkable

from qccd_router.data.errors import InvalidArgumentError, TraceValidationError
from qccd_router.data.gate_name import TWO_QUBIT_GATES
from qccd_router.data.models.core import GateId, QubitId
from qccd_router.data.models.machine import MachineGraph
from qccd_router.data.models.trace import (
    ExecutionTrace,
    GateRecord,
    GateRound,
    GateSpec,
    Round,
    ShuttleOpRecord,
    ShuttleRound,
    SwapRecord,
)
from qccd_router.router.ion_configuration import IonConfiguration
from qccd_router.utils.log_utils import get_logger

logger = get_logger(__name__)


class Invariant:
    PLACEMENT = "placement"
    CAPACITY = "capacity"
    JUNCTION = "junction"
    ION_LOCATION = "ion-location"
    SWAP_ADJACENCY = "swap-adjacency"
    EXIT_END = "exit-end"
    ROUND_CONFLICT = "round-conflict"
    GATE_COLOCATION = "gate-colocation"
    GATE_ORDER = "gate-order"
    TRAP_CONFLICT = "trap-conflict"
    GATE_COVERAGE = "gate-coverage"


@runtime_checkable
class ReplayObserver(Protocol):
    """Receives each replayed operation with the chains *before* it is applied."""

    def on_swap(self, swap: SwapRecord, config: IonConfiguration) -> None: ...

    def on_shuttle(self, op: ShuttleOpRecord, config: IonConfiguration) -> None: ...

    def on_gate(self, gate: GateRecord, config: IonConfiguration) -> None: ...

    def on_round_end(self, round_: Round, config: IonConfiguration) -> None: ...


def _fail(invariant: str, message: str) -> TraceValidationError:
    return TraceValidationError(invariant, message)


def _initial_configuration(trace: ExecutionTrace, machine: MachineGraph) -> IonConfiguration:
    placed = sorted(q for chain in trace.initial_placement for q in chain.ions)
    if placed != list(range(trace.n_qubits)):
        raise _fail(Invariant.PLACEMENT, f"initial placement must hold each of qubits 0..{trace.n_qubits - 1} once")
    for chain in trace.initial_placement:
        if not machine.has_trap(chain.trap):
            raise _fail(Invariant.PLACEMENT, f"trap {chain.trap} does not exist")
        if len(chain.ions) > machine.capacity(chain.trap):
            raise _fail(Invariant.CAPACITY, f"trap {chain.trap} starts with {len(chain.ions)} ions")
    return IonConfiguration(machine, {c.trap: c.ions for c in trace.initial_placement})


def replay_trace(trace: ExecutionTrace, observer: ReplayObserver | None = None) -> IonConfiguration:
    """Replay *trace* and return the final configuration.

    Raises:
        TraceValidationError: naming the first violated invariant.
    """
    try:
        machine = MachineGraph.from_spec(trace.machine)
    except InvalidArgumentError as exc:
        raise _fail(Invariant.JUNCTION, f"invalid machine: {exc}") from None
    config = _initial_configuration(trace, machine)

    predecessor: dict[tuple[GateId, QubitId], GateId] = {}
    last_seen: dict[QubitId, GateId] = {}
    for spec in trace.gates:
        for qubit in spec.qubits:
            if qubit in last_seen:
                predecessor[(spec.id, qubit)] = last_seen[qubit]
            last_seen[qubit] = spec.id
    specs = {spec.id: spec for spec in trace.gates}
    executed: set[GateId] = set()

    for round_ in trace.rounds:
        if isinstance(round_, ShuttleRound):
            _replay_shuttle_round(round_, config, machine, observer)
        else:
            _replay_gate_round(round_, config, specs, predecessor, executed, observer)
        if observer is not None:
            observer.on_round_end(round_, config)

    missing = sorted(set(specs) - executed)
    if missing:
        raise _fail(Invariant.GATE_COVERAGE, f"gates never executed: {missing[:10]}")
    return config


def validate_trace(trace: ExecutionTrace) -> IonConfiguration:
    """Replay *trace* without observers; see :func:`replay_trace`."""
    final = replay_trace(trace)
    logger.info("trace with %d rounds replays cleanly", len(trace.rounds))
    return final


def _replay_shuttle_round(
    round_: ShuttleRound, config: IonConfiguration, machine: MachineGraph, observer: ReplayObserver | None
) -> None:
    junctions = [op.junction for op in round_.shuttles]
    qubits = [op.qubit for op in round_.shuttles]
    if len(set(junctions)) != len(junctions):
        raise _fail(Invariant.ROUND_CONFLICT, f"round {round_.index} uses a junction twice")
    if len(set(qubits)) != len(qubits):
        raise _fail(Invariant.ROUND_CONFLICT, f"round {round_.index} moves a qubit twice")

    departed: list[ShuttleOpRecord] = []
    for op in round_.shuttles:
        try:
            junction = machine.junction_between(op.from_trap, op.to_trap)
        except InvalidArgumentError:
            raise _fail(Invariant.JUNCTION, f"op {op.op_id}: traps {op.from_trap} and {op.to_trap} are not adjacent") from None
        if junction.junction_id != op.junction:
            raise _fail(Invariant.JUNCTION, f"op {op.op_id}: junction {op.junction} does not join its traps")
        try:
            located = config.trap_of(op.qubit)
        except InvalidArgumentError:
            located = None
        if located != op.from_trap:
            raise _fail(Invariant.ION_LOCATION, f"op {op.op_id}: qubit {op.qubit} is not in trap {op.from_trap}")

        for swap in op.swaps:
            if not machine.has_trap(swap.trap):
                raise _fail(Invariant.SWAP_ADJACENCY, f"op {op.op_id}: swap names unknown trap {swap.trap}")
            chain = config.chain(swap.trap)
            if not 0 <= swap.position < len(chain) - 1 or tuple(chain[swap.position : swap.position + 2]) != tuple(
                swap.qubits
            ):
                raise _fail(
                    Invariant.SWAP_ADJACENCY,
                    f"op {op.op_id}: qubits {swap.qubits} are not at positions {swap.position}, {swap.position + 1} "
                    f"of trap {swap.trap}",
                )
            if observer is not None:
                observer.on_swap(swap, config)
            config.swap_adjacent(swap.trap, swap.position)

        end = junction.end_of(op.from_trap)
        if config.swaps_to_end(op.qubit, end) != 0:
            raise _fail(Invariant.EXIT_END, f"op {op.op_id}: qubit {op.qubit} is not at the {end} end of its chain")
        if observer is not None:
            observer.on_shuttle(op, config)
        config.remove_from_end(op.qubit, end)
        departed.append(op)

    for op in departed:
        if config.is_full(op.to_trap):
            raise _fail(Invariant.CAPACITY, f"op {op.op_id}: trap {op.to_trap} overflows")
        config.insert_at_end(op.qubit, op.to_trap, machine.exit_end(op.to_trap, op.from_trap))


def _replay_gate_round(
    round_: GateRound,
    config: IonConfiguration,
    specs: dict[GateId, GateSpec],
    predecessor: dict[tuple[GateId, QubitId], GateId],
    executed: set[GateId],
    observer: ReplayObserver | None,
) -> None:
    two_qubit_traps: set[int] = set()
    two_qubit_qubits: set[QubitId] = set()
    this_round: set[GateId] = set()
    for record in round_.gates:
        spec = specs.get(record.gate_id)
        if spec is None or spec.name != record.name or spec.qubits != record.qubits:
            raise _fail(Invariant.GATE_COVERAGE, f"gate {record.gate_id} does not match the circuit")
        if record.gate_id in executed:
            raise _fail(Invariant.GATE_COVERAGE, f"gate {record.gate_id} executes twice")
        for qubit in record.qubits:
            before = predecessor.get((record.gate_id, qubit))
            if before is None:
                continue
            if before not in executed:
                raise _fail(Invariant.GATE_ORDER, f"gate {record.gate_id} runs before gate {before} on qubit {qubit}")
            # In-place single-qubit runs may share a round; anything else needs an earlier one.
            if before in this_round and (record.name in TWO_QUBIT_GATES or specs[before].name in TWO_QUBIT_GATES):
                raise _fail(Invariant.GATE_ORDER, f"gate {record.gate_id} shares round {round_.index} with gate {before}")
        for qubit in record.qubits:
            if config.trap_of(qubit) != record.trap:
                raise _fail(
                    Invariant.GATE_COLOCATION,
                    f"gate {record.gate_id}: qubit {qubit} is in trap {config.trap_of(qubit)}, not {record.trap}",
                )
        if record.name in TWO_QUBIT_GATES:
            if record.trap in two_qubit_traps:
                raise _fail(Invariant.TRAP_CONFLICT, f"round {round_.index} runs two gates in trap {record.trap}")
            if two_qubit_qubits.intersection(record.qubits):
                raise _fail(Invariant.ROUND_CONFLICT, f"round {round_.index} uses a qubit in two gates")
            two_qubit_traps.add(record.trap)
            two_qubit_qubits.update(record.qubits)
        if observer is not None:
            observer.on_gate(record, config)
        executed.add(record.gate_id)
        this_round.add(record.gate_id)
