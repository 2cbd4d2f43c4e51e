"""The slice-based routing loop.

Each slice commits the leading single-qubit gates in place, then two-qubit source gates in
descending score order until every remaining candidate defers. A flush turns the slice's
recorded moves into shuttle rounds followed by one gate round.
"""

from __future__ import annotations

from dataclasses import replace

from qccd_router.circuit.gate_dag import GateDag
from qccd_router.data.errors import ErrorMessages, InvalidArgumentError, RoutingError
from qccd_router.data.models.circuit import Gate
from qccd_router.data.models.core import GateId, QubitId
from qccd_router.data.models.machine import MachineGraph
from qccd_router.data.models.scoring import ScoreWeights
from qccd_router.data.models.trace import (
    ChainRecord,
    ExecutionTrace,
    GateRecord,
    GateRound,
    GateSpec,
    Round,
    ShuttleOpRecord,
    ShuttleRound,
    SwapRecord,
)
from qccd_router.data.modes import PlacementStrategy
from qccd_router.router.ion_configuration import IonConfiguration
from qccd_router.router.placement import initial_placement
from qccd_router.router.trap_selection import (
    Commit,
    Defer,
    SelectionContext,
    SliceAssignment,
    TransportPlan,
    select_trap,
)
from qccd_router.scoring.components import Lookahead
from qccd_router.shuttle.shuttle_dag import decompose_moves, extract_rounds
from qccd_router.shuttle.swaps import expand_swaps
from qccd_router.utils.log_utils import get_logger

logger = get_logger(__name__)


class Router:
    """Routes one circuit on one machine; single use."""

    def __init__(self, dag: GateDag, machine: MachineGraph, weights: ScoreWeights, start: IonConfiguration) -> None:
        self.dag = dag
        self.machine = machine
        self.weights = weights
        self.config = start.copy()
        self.rounds: list[Round] = []
        self._executed: set[GateId] = set()
        self._ops_recorded = 0
        self._chains: dict[QubitId, list[GateId]] = {q: [] for q in range(dag.n_qubits)}
        for gate in dag.gates:
            for qubit in gate.qubits:
                self._chains.setdefault(qubit, []).append(gate.gate_id)
        self._next: dict[QubitId, int] = dict.fromkeys(self._chains, 0)

    # ------------------------------------------------------------------
    # Frontier
    # ------------------------------------------------------------------

    def _head(self, qubit: QubitId) -> Gate | None:
        index = self._next[qubit]
        chain = self._chains[qubit]
        return self.dag.gate(chain[index]) if index < len(chain) else None

    def _is_source(self, gate: Gate) -> bool:
        return all(self._head(q) == gate for q in gate.qubits)

    def _remaining(self) -> list[Gate]:
        return [g for g in self.dag.gates if g.gate_id not in self._executed]

    # ------------------------------------------------------------------
    # Loop
    # ------------------------------------------------------------------

    def run(self) -> list[Round]:
        while len(self._executed) < len(self.dag.gates):
            slice_start = self.config
            assignment = self._build_slice()
            if assignment.is_empty:
                raise RoutingError(ErrorMessages.NO_PROGRESS)
            self._flush(assignment, slice_start)
        return self.rounds

    def _build_slice(self) -> SliceAssignment:
        assignment = SliceAssignment()
        for qubit in sorted(self._chains):
            index = self._next[qubit]
            chain = self._chains[qubit]
            while index < len(chain) and not self.dag.gate(chain[index]).is_two_qubit:
                assignment.single_qubit_gates.append(self.dag.gate(chain[index]))
                assignment.reserved_qubits.add(qubit)
                index += 1

        candidates = sorted(
            {
                head.gate_id: head
                for q in self._chains
                if (head := self._head(q)) is not None and head.is_two_qubit and self._is_source(head)
            }.values(),
            key=lambda g: g.gate_id,
        )
        if not candidates:
            return assignment

        lookahead = Lookahead.from_gates(self._remaining(), self.weights.lookahead_layers)
        while candidates:
            ctx = SelectionContext(
                machine=self.machine,
                config=self.config,
                lookahead=lookahead,
                weights=self.weights,
                busy_traps=assignment.busy_traps,
                reserved=frozenset(assignment.reserved_qubits),
            )
            decisions = {gate.gate_id: select_trap(gate, ctx) for gate in candidates}
            commits = [d.plan for d in decisions.values() if isinstance(d, Commit)]
            if commits:
                chosen = min(commits, key=TransportPlan.rank_key)
            elif not assignment.two_qubit_gates:
                deferred = [d.plan for d in decisions.values() if isinstance(d, Defer) and d.plan is not None]
                if not deferred and ctx.reserved:
                    # Single-qubit runs execute after the shuttles, so their ions may be relieved too.
                    unrestricted = select_trap(candidates[0], replace(ctx, reserved=frozenset())).plan
                    deferred = [unrestricted] if unrestricted is not None else []
                if not deferred:
                    logger.debug("no feasible candidate among %s", [g.gate_id for g in candidates])
                    break
                chosen = min(deferred, key=TransportPlan.rank_key)
                logger.debug("force-commit gate %d at trap %d", chosen.gate.gate_id, chosen.trap)
            else:
                for gate_id, decision in decisions.items():
                    if isinstance(decision, Defer):
                        logger.debug("defer gate %d: %s", gate_id, decision.reason)
                break
            self._commit(chosen, assignment)
            candidates = [g for g in candidates if g.gate_id != chosen.gate.gate_id]
        return assignment

    def _commit(self, plan: TransportPlan, assignment: SliceAssignment) -> None:
        logger.debug(
            "commit gate %d at trap %d (total %.3f, %d relocations)",
            plan.gate.gate_id,
            plan.trap,
            plan.score.total,
            len(plan.relocations),
        )
        assignment.scheduled_gates[plan.gate.gate_id] = plan.trap
        assignment.two_qubit_gates.append(plan.gate)
        assignment.reserved_qubits.update(plan.gate.qubits)
        assignment.pending_moves.extend(plan.all_moves)
        assignment.pending_swaps.extend(plan.move_swaps)
        self.config = plan.config

    def _flush(self, assignment: SliceAssignment, physical: IonConfiguration) -> None:
        """Replay the slice on the physical chains; the planned configuration is synced to the result."""
        shuttle_dag = decompose_moves(assignment.pending_moves, self.machine)
        for ops in extract_rounds(shuttle_dag, guard=physical):
            expansion = expand_swaps(ops, physical)
            records = [
                ShuttleOpRecord(
                    op_id=self._ops_recorded + op.op_id,
                    qubit=op.qubit,
                    from_trap=op.from_trap,
                    to_trap=op.to_trap,
                    junction=op.junction,
                    swaps=[
                        SwapRecord(trap=s.trap, position=s.position, qubits=s.qubits)
                        for s in expansion.swaps_by_op[op.op_id]
                    ],
                )
                for op in sorted(ops, key=lambda o: o.op_id)
            ]
            self.rounds.append(ShuttleRound(index=len(self.rounds), shuttles=records))
            physical = expansion.config
        self._ops_recorded += shuttle_dag.hop_count

        gates = [
            GateRecord(gate_id=g.gate_id, name=g.name, qubits=list(g.qubits), trap=physical.trap_of(g.qubits[0]))
            for g in sorted(assignment.single_qubit_gates, key=lambda g: g.gate_id)
        ]
        gates.extend(
            GateRecord(gate_id=g.gate_id, name=g.name, qubits=list(g.qubits), trap=assignment.scheduled_gates[g.gate_id])
            for g in assignment.two_qubit_gates
        )
        self.rounds.append(GateRound(index=len(self.rounds), gates=gates))

        for gate in (*assignment.single_qubit_gates, *assignment.two_qubit_gates):
            self._executed.add(gate.gate_id)
            for qubit in gate.qubits:
                self._next[qubit] += 1
        self.config = physical


def _placement_records(config: IonConfiguration) -> list[ChainRecord]:
    return [ChainRecord(trap=trap, ions=list(chain)) for trap, chain in sorted(config.snapshot().items())]


def route(
    dag: GateDag,
    machine: MachineGraph,
    weights: ScoreWeights,
    placement: PlacementStrategy | IonConfiguration = PlacementStrategy.SEQUENTIAL,
    seed: int = 0,
) -> ExecutionTrace:
    """Route *dag* on *machine* and return the full execution trace.

    Args:
        placement: A placement strategy, or a ready configuration holding every circuit qubit.
        seed:      Recorded in the trace header; routing itself is deterministic.

    Raises:
        CapacityError: the qubits do not fit the machine.
        RoutingError:  no gate can be committed while gates remain.
    """
    if isinstance(placement, IonConfiguration):
        start = placement
        if start.machine != machine:
            raise InvalidArgumentError("Placement was built for a different machine")
        if start.qubits != list(range(dag.n_qubits)):
            raise InvalidArgumentError(f"Placement must hold exactly qubits 0..{dag.n_qubits - 1}")
    else:
        start = initial_placement(dag, machine, placement)

    rounds = Router(dag, machine, weights, start).run()
    logger.info(
        "routed %d gates in %d rounds on %d traps",
        len(dag.gates),
        len(rounds),
        len(machine.traps),
    )
    return ExecutionTrace(
        seed=seed,
        n_qubits=dag.n_qubits,
        machine=machine.to_spec(),
        initial_placement=_placement_records(start),
        gates=[GateSpec(id=g.gate_id, name=g.name, qubits=list(g.qubits), params=list(g.params)) for g in dag.gates],
        rounds=rounds,
        weights=weights,
    )
