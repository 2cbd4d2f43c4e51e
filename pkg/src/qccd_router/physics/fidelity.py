"""Fidelity accumulation over a replayed trace with a per-trap heating proxy."""

from __future__ import annotations

from collections import defaultdict

from qccd_router.data.gate_name import TWO_QUBIT_GATES
from qccd_router.data.models.core import TrapId
from qccd_router.data.models.physics import PhysicsParams, RunMetrics
from qccd_router.data.models.trace import ExecutionTrace, GateRecord, GateRound, Round, ShuttleOpRecord, SwapRecord
from qccd_router.physics.timing import execution_time
from qccd_router.router.ion_configuration import IonConfiguration
from qccd_router.router.replay import replay_trace

_MAX_ERROR = 1.0 - 1e-12


class FidelityObserver:
    """Multiplies ``1 - e`` per operation while tracking motional heat per trap."""

    def __init__(self, params: PhysicsParams, traps: list[TrapId]) -> None:
        self.params = params
        self.product = 1.0
        self.heat: dict[TrapId, float] = defaultdict(float, dict.fromkeys(traps, 0.0))
        self.heat_trace: list[dict[TrapId, float]] = []
        self.gate_rounds = 0

    def two_qubit_error(self, trap: TrapId, config: IonConfiguration) -> float:
        p = self.params
        error = p.e_2q_base + p.chain_coeff * (config.occupancy(trap) - 2) + p.e_heat_coeff * self.heat[trap]
        return min(max(error, 0.0), _MAX_ERROR)

    def _apply(self, error: float) -> None:
        self.product *= 1.0 - error

    def on_swap(self, swap: SwapRecord, config: IonConfiguration) -> None:
        self._apply(self.two_qubit_error(swap.trap, config))

    def on_shuttle(self, op: ShuttleOpRecord, config: IonConfiguration) -> None:
        self.heat[op.from_trap] += self.params.heat_per_shuttle
        self.heat[op.to_trap] += self.params.heat_per_shuttle

    def on_gate(self, gate: GateRecord, config: IonConfiguration) -> None:
        if gate.name in TWO_QUBIT_GATES:
            self._apply(self.two_qubit_error(gate.trap, config))
        else:
            self._apply(self.params.e_1q)

    def on_round_end(self, round_: Round, config: IonConfiguration) -> None:
        if isinstance(round_, GateRound):
            self.gate_rounds += 1
        self.heat_trace.append(dict(sorted(self.heat.items())))


def accumulate_fidelity(trace: ExecutionTrace, params: PhysicsParams) -> RunMetrics:
    """Replay *trace* under *params* and return its counts, time and fidelity.

    Raises:
        TraceValidationError: the trace does not replay.
    """
    observer = FidelityObserver(params, [t.id for t in trace.machine.traps])
    replay_trace(trace, observer)
    exec_time = execution_time(trace, params)
    return RunMetrics(
        shuttle_count=trace.shuttle_count,
        swap_count=trace.swap_count,
        gate_rounds=observer.gate_rounds,
        rounds=len(trace.rounds),
        exec_time_us=exec_time,
        gate_fidelity_product=observer.product,
        coherence_factor=params.coherence(exec_time),
        heat=dict(sorted(observer.heat.items())),
        heat_trace=observer.heat_trace,
    )
