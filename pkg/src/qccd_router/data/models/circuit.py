"""Circuit models: gates, whole circuits and their structure metrics."""

from __future__ import annotations

from dataclasses import dataclass, field

from qccd_router.data.errors import InvalidArgumentError
from qccd_router.data.gate_name import TWO_QUBIT_GATES, GateName
from qccd_router.data.models.core import GateId, QubitId


@dataclass(frozen=True)
class Gate:
    gate_id: GateId
    name: GateName
    qubits: tuple[QubitId, ...]
    params: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        expected = 2 if self.name in TWO_QUBIT_GATES else 1
        if len(self.qubits) != expected:
            raise InvalidArgumentError(f"Gate '{self.name}' expects {expected} qubit(s), got {len(self.qubits)}")
        if expected == 2 and self.qubits[0] == self.qubits[1]:
            raise InvalidArgumentError(f"Two-qubit gate {self.gate_id} has identical operands {self.qubits}")

    @property
    def is_two_qubit(self) -> bool:
        return len(self.qubits) == 2

    def partner(self, qubit: QubitId) -> QubitId:
        """The other operand of a two-qubit gate."""
        return self.qubits[1] if self.qubits[0] == qubit else self.qubits[0]


@dataclass(frozen=True)
class Circuit:
    """Gates in program order over ``n_qubits`` dense qubit indices."""

    gates: tuple[Gate, ...]
    n_qubits: int

    @property
    def two_qubit_count(self) -> int:
        return sum(1 for g in self.gates if g.is_two_qubit)


@dataclass(frozen=True)
class CircuitMetrics:
    depth: int
    two_q_count: int
    avg_2q_per_ts: float
    avg_ion_mov_per_ts: float
    movement_per_qubit: dict[QubitId, int] = field(default_factory=dict)

    @property
    def total_movements(self) -> int:
        return sum(self.movement_per_qubit.values())
