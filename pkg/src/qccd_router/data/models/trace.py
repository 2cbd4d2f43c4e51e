"""Execution trace models: the schedule emitted by the router and written to trace.json."""

from __future__ import annotations

from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field

from qccd_router.config.artifacts import TRACE_VERSION
from qccd_router.data.gate_name import GateName
from qccd_router.data.models.core import GateId, JunctionId, QubitId, TrapId
from qccd_router.data.models.machine import MachineSpec
from qccd_router.data.models.scoring import ScoreWeights


class SwapRecord(BaseModel):
    """Exchange of the ions at ``position`` and ``position + 1`` of ``trap``."""

    kind: Literal["swap"] = "swap"
    trap: TrapId
    position: int
    qubits: tuple[QubitId, QubitId]
    duration_us: float | None = None


class ShuttleOpRecord(BaseModel):
    """One trap-to-trap hop, preceded by the SWAPs that bring the ion to its exit end."""

    kind: Literal["shuttle"] = "shuttle"
    op_id: int
    qubit: QubitId
    from_trap: TrapId
    to_trap: TrapId
    junction: JunctionId
    swaps: list[SwapRecord] = Field(default_factory=list)
    duration_us: float | None = None


class GateRecord(BaseModel):
    kind: Literal["gate"] = "gate"
    gate_id: GateId
    name: GateName
    qubits: list[QubitId]
    trap: TrapId
    duration_us: float | None = None


class ShuttleRound(BaseModel):
    kind: Literal["shuttle"] = "shuttle"
    index: int
    shuttles: list[ShuttleOpRecord]
    duration_us: float | None = None

    @property
    def swap_count(self) -> int:
        return sum(len(op.swaps) for op in self.shuttles)


class GateRound(BaseModel):
    kind: Literal["gate"] = "gate"
    index: int
    gates: list[GateRecord]
    duration_us: float | None = None


Round = Annotated[ShuttleRound | GateRound, Field(discriminator="kind")]


class GateSpec(BaseModel):
    """A circuit gate as recorded in the trace header."""

    id: GateId
    name: GateName
    qubits: list[QubitId]
    params: list[float] = Field(default_factory=list)


class ChainRecord(BaseModel):
    trap: TrapId
    ions: list[QubitId]


class ExecutionTrace(BaseModel):
    model_config = ConfigDict(ser_json_inf_nan="constants")

    version: str = TRACE_VERSION
    seed: int = 0
    n_qubits: int
    machine: MachineSpec
    initial_placement: list[ChainRecord]
    gates: list[GateSpec]
    rounds: list[Round] = Field(default_factory=list)
    weights: ScoreWeights | None = None

    @property
    def shuttle_rounds(self) -> list[ShuttleRound]:
        return [r for r in self.rounds if isinstance(r, ShuttleRound)]

    @property
    def gate_rounds(self) -> list[GateRound]:
        return [r for r in self.rounds if isinstance(r, GateRound)]

    @property
    def shuttle_count(self) -> int:
        return sum(len(r.shuttles) for r in self.shuttle_rounds)

    @property
    def swap_count(self) -> int:
        return sum(r.swap_count for r in self.shuttle_rounds)
