"""DDT cases for round durations under the default physics parameters."""

from __future__ import annotations

from dataclasses import dataclass

import pytest

from qccd_router.data.cases.core import Case
from qccd_router.data.gate_name import GateName
from qccd_router.data.models.core import TrapId
from qccd_router.data.models.trace import GateRecord, GateRound, Round, ShuttleOpRecord, ShuttleRound, SwapRecord


@dataclass
class RoundDurationCase(Case):
    round_: Round
    expected_us: float


def _gate(gate_id: int, name: GateName, trap: TrapId) -> GateRecord:
    qubits = [2 * gate_id, 2 * gate_id + 1] if name is not GateName.H else [2 * gate_id]
    return GateRecord(gate_id=gate_id, name=name, qubits=qubits, trap=trap)


def _hop(op_id: int, qubit: int, from_trap: TrapId, to_trap: TrapId, swaps: int) -> ShuttleOpRecord:
    return ShuttleOpRecord(
        op_id=op_id,
        qubit=qubit,
        from_trap=from_trap,
        to_trap=to_trap,
        junction=min(from_trap, to_trap),
        swaps=[SwapRecord(trap=from_trap, position=i, qubits=(qubit, 100 + i)) for i in range(swaps)],
    )


ROUND_DURATION_CASES = [
    pytest.param(
        RoundDurationCase(
            title="Concurrent two-qubit gates in three traps",
            round_=GateRound(
                index=0,
                gates=[_gate(0, GateName.CX, 0), _gate(1, GateName.CX, 1), _gate(2, GateName.CX, 2)],
            ),
            expected_us=40.0,
        ),
        id="parallel-gates",
    ),
    pytest.param(
        RoundDurationCase(
            title="Serial gates inside one trap",
            round_=GateRound(index=0, gates=[_gate(0, GateName.CX, 0), _gate(1, GateName.CZ, 0)]),
            expected_us=80.0,
        ),
        id="serial-gates",
    ),
    pytest.param(
        RoundDurationCase(
            title="Single-qubit gate overlaps a two-qubit gate elsewhere",
            round_=GateRound(index=0, gates=[_gate(0, GateName.CX, 0), _gate(1, GateName.H, 1)]),
            expected_us=40.0,
        ),
        id="mixed-traps",
    ),
    pytest.param(
        RoundDurationCase(
            title="Busiest trap sets the reorder time",
            round_=ShuttleRound(index=0, shuttles=[_hop(0, 0, 0, 1, swaps=2), _hop(1, 5, 3, 2, swaps=0)]),
            expected_us=2 * 120.0 + 80.0 + 100.0,
        ),
        id="shuttle-with-swaps",
    ),
    pytest.param(
        RoundDurationCase(
            title="Hop without SWAPs",
            round_=ShuttleRound(index=0, shuttles=[_hop(0, 0, 0, 1, swaps=0)]),
            expected_us=180.0,
        ),
        id="bare-hop",
    ),
    pytest.param(
        RoundDurationCase(title="Empty gate round", round_=GateRound(index=0, gates=[]), expected_us=0.0),
        id="empty-gate-round",
    ),
    pytest.param(
        RoundDurationCase(title="Empty shuttle round", round_=ShuttleRound(index=0, shuttles=[]), expected_us=0.0),
        id="empty-shuttle-round",
    ),
]
