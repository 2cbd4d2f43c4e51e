"""DDT cases for the QASM parser, the gate DAG, the benchmark generators and circuit metrics."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import pytest

from qccd_router.data.benchmarks import Benchmark
from qccd_router.data.cases.core import Case
from qccd_router.data.gate_name import GateName
from qccd_router.data.models.circuit import Gate
from qccd_router.data.models.core import GateId, QubitId

_HEADER = 'OPENQASM 2.0;\ninclude "qelib1.inc";\n'


@dataclass
class ParseCase(Case):
    text: str
    names: list[GateName]
    qubits: list[tuple[QubitId, ...]]
    n_qubits: int
    params: list[tuple[float, ...]] = field(default_factory=list)


@dataclass
class ParseErrorCase(Case):
    text: str
    line: int
    message_part: str


@dataclass
class DagCase(Case):
    gates: list[Gate]
    edges: list[tuple[GateId, GateId]]
    sources: list[GateId]
    depth: int


@dataclass
class GeneratorCase(Case):
    benchmark: Benchmark
    n_qubits: int
    two_q_count: int
    depth: int | None = None


@dataclass
class MovementCase(Case):
    gates: list[Gate]
    movement_per_qubit: dict[QubitId, int]
    depth: int
    avg_ion_mov_per_ts: float


def cx(gate_id: GateId, a: QubitId, b: QubitId) -> Gate:
    return Gate(gate_id, GateName.CX, (a, b))


def h(gate_id: GateId, q: QubitId) -> Gate:
    return Gate(gate_id, GateName.H, (q,))


PARSE_CASES = [
    pytest.param(
        ParseCase(
            title="Single two-qubit statement",
            text="qreg q[2];\ncx q[0],q[1];\n",
            names=[GateName.CX],
            qubits=[(0, 1)],
            n_qubits=2,
        ),
        id="single-cx",
    ),
    pytest.param(
        ParseCase(
            title="Program order is preserved",
            text=_HEADER + "qreg q[3];\nh q[0];\ncx q[0],q[1];\ncx q[1],q[2];\n",
            names=[GateName.H, GateName.CX, GateName.CX],
            qubits=[(0,), (0, 1), (1, 2)],
            n_qubits=3,
        ),
        id="program-order",
    ),
    pytest.param(
        ParseCase(
            title="Angle expressions and comments",
            text=_HEADER + "qreg q[2];\n// phase kick\nrz(pi/2) q[0];\ncp(-pi/4) q[0],q[1]; // trailing\n",
            names=[GateName.RZ, GateName.CP],
            qubits=[(0,), (0, 1)],
            n_qubits=2,
            params=[(math.pi / 2,), (-math.pi / 4,)],
        ),
        id="angles-and-comments",
    ),
    pytest.param(
        ParseCase(
            title="Every supported gate",
            text="qreg r[3];\nh r[0];\nx r[1];\nrz(0.5) r[2];\ncx r[0],r[1];\ncp(1e-1) r[1],r[2];\n"
            "cz r[0],r[2];\nswap r[1],r[0];\n",
            names=[GateName.H, GateName.X, GateName.RZ, GateName.CX, GateName.CP, GateName.CZ, GateName.SWAP],
            qubits=[(0,), (1,), (2,), (0, 1), (1, 2), (0, 2), (1, 0)],
            n_qubits=3,
            params=[(), (), (0.5,), (), (0.1,), (), ()],
        ),
        id="all-gates",
    ),
    pytest.param(
        ParseCase(
            title="Register without gates",
            text=_HEADER + "qreg q[4];\n",
            names=[],
            qubits=[],
            n_qubits=4,
        ),
        id="empty-register",
    ),
]

PARSE_ERROR_CASES = [
    pytest.param(
        ParseErrorCase(
            title="Unsupported gate names the gate",
            text="OPENQASM 2.0;\nqreg q[2];\ncy q[0],q[1];\n",
            line=3,
            message_part="'cy'",
        ),
        id="unsupported-gate",
    ),
    pytest.param(
        ParseErrorCase(
            title="Wrong header version",
            text="OPENQASM 3.0;\nqreg q[2];\n",
            line=1,
            message_part="OPENQASM",
        ),
        id="bad-header",
    ),
    pytest.param(
        ParseErrorCase(
            title="Qubit index out of range",
            text="qreg q[2];\nh q[0];\ncx q[0],q[2];\n",
            line=3,
            message_part="out of range",
        ),
        id="index-out-of-range",
    ),
    pytest.param(
        ParseErrorCase(
            title="Gate before register",
            text="h q[0];\nqreg q[1];\n",
            line=1,
            message_part="qreg",
        ),
        id="gate-before-qreg",
    ),
    pytest.param(
        ParseErrorCase(
            title="Missing parameter",
            text="qreg q[1];\nrz q[0];\n",
            line=2,
            message_part="parameter",
        ),
        id="missing-parameter",
    ),
    pytest.param(
        ParseErrorCase(
            title="Identical operands",
            text="qreg q[2];\ncx q[1],q[1];\n",
            line=2,
            message_part="distinct",
        ),
        id="identical-operands",
    ),
    pytest.param(
        ParseErrorCase(
            title="Second register",
            text="qreg q[2];\nqreg r[2];\n",
            line=2,
            message_part="qreg",
        ),
        id="second-qreg",
    ),
]

DAG_CASES = [
    pytest.param(
        DagCase(
            title="Shared-qubit chain and an independent gate",
            gates=[cx(0, 0, 1), cx(1, 1, 2), cx(2, 3, 4)],
            edges=[(0, 1)],
            sources=[0, 2],
            depth=2,
        ),
        id="chain-and-independent",
    ),
    pytest.param(
        DagCase(title="Empty circuit", gates=[], edges=[], sources=[], depth=0),
        id="empty",
    ),
    pytest.param(
        DagCase(
            title="Single-qubit gates fold into two-qubit layers",
            gates=[h(0, 0), cx(1, 0, 1), h(2, 1), cx(3, 1, 2)],
            edges=[(0, 1), (1, 2), (2, 3)],
            sources=[0],
            depth=2,
        ),
        id="folded-single-qubit",
    ),
    pytest.param(
        DagCase(title="Single-qubit only circuit", gates=[h(0, 0), h(1, 1)], edges=[], sources=[0, 1], depth=1),
        id="single-qubit-only",
    ),
]

GENERATOR_CASES = [
    pytest.param(
        GeneratorCase(title="QFT 40", benchmark=Benchmark.QFT, n_qubits=40, two_q_count=780, depth=77),
        id="qft-40",
    ),
    pytest.param(
        GeneratorCase(title="QFT 4", benchmark=Benchmark.QFT, n_qubits=4, two_q_count=6, depth=5),
        id="qft-4",
    ),
    pytest.param(
        GeneratorCase(title="QFT 2", benchmark=Benchmark.QFT, n_qubits=2, two_q_count=1, depth=1),
        id="qft-2",
    ),
    pytest.param(
        GeneratorCase(title="QAOA 40", benchmark=Benchmark.QAOA, n_qubits=40, two_q_count=780, depth=39),
        id="qaoa-40",
    ),
    pytest.param(
        GeneratorCase(title="QAOA triangle", benchmark=Benchmark.QAOA, n_qubits=3, two_q_count=3, depth=3),
        id="qaoa-3",
    ),
    pytest.param(
        GeneratorCase(title="Cuccaro 40", benchmark=Benchmark.CUCCARO, n_qubits=40, two_q_count=305),
        id="cuccaro-40",
    ),
    pytest.param(
        GeneratorCase(title="Cuccaro 4", benchmark=Benchmark.CUCCARO, n_qubits=4, two_q_count=17),
        id="cuccaro-4",
    ),
    pytest.param(
        GeneratorCase(title="Draper 40", benchmark=Benchmark.DRAPER, n_qubits=40, two_q_count=590),
        id="draper-40",
    ),
    pytest.param(
        GeneratorCase(title="Draper 4", benchmark=Benchmark.DRAPER, n_qubits=4, two_q_count=5),
        id="draper-4",
    ),
    pytest.param(
        GeneratorCase(title="RND10 40", benchmark=Benchmark.RND10, n_qubits=40, two_q_count=800, depth=40),
        id="rnd10-40",
    ),
    pytest.param(
        GeneratorCase(title="RND80 40", benchmark=Benchmark.RND80, n_qubits=40, two_q_count=800, depth=40),
        id="rnd80-40",
    ),
]

MOVEMENT_CASES = [
    pytest.param(
        MovementCase(
            title="Repeated partner never moves",
            gates=[cx(0, 0, 1), cx(1, 0, 1)],
            movement_per_qubit={0: 0, 1: 0},
            depth=2,
            avg_ion_mov_per_ts=0.0,
        ),
        id="repeated-partner",
    ),
    pytest.param(
        MovementCase(
            title="Partner change counts once",
            gates=[cx(0, 0, 1), cx(1, 0, 2)],
            movement_per_qubit={0: 1, 1: 0, 2: 0},
            depth=2,
            avg_ion_mov_per_ts=0.5,
        ),
        id="partner-change",
    ),
    pytest.param(
        MovementCase(
            title="Single-qubit only circuit",
            gates=[h(0, 0), h(1, 1)],
            movement_per_qubit={0: 0, 1: 0},
            depth=1,
            avg_ion_mov_per_ts=0.0,
        ),
        id="single-qubit-only",
    ),
    pytest.param(
        MovementCase(
            title="Alternating partners",
            gates=[cx(0, 0, 1), cx(1, 0, 2), cx(2, 0, 1)],
            movement_per_qubit={0: 2, 1: 0, 2: 0},
            depth=3,
            avg_ion_mov_per_ts=2 / 3,
        ),
        id="alternating-partners",
    ),
]

# Ratio targets for the random presets: (benchmark, target, relative tolerance)
RANDOM_PRESET_TARGETS = [
    pytest.param(Benchmark.RND10, 2.95, 0.15, id="rnd10"),
    pytest.param(Benchmark.RND80, 30.1, 0.15, id="rnd80"),
]
