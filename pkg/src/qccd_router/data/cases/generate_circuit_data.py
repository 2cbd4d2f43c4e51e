"""Randomised circuits for routing properties, the fidelity suite and the near-optimality oracle."""

from __future__ import annotations

from faker import Faker

from qccd_router.config.env import TEST_DATA_SEED
from qccd_router.data.gate_name import SINGLE_QUBIT_GATES, TWO_QUBIT_GATES, GateName
from qccd_router.data.models.circuit import Circuit, Gate
from qccd_router.data.models.core import QubitId

_faker = Faker()
_faker.seed_instance(TEST_DATA_SEED + 2)

_PARAMETRIC = {GateName.RZ, GateName.CP}


def _pair(n_qubits: int) -> tuple[QubitId, QubitId]:
    a, b = _faker.random_sample(list(range(n_qubits)), length=2)
    return a, b


def generate_gate(gate_id: int, n_qubits: int, *, two_qubit_ratio: float = 0.8) -> Gate:
    """One random gate; parametric gates get an angle in ``[-pi, pi]``."""
    if n_qubits >= 2 and _faker.pyfloat(min_value=0, max_value=1) < two_qubit_ratio:
        name = _faker.random_element(sorted(TWO_QUBIT_GATES))
        qubits: tuple[QubitId, ...] = _pair(n_qubits)
    else:
        name = _faker.random_element(sorted(SINGLE_QUBIT_GATES))
        qubits = (_faker.random_int(min=0, max=n_qubits - 1),)
    params = (_faker.pyfloat(min_value=-3.14, max_value=3.14),) if name in _PARAMETRIC else ()
    return Gate(gate_id, name, qubits, params)


def generate_circuit(
    n_qubits: int | None = None, n_gates: int | None = None, *, two_qubit_ratio: float = 0.8
) -> Circuit:
    n_qubits = n_qubits if n_qubits is not None else _faker.random_int(min=2, max=12)
    n_gates = n_gates if n_gates is not None else _faker.random_int(min=1, max=40)
    gates = tuple(generate_gate(i, n_qubits, two_qubit_ratio=two_qubit_ratio) for i in range(n_gates))
    return Circuit(gates, n_qubits)


def generate_two_qubit_circuit(n_qubits: int, max_gates: int) -> Circuit:
    """CX-only circuit of 1..*max_gates* gates."""
    n_gates = _faker.random_int(min=1, max=max_gates)
    return Circuit(tuple(Gate(i, GateName.CX, _pair(n_qubits)) for i in range(n_gates)), n_qubits)


def generate_circuits(count: int, n_qubits: int | None = None, n_gates: int | None = None) -> list[Circuit]:
    return [generate_circuit(n_qubits, n_gates) for _ in range(count)]
