"""QASM 2.0 subset parser."""

from __future__ import annotations

import math
from pathlib import Path

import allure
import pytest

from qccd_router.circuit.qasm_parser import parse_circuit, parse_circuit_file
from qccd_router.data.cases.circuit_ddt import PARSE_CASES, PARSE_ERROR_CASES, ParseCase, ParseErrorCase
from qccd_router.data.errors import CircuitParseError


@allure.suite("Circuit")
@allure.sub_suite("QASM parser")
@pytest.mark.circuit
class TestQasmParser:
    """Supported statements, angle expressions and error lines."""

    # ------------------------------------------------------------------
    # Positive DDT
    # ------------------------------------------------------------------

    @allure.title("Parse QASM: {case}")  # type: ignore[misc]
    @pytest.mark.smoke
    @pytest.mark.regression
    @pytest.mark.parametrize("case", PARSE_CASES)
    def test_parse(self, case: ParseCase) -> None:
        circuit = parse_circuit(case.text)

        assert circuit.n_qubits == case.n_qubits
        assert [g.name for g in circuit.gates] == case.names
        assert [g.qubits for g in circuit.gates] == case.qubits
        assert [g.gate_id for g in circuit.gates] == list(range(len(case.names)))
        if case.params:
            for gate, expected in zip(circuit.gates, case.params, strict=True):
                assert gate.params == pytest.approx(expected, abs=1e-12)

    # ------------------------------------------------------------------
    # Negative DDT
    # ------------------------------------------------------------------

    @allure.title("Should NOT parse QASM: {case}")  # type: ignore[misc]
    @pytest.mark.regression
    @pytest.mark.parametrize("case", PARSE_ERROR_CASES)
    def test_parse_error(self, case: ParseErrorCase) -> None:
        with pytest.raises(CircuitParseError) as exc_info:
            parse_circuit(case.text)

        assert exc_info.value.line == case.line
        assert case.message_part in str(exc_info.value)
        assert str(exc_info.value).startswith(f"line {case.line}:")

    # ------------------------------------------------------------------
    # Files
    # ------------------------------------------------------------------

    @allure.title("Parse a QASM file from disk")
    @pytest.mark.regression
    def test_parse_file(self, tmp_path: Path) -> None:
        path = tmp_path / "bell.qasm"
        path.write_text('OPENQASM 2.0;\ninclude "qelib1.inc";\nqreg q[2];\nh q[0];\ncx q[0],q[1];\n', encoding="utf-8")

        circuit = parse_circuit_file(path)

        assert circuit.n_qubits == 2
        assert circuit.two_qubit_count == 1

    @allure.title("Missing QASM file raises FileNotFoundError")
    @pytest.mark.regression
    def test_missing_file(self, tmp_path: Path) -> None:
        with pytest.raises(FileNotFoundError, match="absent.qasm"):
            parse_circuit_file(tmp_path / "absent.qasm")

    @allure.title("Nested angle arithmetic follows operator precedence")
    @pytest.mark.regression
    def test_angle_precedence(self) -> None:
        circuit = parse_circuit("qreg q[1];\nrz(pi - pi/4*2) q[0];\nrz(-(1+1)/4) q[0];\n")

        assert circuit.gates[0].params[0] == pytest.approx(math.pi / 2)
        assert circuit.gates[1].params[0] == pytest.approx(-0.5)
