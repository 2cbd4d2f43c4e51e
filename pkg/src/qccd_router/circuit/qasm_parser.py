"""Parser for the supported OPENQASM 2.0 subset.

Grammar (pyparsing)::

    program   := [header] { include | qreg | gate }
    header    := "OPENQASM" "2.0" ";"
    qreg      := "qreg" IDENT "[" INT "]" ";"
    gate      := IDENT [ "(" expr {"," expr} ")" ] ref {"," ref} ";"
    ref       := IDENT "[" INT "]"

``//`` comments are ignored. Angle expressions accept numbers, ``pi``, unary signs and
``+ - * /``.
"""

from __future__ import annotations

import math
import operator
from collections.abc import Callable
from pathlib import Path

import pyparsing as pp

from qccd_router.data.errors import CircuitParseError, ErrorMessages
from qccd_router.data.gate_name import PARAMETRIC_GATES, TWO_QUBIT_GATES, GateName
from qccd_router.data.models.circuit import Circuit, Gate

_BINARY_OPS: dict[str, Callable[[float, float], float]] = {
    "+": operator.add,
    "-": operator.sub,
    "*": operator.mul,
    "/": operator.truediv,
}


def _fold_binary(tokens: pp.ParseResults) -> float:
    seq = tokens[0]
    value = float(seq[0])
    for op, rhs in zip(seq[1::2], seq[2::2], strict=True):
        value = _BINARY_OPS[op](value, float(rhs))
    return value


def _apply_sign(tokens: pp.ParseResults) -> float:
    sign, value = tokens[0]
    return -float(value) if sign == "-" else float(value)


class _Grammar:
    ident = pp.Word(pp.alphas + "_", pp.alphanums + "_")
    integer = pp.Word(pp.nums).set_parse_action(lambda t: int(t[0]))
    number = pp.Regex(r"(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?").set_parse_action(lambda t: float(t[0]))
    pi = pp.CaselessKeyword("pi").set_parse_action(lambda: math.pi)
    semi = pp.Suppress(";")

    expr = pp.infix_notation(
        number | pi,
        [
            (pp.one_of("+ -"), 1, pp.OpAssoc.RIGHT, _apply_sign),
            (pp.one_of("* /"), 2, pp.OpAssoc.LEFT, _fold_binary),
            (pp.one_of("+ -"), 2, pp.OpAssoc.LEFT, _fold_binary),
        ],
    )

    header = pp.Keyword("OPENQASM") + pp.Regex(r"[^;]*")("version") + semi
    include = pp.Keyword("include") + pp.QuotedString('"') + semi
    qreg = pp.Keyword("qreg") + ident("name") + pp.Suppress("[") + integer("size") + pp.Suppress("]") + semi
    ref = pp.Group(ident("reg") + pp.Suppress("[") + integer("index") + pp.Suppress("]"))
    gate = (
        ident("name")
        + pp.Optional(pp.Suppress("(") + pp.Group(pp.DelimitedList(expr))("params") + pp.Suppress(")"))
        + pp.Group(pp.DelimitedList(ref))("args")
        + semi
    )


def _tagged(kind: str, element: pp.ParserElement) -> pp.ParserElement:
    """Wrap *element* so each match yields ``(kind, loc, tokens)``."""
    return pp.Group(element.copy()).set_parse_action(lambda s, loc, toks: [(kind, loc, toks[0])])


_PROGRAM = pp.ZeroOrMore(
    _tagged("header", _Grammar.header)
    | _tagged("include", _Grammar.include)
    | _tagged("qreg", _Grammar.qreg)
    | _tagged("gate", _Grammar.gate)
).ignore(pp.cpp_style_comment)


def parse_circuit(text: str) -> Circuit:
    """Parse QASM *text* into a :class:`Circuit` with gates in program order.

    Raises:
        CircuitParseError: unknown gate, malformed header, gate before ``qreg``, bad arity or
            out-of-range qubit index; the error carries the 1-based source line.
    """
    try:
        statements = _PROGRAM.parse_string(text, parse_all=True)
    except pp.ParseException as exc:
        raise CircuitParseError(f"syntax error: {exc.msg}", exc.lineno) from None

    register: tuple[str, int] | None = None
    gates: list[Gate] = []
    for position, (kind, loc, tokens) in enumerate(statements):
        line = pp.lineno(loc, text)
        if kind == "header":
            if position != 0 or tokens["version"].strip() != "2.0":
                raise CircuitParseError(ErrorMessages.MALFORMED_HEADER, line)
        elif kind == "qreg":
            if register is not None:
                raise CircuitParseError(ErrorMessages.SECOND_QREG, line)
            register = (tokens["name"], tokens["size"])
        elif kind == "gate":
            if register is None:
                raise CircuitParseError(ErrorMessages.MISSING_QREG, line)
            gates.append(_build_gate(len(gates), tokens, register, line))

    return Circuit(gates=tuple(gates), n_qubits=register[1] if register else 0)


def parse_circuit_file(path: Path) -> Circuit:
    """Read and parse a QASM file; a missing file raises ``FileNotFoundError``."""
    if not path.is_file():
        raise FileNotFoundError(ErrorMessages.file_not_found(str(path)))
    return parse_circuit(path.read_text(encoding="utf-8"))


def _build_gate(gate_id: int, tokens: pp.ParseResults, register: tuple[str, int], line: int) -> Gate:
    raw_name = str(tokens["name"])
    try:
        name = GateName(raw_name)
    except ValueError:
        raise CircuitParseError(ErrorMessages.unknown_gate(raw_name), line) from None

    params = tuple(float(p) for p in tokens["params"]) if "params" in tokens else ()
    expected_params = 1 if name in PARAMETRIC_GATES else 0
    if len(params) != expected_params:
        raise CircuitParseError(f"Gate '{name}' expects {expected_params} parameter(s), got {len(params)}", line)

    reg_name, size = register
    qubits: list[int] = []
    for ref in tokens["args"]:
        if ref["reg"] != reg_name:
            raise CircuitParseError(f"Unknown register '{ref['reg']}'", line)
        index = int(ref["index"])
        if index >= size:
            raise CircuitParseError(ErrorMessages.qubit_out_of_range(index, size), line)
        qubits.append(index)

    expected_qubits = 2 if name in TWO_QUBIT_GATES else 1
    if len(qubits) != expected_qubits:
        raise CircuitParseError(f"Gate '{name}' expects {expected_qubits} qubit(s), got {len(qubits)}", line)
    if expected_qubits == 2 and qubits[0] == qubits[1]:
        raise CircuitParseError(f"Gate '{name}' needs two distinct qubits", line)
    return Gate(gate_id, name, tuple(qubits), params)
