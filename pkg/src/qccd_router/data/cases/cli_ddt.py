"""DDT cases mapping command-line failures to exit codes.

``argv`` entries may contain ``{config}`` and ``{out}``; the test substitutes the written run
config and a temporary output directory. ``qasm`` (when set) is written next to the config as
``circuit.qasm``.
"""

from __future__ import annotations

from dataclasses import dataclass

import pytest

from qccd_router.data.cases.core import Case
from qccd_router.data.exit_codes import ExitCodes


@dataclass
class ExitCodeCase(Case):
    argv: list[str]
    expected: ExitCodes
    config: str | None = None
    qasm: str | None = None
    message_part: str | None = None


def run_config(topology: str, circuit: str, extra: str = "[weights]\n") -> str:
    """A minimal TOML run config; *topology* and *circuit* are the bodies of their tables."""
    return f"seed = 7\n\n[topology]\n{topology}\n\n[circuit]\n{circuit}\n\n{extra}"


LINEAR_2X4 = 'kind = "linear"\ntraps = 2\ncapacity = 4'
LINEAR_2X2 = 'kind = "linear"\ntraps = 2\ncapacity = 2'
QFT_4 = 'generator = "qft"\nn_qubits = 4'
QASM_FILE = 'file = "circuit.qasm"'

_ROUTE = ["route", "--config", "{config}", "--out-dir", "{out}"]

EXIT_CODE_CASES = [
    pytest.param(
        ExitCodeCase(title="Valid route run", argv=_ROUTE, expected=ExitCodes.OK, config=run_config(LINEAR_2X4, QFT_4)),
        id="ok",
    ),
    pytest.param(
        ExitCodeCase(title="Unknown subcommand", argv=["transpile"], expected=ExitCodes.USAGE),
        id="unknown-subcommand",
    ),
    pytest.param(
        ExitCodeCase(
            title="Missing config file",
            argv=["route", "--config", "{out}/absent.toml"],
            expected=ExitCodes.IO,
            message_part="absent.toml",
        ),
        id="missing-config",
    ),
    pytest.param(
        ExitCodeCase(
            title="Malformed TOML",
            argv=_ROUTE,
            expected=ExitCodes.CONFIG,
            config="[topology\nkind = 'linear'\n",
            message_part="invalid TOML",
        ),
        id="malformed-toml",
    ),
    pytest.param(
        ExitCodeCase(
            title="Both weights and sweep",
            argv=_ROUTE,
            expected=ExitCodes.CONFIG,
            config=run_config(LINEAR_2X4, QFT_4, "[weights]\n\n[sweep]\nretain_k = 2\n"),
        ),
        id="weights-and-sweep",
    ),
    pytest.param(
        ExitCodeCase(
            title="Route without weights",
            argv=_ROUTE,
            expected=ExitCodes.CONFIG,
            config=run_config(LINEAR_2X4, QFT_4, "[sweep]\nretain_k = 2\n"),
            message_part="[weights]",
        ),
        id="route-needs-weights",
    ),
    pytest.param(
        ExitCodeCase(
            title="Unknown weight key",
            argv=_ROUTE,
            expected=ExitCodes.CONFIG,
            config=run_config(LINEAR_2X4, QFT_4, "[weights]\ndelta = 3\n"),
            message_part="delta",
        ),
        id="unknown-weight",
    ),
    pytest.param(
        ExitCodeCase(
            title="Circuit larger than the machine",
            argv=_ROUTE,
            expected=ExitCodes.CAPACITY,
            config=run_config(LINEAR_2X4, 'generator = "qft"\nn_qubits = 10'),
        ),
        id="capacity",
    ),
    pytest.param(
        ExitCodeCase(
            title="Unsupported QASM gate",
            argv=_ROUTE,
            expected=ExitCodes.PARSE,
            config=run_config(LINEAR_2X4, QASM_FILE),
            qasm="OPENQASM 2.0;\nqreg q[2];\ncy q[0],q[1];\n",
            message_part="line 3",
        ),
        id="parse-error",
    ),
    pytest.param(
        ExitCodeCase(
            title="Full machine cannot make progress",
            argv=_ROUTE,
            expected=ExitCodes.ROUTING,
            config=run_config(LINEAR_2X2, QASM_FILE),
            qasm="OPENQASM 2.0;\nqreg q[4];\ncx q[0],q[2];\n",
        ),
        id="no-progress",
    ),
    pytest.param(
        ExitCodeCase(
            title="Malformed compare topology",
            argv=["compare", "--config", "{config}", "--out-dir", "{out}", "--topologies", "linear:8"],
            expected=ExitCodes.USAGE,
            config=run_config(LINEAR_2X4, QFT_4),
        ),
        id="bad-topology",
    ),
]
