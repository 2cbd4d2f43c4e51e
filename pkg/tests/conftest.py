"""Root conftest.py: session-scoped machines, weights and physics shared by all tests."""

from __future__ import annotations

import os
from collections.abc import Generator
from pathlib import Path

import allure
import pytest

from qccd_router.circuit.gate_dag import build_gate_dag
from qccd_router.data.cases.circuit_ddt import cx
from qccd_router.data.models.machine import MachineGraph
from qccd_router.data.models.physics import PhysicsParams
from qccd_router.data.models.scoring import ScoreWeights
from qccd_router.data.models.trace import ExecutionTrace
from qccd_router.data.tags import Tags
from qccd_router.router.ion_configuration import IonConfiguration
from qccd_router.router.router import route
from qccd_router.topology.builders import build_grid, build_linear, build_ring
from qccd_router.utils.log_utils import configure_logging


def pytest_configure(config: pytest.Config) -> None:
    """Route package log records through the ``QCCD_LOG_LEVEL`` handler and check every tag is a marker."""
    configure_logging()
    registered = {line.split(":", 1)[0].strip() for line in config.getini("markers")}
    missing = sorted(set(Tags) - registered)
    if missing:
        raise pytest.UsageError(f"Tags without a registered marker: {missing}")


# ---------------------------------------------------------------------------
# Session-scoped machines
# ---------------------------------------------------------------------------


@pytest.fixture(scope="session")
def linear_8x6() -> MachineGraph:
    """Eight traps of six ions in a line."""
    return build_linear(8, 6)


@pytest.fixture(scope="session")
def ring_8x6() -> MachineGraph:
    """Eight traps of six ions in a ring."""
    return build_ring(8, 6)


@pytest.fixture(scope="session")
def grid_2x4x6() -> MachineGraph:
    """A 2 x 4 grid of six-ion traps."""
    return build_grid(2, 4, 6)


@pytest.fixture(scope="session")
def linear_2x4() -> MachineGraph:
    return build_linear(2, 4)


# ---------------------------------------------------------------------------
# Session-scoped weights and physics
# ---------------------------------------------------------------------------


@pytest.fixture(scope="session")
def default_weights() -> ScoreWeights:
    """All component weights 1, threshold -350, a seven-layer window."""
    return ScoreWeights()


@pytest.fixture(scope="session")
def physics() -> PhysicsParams:
    """Default durations and error rates."""
    return PhysicsParams()


@pytest.fixture(scope="session")
def noiseless_physics() -> PhysicsParams:
    """Default durations with every error rate zero."""
    return PhysicsParams.noiseless()


# ---------------------------------------------------------------------------
# Routed traces
# ---------------------------------------------------------------------------


@pytest.fixture
def trace() -> ExecutionTrace:
    """Six ions in two traps of four; rounds are gate, shuttle, gate, gate.

    Qubit 1 crosses to trap 1 with one SWAP for ``cx(1, 3)``, then meets qubit 4 in place.
    """
    machine = build_linear(2, 4)
    dag = build_gate_dag([cx(0, 0, 2), cx(1, 3, 4), cx(2, 1, 3), cx(3, 1, 4)], n_qubits=6)
    start = IonConfiguration(machine, {0: [0, 1, 2], 1: [3, 4, 5]})
    return route(dag, machine, ScoreWeights(), placement=start)


# ---------------------------------------------------------------------------
# Allure reporting hooks
# ---------------------------------------------------------------------------


def pytest_sessionfinish(session: pytest.Session, exitstatus: int | pytest.ExitCode) -> None:
    """Runs once after the entire test session.

    Writes ``allure-results/environment.properties`` so the Allure report shows the env name,
    log level and test-data seed on the **Environment** tab.

    Args:
        session:    The pytest session object.
        exitstatus: Integer exit code (0 = all passed).
    """
    from qccd_router.config.env import ENV_NAME, LOG_LEVEL, TEST_DATA_SEED

    allure_dir = Path("allure-results")
    allure_dir.mkdir(exist_ok=True)
    (allure_dir / "environment.properties").write_text(
        f"ENV={ENV_NAME}\n"
        f"LOG_LEVEL={LOG_LEVEL}\n"
        f"TEST_DATA_SEED={TEST_DATA_SEED}\n"
        f"WORKER={os.getenv('PYTEST_XDIST_WORKER', 'main')}\n",
        encoding="utf-8",
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item: pytest.Item, call: pytest.CallInfo[None]) -> Generator[None, None, None]:
    """Attach the routed trace to Allure whenever a test holding a ``trace`` fixture fails.

    Args:
        item: The pytest test item being executed.
        call: Information about the current test phase (setup / call / teardown).
    """
    import pluggy

    outcome: pluggy.Result[pytest.TestReport] = yield  # type: ignore[assignment]
    report: pytest.TestReport = outcome.get_result()

    funcargs: dict[str, object] = getattr(item, "funcargs", {})
    trace = funcargs.get("trace")
    if report.failed and call.when == "call" and isinstance(trace, ExecutionTrace):
        allure.attach(
            trace.model_dump_json(indent=2),
            name="trace.json",
            attachment_type=allure.attachment_type.JSON,
        )
