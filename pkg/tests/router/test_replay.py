"""Replay oracle: clean traces replay, tampered traces name the broken invariant."""

from __future__ import annotations

from collections.abc import Callable

import allure
import pytest

from qccd_router.data.errors import TraceValidationError
from qccd_router.data.models.trace import ChainRecord, ExecutionTrace, GateRound, ShuttleRound
from qccd_router.router.replay import Invariant, replay_trace, validate_trace

# ---------------------------------------------------------------------------
# Tampering helpers; each receives a deep copy of the two-trap trace
# (rounds: gate {0, 1}, shuttle of qubit 1 with one SWAP, gate {2}, gate {3})
# ---------------------------------------------------------------------------


def _shuttle(trace: ExecutionTrace) -> ShuttleRound:
    round_ = trace.rounds[1]
    assert isinstance(round_, ShuttleRound)
    return round_


def _gate_round(trace: ExecutionTrace, index: int) -> GateRound:
    round_ = trace.rounds[index]
    assert isinstance(round_, GateRound)
    return round_


def _drop_last_round(trace: ExecutionTrace) -> None:
    trace.rounds.pop()


def _reorder_gate_rounds(trace: ExecutionTrace) -> None:
    trace.rounds[2], trace.rounds[3] = trace.rounds[3], trace.rounds[2]


def _wrong_gate_trap(trace: ExecutionTrace) -> None:
    _gate_round(trace, 2).gates[0].trap = 0


def _drop_swaps(trace: ExecutionTrace) -> None:
    _shuttle(trace).shuttles[0].swaps = []


def _duplicate_hop(trace: ExecutionTrace) -> None:
    shuttles = _shuttle(trace).shuttles
    shuttles.append(shuttles[0].model_copy())


def _wrong_junction(trace: ExecutionTrace) -> None:
    _shuttle(trace).shuttles[0].junction = 5


def _wrong_origin(trace: ExecutionTrace) -> None:
    hop = _shuttle(trace).shuttles[0]
    hop.qubit = 4
    hop.swaps = []


def _misplaced_swap(trace: ExecutionTrace) -> None:
    _shuttle(trace).shuttles[0].swaps[0].position = 0


def _overfull_start(trace: ExecutionTrace) -> None:
    trace.initial_placement = [ChainRecord(trap=0, ions=[0, 1, 2, 3, 4]), ChainRecord(trap=1, ions=[5])]


def _missing_qubit(trace: ExecutionTrace) -> None:
    trace.initial_placement = [ChainRecord(trap=0, ions=[0, 1, 2]), ChainRecord(trap=1, ions=[3, 4])]


def _same_trap_twice(trace: ExecutionTrace) -> None:
    first = _gate_round(trace, 0)
    for gate in first.gates:
        gate.trap = 0
    trace.initial_placement = [ChainRecord(trap=0, ions=[0, 2, 3, 4]), ChainRecord(trap=1, ions=[1, 5])]


def _gate_mismatch(trace: ExecutionTrace) -> None:
    _gate_round(trace, 0).gates[0].qubits = [2, 0]


def _merged_gate_rounds(trace: ExecutionTrace) -> None:
    _gate_round(trace, 2).gates.extend(_gate_round(trace, 3).gates)
    trace.rounds.pop()


def _swap_in_unknown_trap(trace: ExecutionTrace) -> None:
    _shuttle(trace).shuttles[0].swaps[0].trap = 99


TAMPER_CASES = [
    pytest.param(_drop_last_round, Invariant.GATE_COVERAGE, id="dropped-round"),
    pytest.param(_reorder_gate_rounds, Invariant.GATE_ORDER, id="reordered-gates"),
    pytest.param(_wrong_gate_trap, Invariant.GATE_COLOCATION, id="wrong-gate-trap"),
    pytest.param(_drop_swaps, Invariant.EXIT_END, id="missing-swaps"),
    pytest.param(_duplicate_hop, Invariant.ROUND_CONFLICT, id="duplicate-hop"),
    pytest.param(_wrong_junction, Invariant.JUNCTION, id="wrong-junction"),
    pytest.param(_wrong_origin, Invariant.ION_LOCATION, id="wrong-origin"),
    pytest.param(_misplaced_swap, Invariant.SWAP_ADJACENCY, id="misplaced-swap"),
    pytest.param(_overfull_start, Invariant.CAPACITY, id="overfull-start"),
    pytest.param(_missing_qubit, Invariant.PLACEMENT, id="missing-qubit"),
    pytest.param(_same_trap_twice, Invariant.TRAP_CONFLICT, id="same-trap-twice"),
    pytest.param(_gate_mismatch, Invariant.GATE_COVERAGE, id="gate-mismatch"),
    pytest.param(_merged_gate_rounds, Invariant.GATE_ORDER, id="dependent-gates-share-round"),
    pytest.param(_swap_in_unknown_trap, Invariant.SWAP_ADJACENCY, id="swap-in-unknown-trap"),
]


class _Recorder:
    def __init__(self) -> None:
        self.events: list[str] = []

    def on_swap(self, swap: object, config: object) -> None:
        self.events.append("swap")

    def on_shuttle(self, op: object, config: object) -> None:
        self.events.append("shuttle")

    def on_gate(self, gate: object, config: object) -> None:
        self.events.append("gate")

    def on_round_end(self, round_: object, config: object) -> None:
        self.events.append("end")


@allure.suite("Router")
@allure.sub_suite("Replay oracle")
@pytest.mark.router
@pytest.mark.oracle
class TestReplay:
    @allure.title("Routed trace replays cleanly")
    @pytest.mark.smoke
    @pytest.mark.regression
    def test_clean_trace(self, trace: ExecutionTrace) -> None:
        final = validate_trace(trace)

        assert final.snapshot() == {0: (0, 2), 1: (1, 3, 4, 5)}

    @allure.title("Trace survives a JSON round trip")
    @pytest.mark.regression
    def test_json_round_trip(self, trace: ExecutionTrace) -> None:
        restored = ExecutionTrace.model_validate_json(trace.model_dump_json())

        assert validate_trace(restored) == validate_trace(trace)

    @allure.title("Observer sees every operation in order")
    @pytest.mark.regression
    def test_observer(self, trace: ExecutionTrace) -> None:
        recorder = _Recorder()

        replay_trace(trace, recorder)

        assert recorder.events == ["gate", "gate", "end", "swap", "shuttle", "end", "gate", "end", "gate", "end"]

    @allure.title("Tampered trace is rejected")
    @pytest.mark.regression
    @pytest.mark.parametrize(("tamper", "invariant"), TAMPER_CASES)
    def test_tampered(
        self, trace: ExecutionTrace, tamper: Callable[[ExecutionTrace], None], invariant: str
    ) -> None:
        broken = trace.model_copy(deep=True)
        tamper(broken)

        with pytest.raises(TraceValidationError) as error:
            validate_trace(broken)

        assert error.value.invariant == invariant
        assert str(error.value).startswith(f"[{invariant}]")
