"""Hop decomposition, conflict DAG and round extraction."""

from __future__ import annotations

import allure
import pytest

from qccd_router.data.cases.generate_move_data import MoveSet, generate_move_sets
from qccd_router.data.cases.shuttle_ddt import DECOMPOSE_CASES, EXTRACT_CASES, DecomposeCase, ExtractCase
from qccd_router.data.errors import ShuttleInvariantError
from qccd_router.router.ion_configuration import IonConfiguration
from qccd_router.shuttle.shuttle_dag import Move, ShuttleOp, decompose_moves, extract_rounds
from qccd_router.shuttle.swaps import expand_swaps
from qccd_router.topology.builders import build_linear

MOVE_SETS = generate_move_sets(500)


def _ids(rounds: list[list[ShuttleOp]]) -> list[list[int]]:
    return [sorted(op.op_id for op in ops) for ops in rounds]


def _assert_conflict_free(rounds: list[list[ShuttleOp]]) -> None:
    for ops in rounds:
        junctions = [op.junction for op in ops]
        qubits = [op.qubit for op in ops]
        assert len(junctions) == len(set(junctions))
        assert len(qubits) == len(set(qubits))


@allure.suite("Shuttle")
@allure.sub_suite("Shuttle DAG")
@pytest.mark.shuttle
class TestShuttleDag:
    @allure.title("Decompose moves: {case}")  # type: ignore[misc]
    @pytest.mark.smoke
    @pytest.mark.regression
    @pytest.mark.parametrize("case", DECOMPOSE_CASES)
    def test_decompose(self, case: DecomposeCase) -> None:
        dag = decompose_moves(case.moves, case.machine())

        assert [(op.qubit, op.from_trap, op.to_trap) for op in dag.ops] == case.hops
        assert [op.op_id for op in dag.ops] == list(range(len(case.hops)))
        assert dag.edges == case.edges
        assert dag.level_count == case.level_count

    @allure.title("Extract rounds: {case}")  # type: ignore[misc]
    @pytest.mark.smoke
    @pytest.mark.regression
    @pytest.mark.parametrize("case", EXTRACT_CASES)
    def test_extract(self, case: ExtractCase) -> None:
        machine = case.machine()
        dag = decompose_moves(case.moves, machine)

        assert _ids(extract_rounds(dag)) == case.level_rounds
        assert _ids(extract_rounds(dag, guard=IonConfiguration(machine, case.chains))) == case.guarded_rounds

    @allure.title("Ops carry the junction between their traps")
    @pytest.mark.regression
    def test_junction_ids(self) -> None:
        machine = build_linear(4, 2)

        dag = decompose_moves([Move(0, (3, 2, 1))], machine)

        assert [op.junction for op in dag.ops] == [2, 1]

    @allure.title("Moves that cannot fit raise")
    @pytest.mark.regression
    def test_overfull_guard(self) -> None:
        machine = build_linear(2, 1)
        start = IonConfiguration(machine, {0: [0], 1: [1]})

        with pytest.raises(ShuttleInvariantError, match="overfills trap 1"):
            extract_rounds(decompose_moves([Move(0, (0, 1))], machine), guard=start)

    @allure.title("Empty move list gives no rounds")
    @pytest.mark.regression
    def test_empty(self) -> None:
        dag = decompose_moves([], build_linear(2, 2))

        assert dag.hop_count == 0
        assert extract_rounds(dag) == []


@allure.suite("Shuttle")
@allure.sub_suite("Round extraction properties")
@pytest.mark.shuttle
class TestRoundProperties:
    @allure.title("Rounds are conflict free, keep every hop and match the DAG levels")
    @pytest.mark.regression
    @pytest.mark.parametrize("move_set", MOVE_SETS)
    def test_level_extraction(self, move_set: MoveSet) -> None:
        dag = decompose_moves(move_set.moves, move_set.machine)

        rounds = extract_rounds(dag)

        _assert_conflict_free(rounds)
        assert sum(len(ops) for ops in rounds) == move_set.hop_count == dag.hop_count
        assert len(rounds) == dag.level_count

    @allure.title("Guarded extraction without capacity pressure equals level extraction")
    @pytest.mark.regression
    @pytest.mark.parametrize("move_set", MOVE_SETS[:100])
    def test_guarded_without_pressure(self, move_set: MoveSet) -> None:
        dag = decompose_moves(move_set.moves, move_set.machine)

        assert _ids(extract_rounds(dag, guard=move_set.start)) == _ids(extract_rounds(dag))

    @allure.title("Executing the rounds lands every ion at its last destination")
    @pytest.mark.regression
    @pytest.mark.parametrize("move_set", MOVE_SETS[:100])
    def test_rounds_execute(self, move_set: MoveSet) -> None:
        config = move_set.start
        for ops in extract_rounds(decompose_moves(move_set.moves, move_set.machine)):
            config = expand_swaps(ops, config).config

        final = {m.qubit: m.route[-1] for m in move_set.moves}
        assert all(config.trap_of(q) == trap for q, trap in final.items())
        assert config.qubits == move_set.start.qubits
