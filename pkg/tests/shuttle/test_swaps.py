"""SWAP expansion of a shuttle round."""

from __future__ import annotations

import allure
import pytest

from qccd_router.data.cases.shuttle_ddt import EXPAND_CASES, ExpandCase
from qccd_router.data.errors import ShuttleInvariantError
from qccd_router.router.ion_configuration import IonConfiguration
from qccd_router.shuttle.shuttle_dag import Move, decompose_moves
from qccd_router.shuttle.swaps import expand_swaps
from qccd_router.topology.builders import build_linear


@allure.suite("Shuttle")
@allure.sub_suite("SWAP expansion")
@pytest.mark.shuttle
class TestSwaps:
    @allure.title("Expand SWAPs: {case}")  # type: ignore[misc]
    @pytest.mark.smoke
    @pytest.mark.regression
    @pytest.mark.parametrize("case", EXPAND_CASES)
    def test_expand(self, case: ExpandCase) -> None:
        machine = case.machine()
        config = IonConfiguration(machine, case.chains)
        ops = decompose_moves(case.moves, machine).ops

        expansion = expand_swaps(ops, config)

        assert [(s.trap, s.position) for s in expansion.swaps] == case.swap_positions
        assert expansion.config.snapshot() == case.final_chains
        assert expansion.swaps_by_op[0] == expansion.swaps
        assert config.snapshot() == {t: tuple(c) for t, c in case.chains.items()}

    @allure.title("Arrivals wait for every departure of the round")
    @pytest.mark.regression
    def test_exchange_between_full_traps(self) -> None:
        machine = build_linear(3, 2)
        config = IonConfiguration(machine, {0: [0, 1], 1: [2, 3], 2: [4]})
        ops = decompose_moves([Move(3, (1, 2)), Move(1, (0, 1))], machine).ops

        expansion = expand_swaps(ops, config)

        assert expansion.swaps == []
        assert expansion.config.snapshot() == {0: (0,), 1: (1, 2), 2: (3, 4)}

    @allure.title("SWAP records name the exchanged pair before the exchange")
    @pytest.mark.regression
    def test_swap_pairs(self) -> None:
        machine = build_linear(2, 4)
        config = IonConfiguration(machine, {0: [0, 1, 2], 1: []})
        ops = decompose_moves([Move(0, (0, 1))], machine).ops

        expansion = expand_swaps(ops, config)

        assert [s.qubits for s in expansion.swaps] == [(0, 1), (0, 2)]

    @allure.title("Ion outside its origin trap")
    @pytest.mark.regression
    def test_wrong_origin(self) -> None:
        machine = build_linear(2, 4)
        config = IonConfiguration(machine, {0: [0], 1: [1]})
        ops = decompose_moves([Move(1, (0, 1))], machine).ops

        with pytest.raises(ShuttleInvariantError, match="not in trap 0"):
            expand_swaps(ops, config)

    @allure.title("Destination overflows")
    @pytest.mark.regression
    def test_overflow(self) -> None:
        machine = build_linear(2, 1)
        config = IonConfiguration(machine, {0: [0], 1: [1]})
        ops = decompose_moves([Move(0, (0, 1))], machine).ops

        with pytest.raises(ShuttleInvariantError):
            expand_swaps(ops, config)
