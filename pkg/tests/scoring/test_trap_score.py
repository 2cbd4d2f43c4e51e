"""Weighted trap score: combination, monotonicity and scale invariance."""

from __future__ import annotations

import math

import allure
import pytest
from pydantic import ValidationError

from qccd_router.data.cases.circuit_ddt import cx, h
from qccd_router.data.cases.generate_score_data import (
    ScoreComponents,
    generate_candidate_set,
    generate_scale_factor,
    generate_score_components,
    generate_weights,
)
from qccd_router.data.cases.scoring_ddt import COMBINE_CASES, CombineCase
from qccd_router.data.models.scoring import ScoreWeights, TrapScore
from qccd_router.router.ion_configuration import IonConfiguration
from qccd_router.scoring.components import Lookahead
from qccd_router.scoring.trap_score import trap_score
from qccd_router.topology.builders import build_linear

# ---------------------------------------------------------------------------
# Generated inputs for the property tests
# ---------------------------------------------------------------------------

_MONOTONE_SAMPLES = [(generate_weights(), generate_score_components()) for _ in range(1000)]
_SCALING_SAMPLES = [(generate_weights(), generate_scale_factor(), generate_candidate_set()) for _ in range(1000)]


def _argmax(weights: ScoreWeights, candidates: list[ScoreComponents]) -> set[int]:
    totals = [TrapScore.combine(weights, *c.as_args()).total for c in candidates]
    best = max(totals)
    return {i for i, total in enumerate(totals) if total == best}


@allure.suite("Scoring")
@allure.sub_suite("Trap score")
@pytest.mark.scoring
class TestTrapScore:
    @allure.title("Combine: {case}")  # type: ignore[misc]
    @pytest.mark.smoke
    @pytest.mark.regression
    @pytest.mark.parametrize("case", COMBINE_CASES)
    def test_combine(self, case: CombineCase) -> None:
        score = TrapScore.combine(
            case.weights,
            case.shuttle_count,
            case.swap_count,
            case.future_ops,
            case.excess_capacity,
            case.parallelism,
        )

        assert score.total == pytest.approx(case.total)
        assert score.shuttle_count == case.shuttle_count
        assert score.parallelism == case.parallelism

    @allure.title("Co-located pair in a half-full idle trap")
    @pytest.mark.regression
    def test_trap_score_co_located(self, default_weights: ScoreWeights) -> None:
        config = IonConfiguration(build_linear(2, 4), {0: [0, 1], 1: [2]})
        lookahead = Lookahead.from_gates([], default_weights.lookahead_layers)

        score = trap_score(0, 1, 0, (0,), config, lookahead, frozenset(), default_weights, exclude=0)

        assert (score.shuttle_count, score.swap_count, score.future_ops) == (0, 0, 0.0)
        assert score.excess_capacity == 2
        assert score.total == 3.0

    @allure.title("Bottleneck relocations are charged to the candidate")
    @pytest.mark.regression
    def test_trap_score_extra_movement(self, default_weights: ScoreWeights) -> None:
        config = IonConfiguration(build_linear(2, 4), {0: [0, 1], 1: [2]})
        lookahead = Lookahead.from_gates([], default_weights.lookahead_layers)

        score = trap_score(
            0, 1, 0, (0,), config, lookahead, frozenset({0}), default_weights, extra_shuttles=1, extra_swaps=2
        )

        assert (score.shuttle_count, score.swap_count, score.parallelism) == (1, 2, -1)
        assert score.total == -1 - 2 + 2 - 1

    @allure.title("More shuttles or SWAPs never raise the score")
    @pytest.mark.regression
    @pytest.mark.parametrize(("weights", "components"), _MONOTONE_SAMPLES)
    def test_monotone_in_movement(self, weights: ScoreWeights, components: ScoreComponents) -> None:
        base = TrapScore.combine(weights, *components.as_args()).total
        more_shuttles = TrapScore.combine(
            weights, components.shuttle_count + 1, *components.as_args()[1:]
        ).total
        args = list(components.as_args())
        args[1] += 1
        more_swaps = TrapScore.combine(weights, *args).total

        assert more_shuttles < base
        assert more_swaps < base

    @allure.title("Uniform weight scaling keeps the best candidate")
    @pytest.mark.regression
    @pytest.mark.parametrize(("weights", "factor", "candidates"), _SCALING_SAMPLES)
    def test_scaling_keeps_argmax(
        self, weights: ScoreWeights, factor: int, candidates: list[ScoreComponents]
    ) -> None:
        assert _argmax(weights, candidates) == _argmax(weights.scaled(factor), candidates)

    @allure.title("Sequential ablation disables thresholding and parallelism")
    @pytest.mark.regression
    def test_sequential_ablation(self, default_weights: ScoreWeights) -> None:
        ablated = default_weights.sequential_ablation()

        assert math.isinf(ablated.threshold)
        assert ablated.gamma_parallel == 0.0
        assert ablated.alpha_shuttle == default_weights.alpha_shuttle

    @allure.title("Negative component weights are rejected")
    @pytest.mark.regression
    def test_negative_weight_rejected(self) -> None:
        with pytest.raises(ValidationError):
            ScoreWeights(alpha_shuttle=-1)

    @allure.title("Single-qubit gates have no score window entry")
    @pytest.mark.regression
    def test_lookahead_ignores_single_qubit(self) -> None:
        lookahead = Lookahead.from_gates([h(0, 0), cx(1, 1, 2)], 2)

        assert 0 not in lookahead.entries
