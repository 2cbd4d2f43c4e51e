"""Benchmark generators: QFT, QAOA, adders and the random presets."""

from __future__ import annotations

import allure
import numpy as np
import pytest

from qccd_router.circuit.gate_dag import build_gate_dag
from qccd_router.circuit.generators import generate_benchmark, generate_random, round_robin_matchings
from qccd_router.circuit.metrics import compute_metrics
from qccd_router.data.benchmarks import RANDOM_PRESET_LAYERS, Benchmark
from qccd_router.data.cases.circuit_ddt import GENERATOR_CASES, RANDOM_PRESET_TARGETS, GeneratorCase
from qccd_router.data.errors import InvalidArgumentError


@allure.suite("Circuit")
@allure.sub_suite("Generators")
@pytest.mark.circuit
class TestGenerators:
    """Two-qubit counts, depths and determinism of the benchmark families."""

    @allure.title("Generate benchmark: {case}")  # type: ignore[misc]
    @pytest.mark.smoke
    @pytest.mark.regression
    @pytest.mark.parametrize("case", GENERATOR_CASES)
    def test_generator(self, case: GeneratorCase) -> None:
        circuit = generate_benchmark(case.benchmark, case.n_qubits, seed=1)
        dag = build_gate_dag(circuit)

        assert circuit.n_qubits == case.n_qubits
        assert circuit.two_qubit_count == case.two_q_count
        if case.depth is not None:
            assert dag.depth == case.depth
        assert all(q < case.n_qubits for g in circuit.gates for q in g.qubits)

    @allure.title("QAOA touches every qubit pair exactly once")
    @pytest.mark.regression
    @pytest.mark.parametrize("n", [4, 5, 8])
    def test_round_robin_covers_all_pairs(self, n: int) -> None:
        rounds = round_robin_matchings(n)
        pairs = [p for matching in rounds for p in matching]

        assert len(pairs) == len(set(pairs)) == n * (n - 1) // 2
        for matching in rounds:
            qubits = [q for pair in matching for q in pair]
            assert len(qubits) == len(set(qubits))

    @allure.title("Random circuits are perfect matchings per layer")
    @pytest.mark.regression
    def test_random_layers_are_matchings(self) -> None:
        circuit = generate_random(10, 6, 0.5, seed=3)
        gates = list(circuit.gates)

        assert len(gates) == 30
        for layer in range(6):
            qubits = [q for g in gates[layer * 5 : (layer + 1) * 5] for q in g.qubits]
            assert sorted(qubits) == list(range(10))

    @allure.title("Random circuits are a pure function of the seed")
    @pytest.mark.regression
    def test_random_determinism(self) -> None:
        assert generate_random(12, 10, 0.6, seed=5) == generate_random(12, 10, 0.6, seed=5)
        assert generate_random(12, 10, 0.6, seed=5) != generate_random(12, 10, 0.6, seed=6)

    @allure.title("Full repeat bias keeps the first matching")
    @pytest.mark.regression
    def test_full_repeat_bias(self) -> None:
        circuit = generate_random(8, 5, 1.0, seed=0)
        layers = [tuple(g.qubits for g in circuit.gates[i * 4 : (i + 1) * 4]) for i in range(5)]

        assert len(set(layers)) == 1

    @allure.title("Random preset movement ratio lands near its target")
    @pytest.mark.regression
    @pytest.mark.parametrize(("benchmark", "target", "tolerance"), RANDOM_PRESET_TARGETS)
    def test_random_preset_targets(self, benchmark: Benchmark, target: float, tolerance: float) -> None:
        metrics = [compute_metrics(build_gate_dag(generate_benchmark(benchmark, 40, seed))) for seed in range(5)]
        ratios = [m.avg_ion_mov_per_ts for m in metrics]

        assert abs(float(np.mean(ratios)) - target) <= tolerance * target
        assert all(m.depth == RANDOM_PRESET_LAYERS for m in metrics)

    @allure.title("Invalid generator arguments are rejected")
    @pytest.mark.regression
    @pytest.mark.parametrize(
        ("name", "n", "message"),
        [
            pytest.param("ghz", 4, "Unknown benchmark", id="unknown-name"),
            pytest.param(Benchmark.QFT, 1, "'n' must be >= 2", id="qft-too-small"),
            pytest.param(Benchmark.RND10, 7, "must be even", id="odd-random"),
        ],
    )
    def test_invalid_arguments(self, name: str, n: int, message: str) -> None:
        with pytest.raises(InvalidArgumentError, match=message):
            generate_benchmark(name, n)
