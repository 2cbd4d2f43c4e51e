"""Randomised score components and weights for the scoring property suite.

All values are small integers, so weighted totals and their uniform rescalings are exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from faker import Faker

from qccd_router.config.env import TEST_DATA_SEED
from qccd_router.data.models.scoring import ScoreWeights

_faker = Faker()
_faker.seed_instance(TEST_DATA_SEED)


@dataclass(frozen=True)
class ScoreComponents:
    shuttle_count: int
    swap_count: int
    future_ops: int
    excess_capacity: int
    parallelism: int

    def as_args(self) -> tuple[int, int, int, int, int]:
        return (self.shuttle_count, self.swap_count, self.future_ops, self.excess_capacity, self.parallelism)


def generate_score_components(**overrides: int) -> ScoreComponents:
    """Generate one component tuple; ``excess_capacity`` is a free count or ``-capacity``."""
    capacity = _faker.random_int(min=1, max=21)
    data: dict[str, int] = {
        "shuttle_count": _faker.random_int(min=0, max=12),
        "swap_count": _faker.random_int(min=0, max=30),
        "future_ops": _faker.random_int(min=0, max=42),
        "excess_capacity": _faker.random_element([_faker.random_int(min=0, max=capacity), -capacity]),
        "parallelism": _faker.random_element([1, -1]),
    }
    data.update(overrides)
    return ScoreComponents(**data)


def generate_weights(**overrides: float) -> ScoreWeights:
    """Generate integer-valued weights inside the default sweep ranges."""
    data: dict[str, float] = {
        "alpha_shuttle": float(_faker.random_int(min=1, max=180)),
        "lambda_swap": float(_faker.random_int(min=1, max=65)),
        "beta_future": float(_faker.random_int(min=1, max=20)),
        "sigma_capacity": float(_faker.random_int(min=1, max=20)),
        "gamma_parallel": float(_faker.random_int(min=1, max=20)),
    }
    data.update(overrides)
    return ScoreWeights(**data)


def generate_scale_factor() -> int:
    return _faker.random_int(min=2, max=10)


def generate_candidate_set(size: int | None = None) -> list[ScoreComponents]:
    """Components of the candidate traps of one gate."""
    count = size if size is not None else _faker.random_int(min=2, max=8)
    return [generate_score_components() for _ in range(count)]
