"""Shared random-state generators for the test suite."""

import numpy as np
import pytest

from rebits import DensityOperator, PureState, random_state
from rebits.linalg import tensor_product


def random_pure(rng: np.random.Generator) -> PureState:
    v = rng.standard_normal(4)
    return PureState(v / np.linalg.norm(v))


def random_2x2_density(rng: np.random.Generator) -> np.ndarray:
    g = rng.standard_normal((2, 2))
    m = g @ g.T
    return m / np.trace(m)


def random_product_density(rng: np.random.Generator) -> DensityOperator:
    return DensityOperator(tensor_product(random_2x2_density(rng), random_2x2_density(rng)))


def random_product_mixture(rng: np.random.Generator, max_terms: int = 8) -> DensityOperator:
    """Random convex combination of up to max_terms random real product states."""
    k = int(rng.integers(1, max_terms + 1))
    weights = rng.exponential(size=k)
    weights /= weights.sum()
    m = sum(p * random_product_density(rng).mat for p, _ in zip(weights, range(k)))
    return DensityOperator(m)


def state_corpus(count: int, base_seed: int = 20_000) -> list:
    """Deterministic corpus of mixed states cycling through ranks 1..4."""
    return [random_state(base_seed + i, rank=(i % 4) + 1) for i in range(count)]


@pytest.fixture(scope="session")
def corpus_1000():
    return state_corpus(1000)


@pytest.fixture(scope="session")
def pure_corpus_1000():
    rng = np.random.default_rng(777)
    return [random_pure(rng) for _ in range(1000)]
