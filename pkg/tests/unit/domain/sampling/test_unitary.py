from __future__ import annotations

from collections.abc import Callable

import numpy as np
import pytest
from scipy import stats

from qtomo.domain.sampling import factorized_unitary, haar_unitary, sample_factorized_unitary


@pytest.mark.parametrize("draw", [haar_unitary, sample_factorized_unitary])
def test_unitarity(draw: Callable[[np.random.Generator], np.ndarray], rng: np.random.Generator) -> None:
    for _ in range(20):
        u = draw(rng)
        np.testing.assert_allclose(u.conj().T @ u, np.eye(3), atol=1e-12)


def test_factorized_unitary_identity() -> None:
    np.testing.assert_allclose(factorized_unitary(np.zeros(6), np.zeros(3)), np.eye(3), atol=1e-15)


@pytest.mark.slow
@pytest.mark.parametrize("draw", [haar_unitary, sample_factorized_unitary])
def test_first_entry_follows_haar_marginal(
    draw: Callable[[np.random.Generator], np.ndarray],
    rng: np.random.Generator,
) -> None:
    weights = np.array([abs(draw(rng)[0, 0]) ** 2 for _ in range(4000)])
    assert stats.kstest(weights, stats.beta(1, 2).cdf).pvalue > 1e-3


@pytest.mark.slow
@pytest.mark.parametrize("draw", [haar_unitary, sample_factorized_unitary])
def test_entry_moments_match_haar(
    draw: Callable[[np.random.Generator], np.ndarray],
    rng: np.random.Generator,
) -> None:
    weights = np.abs(np.array([draw(rng) for _ in range(4000)])) ** 2
    np.testing.assert_allclose(weights.mean(axis=0), np.full((3, 3), 1 / 3), atol=0.02)
    np.testing.assert_allclose((weights**2).mean(axis=0), np.full((3, 3), 1 / 6), atol=0.02)
