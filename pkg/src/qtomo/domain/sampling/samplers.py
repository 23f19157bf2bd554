from __future__ import annotations

from typing import TYPE_CHECKING

from .sampler_tool import register_sampler
from .state_sampler import StateSampler
from .states import random_pure, sample_eig_simplex, sample_factorized, sample_hs, sample_pure_mix, sample_rank2

if TYPE_CHECKING:
    import numpy as np

    from qtomo.domain.qcore import DensityMatrix

__all__ = (
    "EigSimplexSampler",
    "FactorizedSampler",
    "HilbertSchmidtSampler",
    "PureMixSampler",
    "PureSampler",
    "Rank2Sampler",
)


@register_sampler("hs")
class HilbertSchmidtSampler(StateSampler):
    def draw(self, rng: np.random.Generator) -> DensityMatrix:
        return sample_hs(rng)


@register_sampler("eig")
class EigSimplexSampler(StateSampler):
    def draw(self, rng: np.random.Generator) -> DensityMatrix:
        return sample_eig_simplex(rng, self.spec.dirichlet_alpha)


@register_sampler("puremix")
class PureMixSampler(StateSampler):
    def draw(self, rng: np.random.Generator) -> DensityMatrix:
        return sample_pure_mix(rng)


@register_sampler("pure")
class PureSampler(StateSampler):
    def draw(self, rng: np.random.Generator) -> DensityMatrix:
        return random_pure(rng)


@register_sampler("rank2")
class Rank2Sampler(StateSampler):
    def draw(self, rng: np.random.Generator) -> DensityMatrix:
        return sample_rank2(rng)


@register_sampler("factorized")
class FactorizedSampler(StateSampler):
    def draw(self, rng: np.random.Generator) -> DensityMatrix:
        return sample_factorized(rng, self.spec.dirichlet_alpha)
