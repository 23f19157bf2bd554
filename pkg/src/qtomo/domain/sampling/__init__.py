from qtomo.utils import import_submodules

from .sampler_config import sampler_mapping
from .sampler_tool import list_all_samplers, register_sampler, sampler_exists
from .state_sampler import SamplerSpec, StateSampler
from .states import (
    purity,
    random_pure,
    sample_eig_simplex,
    sample_factorized,
    sample_hs,
    sample_pure_mix,
    sample_rank2,
)
from .unitary import complex_ginibre, factorized_unitary, haar_unitary, sample_factorized_unitary

import_submodules(__name__, __file__)

__all__ = [
    "SamplerSpec",
    "StateSampler",
    "complex_ginibre",
    "factorized_unitary",
    "haar_unitary",
    "list_all_samplers",
    "purity",
    "random_pure",
    "register_sampler",
    "sample_eig_simplex",
    "sample_factorized",
    "sample_factorized_unitary",
    "sample_hs",
    "sample_pure_mix",
    "sample_rank2",
    "sampler_exists",
    "sampler_mapping",
]
