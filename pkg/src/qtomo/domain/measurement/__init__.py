from .bases import MubSet, OrthonormalBasis, born_probabilities, check_unbiased, qutrit_mub
from .frame import Frame, build_frame, canonical_frame, check_triples, reconstruct
from .prior import CandidateMap, MeasuredProbabilities, PriorData, rho_of_unmeasured
from .transform import AffineMap, future_transform

__all__ = [
    "AffineMap",
    "CandidateMap",
    "Frame",
    "MeasuredProbabilities",
    "MubSet",
    "OrthonormalBasis",
    "PriorData",
    "born_probabilities",
    "build_frame",
    "canonical_frame",
    "check_triples",
    "check_unbiased",
    "future_transform",
    "qutrit_mub",
    "reconstruct",
    "rho_of_unmeasured",
]
