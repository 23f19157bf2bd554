"""Random 3x3 unitaries."""

from __future__ import annotations

import numpy as np
from scipy import linalg

from qtomo.config.constants import DIM
from qtomo.domain.qcore import ComplexMatrix3, RealVector

__all__ = (
    "complex_ginibre",
    "factorized_unitary",
    "haar_unitary",
    "sample_factorized_unitary",
)


def complex_ginibre(rng: np.random.Generator, shape: tuple[int, ...] = (DIM, DIM)) -> ComplexMatrix3:
    """Real and imaginary parts independent standard normal."""
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def haar_unitary(rng: np.random.Generator) -> ComplexMatrix3:
    """``U = Q D`` from the QR factorization of a Ginibre matrix, ``D`` the phases of ``diag(R)``."""
    q, r = linalg.qr(complex_ginibre(rng))
    d = np.diag(r)
    return np.asarray(q * (d / np.abs(d)), dtype=np.complex128)


def factorized_unitary(phases: RealVector, angles: RealVector) -> ComplexMatrix3:
    """Unitary from six phases and three rotation angles.

    ``diag(e^{i phi1..3}) R12(t1, t2) diag(1, e^{i phi4}, e^{i phi5}) R23(t3) diag(1, 1, e^{i phi6})``.
    """
    phi = np.asarray(phases, dtype=np.float64)
    c1, c2, c3 = np.cos(angles)
    s1, s2, s3 = np.sin(angles)
    outer = np.array(
        [
            [c1, -s1, 0.0],
            [s1 * c2, c1 * c2, -s2],
            [s1 * s2, c1 * s2, c2],
        ]
    )
    inner = np.array([[1.0, 0.0, 0.0], [0.0, c3, -s3], [0.0, s3, c3]])
    u = np.diag(np.exp(1j * phi[:3])) @ outer
    u = u @ np.diag([1.0, np.exp(1j * phi[3]), np.exp(1j * phi[4])]) @ inner
    return np.asarray(u @ np.diag([1.0, 1.0, np.exp(1j * phi[5])]), dtype=np.complex128)


def sample_factorized_unitary(rng: np.random.Generator) -> ComplexMatrix3:
    """Haar-distributed through the factorization: ``sin^4 t1``, ``sin^2 t2``, ``sin^2 t3`` uniform."""
    phases = rng.uniform(0.0, 2 * np.pi, size=6)
    xi = rng.uniform(size=3)
    angles = np.arcsin(np.sqrt([np.sqrt(xi[0]), xi[1], xi[2]]))
    return factorized_unitary(phases, angles)
