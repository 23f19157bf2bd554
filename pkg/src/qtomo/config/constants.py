from __future__ import annotations

DIM = 3
"""Hilbert space dimension of a qutrit."""
N_BASES = 4
"""Number of bases in the complete qutrit MUB set."""
N_OUTCOMES = DIM * N_BASES
"""Length of a full probability vector, ordered basis-major and ket-minor."""
FRAME_RANK = DIM * DIM - 1
"""Rank of the frame matrix of a tomographically complete set of bases."""
HERMITIAN_INPUT_TOL = 1e-10
"""Max-norm tolerance on ``H - H^dagger`` for eigen-solver inputs."""
DENSITY_HERMITIAN_TOL = 1e-12
"""Max-norm tolerance on ``rho - rho^dagger`` for density matrices."""
DENSITY_TRACE_TOL = 1e-12
"""Tolerance on ``|Tr rho - 1|`` for density matrices."""
PSD_TOL = 1e-10
"""Smallest eigenvalue accepted as non-negative."""
ORTHONORMAL_TOL = 1e-10
"""Tolerance on ``<k_i|k_j> - delta_ij`` for basis kets."""
UNBIASED_TOL = 1e-8
"""Tolerance on cross-basis moduli squared when checking unbiasedness."""
SIMPLEX_SUM_TOL = 1e-9
"""Tolerance on internal probability triples."""
INPUT_SUM_TOL = 1e-6
"""Tolerance on externally supplied probability triples."""
PINV_RTOL = 1e-10
"""Relative singular value cutoff for the frame pseudoinverse."""
DEGENERACY_GAP = 1e-10
"""Eigenvalue gap below which the minimum eigenvalue is treated as degenerate."""
BOUNDARY_TOL = 1e-8
"""Largest ``|lambda_min|`` accepted for a boundary mesh point."""
BISECTION_TOL = 1e-10
"""Length of the final bracketing interval when locating the boundary."""
DEGENERATE_MAP_TOL = 1e-10
"""``|det|`` below which a future-measurement map is degenerate."""
RELATIVE_ENTROPY_FLOOR = 1e-14
"""Eigenvalue floor applied to the second argument of the relative entropy."""
MIN_COM_SAMPLES = 1_000
"""Smallest sample count accepted by the center-of-mass estimator."""
MIN_ENSEMBLE_BASES = 10
"""Smallest number of random future bases for the ensemble estimator."""
MIN_AREA_SAMPLES = 1_000
"""Smallest Monte Carlo sample count for the region area."""
MIN_CANDIDATES = 10
"""Smallest number of random candidates in the measurement search."""
AREA_DIRICHLET_ALPHA = 0.5
"""Dirichlet parameter of the counting-measure proposal."""
PURITY_BAND_ATTEMPTS = 100_000
"""Draws allowed per state when filtering a sampler by purity."""
FAILURE_RATE_LIMIT = 0.5
"""Benchmark failure rate above which the run is reported as failed."""
TRIAL_CSV_HEADER = (
    "trial_id",
    "sampler",
    "true_purity",
    "region_area",
    "estimator",
    "status",
    "d_hs",
    "fidelity",
    "d_relent",
    "d_angular",
    "ratio",
)
"""Frozen per-trial CSV header."""
BOUNDARY_CSV_HEADER = ("angle", "p1", "p2", "p3", "min_eig")
"""Boundary mesh CSV header."""
REGION_CSV_HEADER = ("kind", "p1", "p2", "p3", "min_eig", "det", "feasible")
"""Region plot CSV header."""
