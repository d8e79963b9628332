"""Principal eigenvalues and rearrangement optimization of two-phase radial conductors."""

from ._core import (
    EigenSolution,
    RadialProfile,
    SolverError,
    bessel_j,
    bessel_j_prime,
    bessel_zero,
    check_counterexample,
    critical_point,
    gamma_half,
    improve,
    low_contrast_optimizer,
    optimize,
    principal_eigenvalue,
    rho_n,
    sweep,
    unit_ball_volume,
)

__all__ = [
    "EigenSolution",
    "RadialProfile",
    "SolverError",
    "bessel_j",
    "bessel_j_prime",
    "bessel_zero",
    "check_counterexample",
    "critical_point",
    "gamma_half",
    "improve",
    "low_contrast_optimizer",
    "optimize",
    "principal_eigenvalue",
    "rho_n",
    "sweep",
    "unit_ball_volume",
]
