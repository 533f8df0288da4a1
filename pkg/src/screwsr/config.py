"""Default numerical tolerances, overridable via SCREWSR_TOL."""

import os

# Absolute tolerance for equality of matrices / residuals.
EQUALITY_TOL = 1e-9

# Relative threshold on Gram eigenvalues when counting numerical rank.
RANK_REL_TOL = 1e-8


def default_tol() -> float:
    """Equality tolerance, honoring the SCREWSR_TOL environment override."""
    env = os.environ.get("SCREWSR_TOL")
    if env is not None:
        return float(env)
    return EQUALITY_TOL
