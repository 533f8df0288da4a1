"""Pure-numpy implementations of the hot kernels.

Semantics are identical to the compiled extension in ``_native``; the
package selects between the two at import time.
"""

import numpy as np

from ..exceptions import DimensionError

# Truncation order of the exponential series; with the argument scaled to
# Frobenius norm <= 0.5 the series tail is below 1e-20.
SERIES_TERMS = 18
SCALE_LIMIT = 0.5


def expm(a):
    """Matrix exponential by scaling-and-squaring of a truncated series."""
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"expm needs a square matrix, got shape {a.shape}")
    a = a.astype(np.complex128, copy=False)
    n = a.shape[0]
    norm = np.linalg.norm(a)
    squarings = 0
    if norm > SCALE_LIMIT:
        squarings = int(np.ceil(np.log2(norm / SCALE_LIMIT)))
        a = a / (2.0**squarings)
    # Horner evaluation of sum_{k<=SERIES_TERMS} a^k / k!
    result = np.eye(n, dtype=np.complex128)
    for k in range(SERIES_TERMS, 0, -1):
        result = np.eye(n, dtype=np.complex128) + (a @ result) / k
    for _ in range(squarings):
        result = result @ result
    return result


def geodesic_scan(a, b, m, lam, step, n_steps, x_norm):
    """Scan a product-of-exponentials curve for horizontality and speed.

    ``a`` and ``b`` are 2m x 2m block matrices of the curve
    exp(t a) exp(-t b); ``b`` must be anti-Hermitian (its exponential is
    unitary).  The left logarithmic derivative at t_j = j*step is
    P_j a P_j^* - b with P_j = exp(t_j b); its lower-left block is the
    horizontal coordinate x and the diagonal blocks its vertical
    coordinate y.  Returns the maxima over the grid of ||y - lam*x||_F
    and of |sqrt(<x,x>) - x_norm|.
    """
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    s = expm(step * b)
    size = a.shape[0]
    powers = np.empty((n_steps + 1, size, size), dtype=np.complex128)
    powers[0] = np.eye(size)
    for j in range(1, n_steps + 1):
        powers[j] = s @ powers[j - 1]
    deriv = powers @ a @ powers.conj().transpose(0, 2, 1) - b
    x = deriv[:, m:, :m]
    y = 0.5 * (deriv[:, :m, :m] + deriv[:, m:, m:])
    horiz = np.linalg.norm(y - lam * x, axis=(1, 2))
    speeds = np.linalg.norm(x, axis=(1, 2))
    return float(horiz.max()), float(np.abs(speeds - x_norm).max())
