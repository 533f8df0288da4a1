# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: matrix exponential (scaling and squaring with a
truncated series) and the batched geodesic scan.  Semantics match
fallback.py exactly; both operate on complex128 square matrices."""

import numpy as np

cimport cython
cimport numpy as cnp

cnp.import_array()

DEF SERIES_TERMS = 18
DEF SCALE_LIMIT = 0.5


cdef void _matmul(double complex[:, ::1] a, double complex[:, ::1] b,
                  double complex[:, ::1] out, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t i, j, l
    cdef double complex acc
    for i in range(n):
        for j in range(n):
            acc = 0
            for l in range(n):
                acc = acc + a[i, l] * b[l, j]
            out[i, j] = acc


cdef double _fro(double complex[:, ::1] a, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t i, j
    cdef double s = 0.0
    cdef double complex v
    for i in range(n):
        for j in range(n):
            v = a[i, j]
            s += v.real * v.real + v.imag * v.imag
    return s ** 0.5


def expm(a):
    """exp(a) for a square matrix, complex128 output."""
    from ..exceptions import DimensionError

    arr = np.ascontiguousarray(np.asarray(a, dtype=np.complex128))
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionError("expm expects a square matrix")
    cdef Py_ssize_t n = arr.shape[0]
    cdef double norm = _fro(arr, n)
    cdef int squarings = 0
    while norm > SCALE_LIMIT:
        norm *= 0.5
        squarings += 1
    scaled = arr / (2.0 ** squarings)

    cdef double complex[:, ::1] m = scaled
    result = np.eye(n, dtype=np.complex128)
    tmp = np.empty((n, n), dtype=np.complex128)
    cdef double complex[:, ::1] res = result
    cdef double complex[:, ::1] buf = tmp
    cdef Py_ssize_t i, j, term
    cdef double inv
    # Horner evaluation of the truncated series: I + m/k (I + m/(k-1) (...))
    with nogil:
        for term in range(SERIES_TERMS, 0, -1):
            inv = 1.0 / term
            _matmul(m, res, buf, n)
            for i in range(n):
                for j in range(n):
                    res[i, j] = buf[i, j] * inv
                res[i, i] = res[i, i] + 1.0
    for _ in range(squarings):
        result = result @ result
    return result


def geodesic_scan(a, b, Py_ssize_t m, double lam, double step,
                  Py_ssize_t n_steps, double x_norm):
    """Scan the left logarithmic derivative Ad(exp(t b))(a) - b over the
    grid t = 0, step, ..., n_steps * step.

    Returns (max horizontality residual ||y - lam x||_F, max speed
    deviation | ||x||_F - x_norm |), where x is the lower-left block and
    y the average of the diagonal blocks of the derivative.
    """
    cdef Py_ssize_t size = a.shape[0]
    A = np.ascontiguousarray(np.asarray(a, dtype=np.complex128))
    B = np.ascontiguousarray(np.asarray(b, dtype=np.complex128))
    S = expm(step * B)
    cdef double complex[:, ::1] av = A
    cdef double complex[:, ::1] bv = B
    cdef double complex[:, ::1] sv = S
    P = np.eye(size, dtype=np.complex128)
    Pn = np.empty((size, size), dtype=np.complex128)
    W = np.empty((size, size), dtype=np.complex128)
    D = np.empty((size, size), dtype=np.complex128)
    cdef double complex[:, ::1] pv = P
    cdef double complex[:, ::1] pnv = Pn
    cdef double complex[:, ::1] wv = W
    cdef double complex[:, ::1] dv = D
    cdef Py_ssize_t step_idx, i, j, l
    cdef double worst_h = 0.0, worst_s = 0.0
    cdef double hx, sx
    cdef double complex x_ij, y_ij, acc
    with nogil:
        for step_idx in range(n_steps + 1):
            # D = P a P^H - b; P is unitary, so P^-1 = P^H.
            _matmul(pv, av, wv, size)
            for i in range(size):
                for j in range(size):
                    acc = 0
                    for l in range(size):
                        acc = acc + wv[i, l] * pv[j, l].conjugate()
                    dv[i, j] = acc - bv[i, j]
            hx = 0.0
            sx = 0.0
            for i in range(m):
                for j in range(m):
                    x_ij = dv[m + i, j]
                    y_ij = 0.5 * (dv[i, j] + dv[m + i, m + j])
                    acc = y_ij - lam * x_ij
                    hx += acc.real * acc.real + acc.imag * acc.imag
                    sx += x_ij.real * x_ij.real + x_ij.imag * x_ij.imag
            hx = hx ** 0.5
            sx = sx ** 0.5 - x_norm
            if sx < 0:
                sx = -sx
            if hx > worst_h:
                worst_h = hx
            if sx > worst_s:
                worst_s = sx
            # P <- S P
            _matmul(sv, pv, pnv, size)
            for i in range(size):
                for j in range(size):
                    pv[i, j] = pnv[i, j]
    return worst_h, worst_s
