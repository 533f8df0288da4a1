"""Concrete models of the compact classical groups SO(n), SU(n), Sp(n):
ordered Lie algebra bases, the canonical inner product, the adjoint
action and seeded random algebra elements.

Sp(n) is modeled as n x n quaternionic anti-Hermitian matrices; the
complex 2n x 2n embedding is applied internally wherever spectral or
exponential work is needed.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import linalg
from .exceptions import DomainError
from .linalg import COMPLEX, QUATERNION, REAL, QuaternionMatrix

_MIN_SIZE = {"SO": 3, "SU": 2, "Sp": 1}


@dataclass(frozen=True)
class CompactGroupId:
    """One of the families SO(n), SU(n), Sp(n)."""

    family: str
    n: int

    def __post_init__(self):
        if self.family not in _MIN_SIZE:
            raise DomainError(f"unknown family {self.family!r}")
        # Semisimplicity guard: SO(1), SO(2) and SU(1) are not semisimple.
        if self.n < _MIN_SIZE[self.family]:
            raise DomainError(
                f"{self.family}({self.n}) is not connected compact semisimple"
            )

    @property
    def dim(self):
        n = self.n
        if self.family == "SO":
            return n * (n - 1) // 2
        if self.family == "SU":
            return n * n - 1
        return n * (2 * n + 1)

    @property
    def field(self):
        return {"SO": REAL, "SU": COMPLEX, "Sp": QUATERNION}[self.family]

    @property
    def embedded_size(self):
        """Size of the complex matrices carrying the algebra."""
        return 2 * self.n if self.family == "Sp" else self.n

    def __str__(self):
        return f"{self.family}({self.n})"


@dataclass
class AlgebraBasis:
    """Ordered anti-Hermitian basis of a compact Lie algebra."""

    elements: list
    gram: np.ndarray

    def __len__(self):
        return len(self.elements)


def _so_basis(n):
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            m = np.zeros((n, n))
            m[i, j], m[j, i] = -1.0, 1.0
            out.append(m)
    return out


def _su_basis(n):
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            m = np.zeros((n, n), dtype=complex)
            m[i, j], m[j, i] = 1.0, -1.0
            out.append(m)
            m = np.zeros((n, n), dtype=complex)
            m[i, j] = m[j, i] = 1j
            out.append(m)
    for k in range(n - 1):
        m = np.zeros((n, n), dtype=complex)
        m[k, k], m[k + 1, k + 1] = 1j, -1j
        out.append(m)
    return out


def _sp_basis(n):
    out = []

    def unit(i, j):
        m = np.zeros((n, n), dtype=complex)
        m[i, j] = 1.0
        return m

    for i in range(n):
        for j in range(i + 1, n):
            skew = unit(i, j) - unit(j, i)
            sym = unit(i, j) + unit(j, i)
            out.append(QuaternionMatrix(skew))
            out.append(QuaternionMatrix(1j * sym))
            out.append(QuaternionMatrix(np.zeros_like(sym), sym))
            out.append(QuaternionMatrix(np.zeros_like(sym), 1j * sym))
    for i in range(n):
        out.append(QuaternionMatrix(1j * unit(i, i)))
        out.append(QuaternionMatrix(np.zeros((n, n), dtype=complex), unit(i, i)))
        out.append(QuaternionMatrix(np.zeros((n, n), dtype=complex), 1j * unit(i, i)))
    return out


@lru_cache(maxsize=None)
def algebra_basis(group_id):
    """Deterministic ordered basis of the Lie algebra of ``group_id``."""
    builder = {"SO": _so_basis, "SU": _su_basis, "Sp": _sp_basis}[group_id.family]
    elements = builder(group_id.n)
    assert len(elements) == group_id.dim
    d = len(elements)
    gram = np.empty((d, d))
    for i in range(d):
        for j in range(i, d):
            gram[i, j] = gram[j, i] = linalg.re_trace_inner(elements[i], elements[j])
    return AlgebraBasis(elements, gram)


@lru_cache(maxsize=None)
def embedded_basis(group_id):
    """The basis as complex matrices (quaternionic elements embedded)."""
    return [linalg.embed_complex(b) for b in algebra_basis(group_id).elements]


def adjoint(g, x):
    """Adjoint action g x g^-1; preserves the canonical inner product."""
    if isinstance(g, QuaternionMatrix):
        return g @ x @ g.inv()
    g = np.asarray(g)
    if np.linalg.cond(g) > 1e12:
        raise DomainError("group element is numerically singular")
    return g @ x @ np.linalg.inv(g)


def random_algebra_element(group_id, seed, scale=1.0):
    """Seeded random algebra element with Frobenius norm equal to ``scale``.

    The generator is numpy's PCG64, so fixtures are reproducible.
    """
    if scale <= 0:
        raise DomainError("scale must be positive")
    rng = np.random.Generator(np.random.PCG64(seed))
    basis = algebra_basis(group_id).elements
    coeffs = rng.standard_normal(len(basis))
    x = basis[0] * coeffs[0]
    for c, b in zip(coeffs[1:], basis[1:]):
        x = x + c * b
    norm = linalg.frobenius(x)
    if norm == 0.0:
        return x
    return x * (scale / norm)
