"""Scalar fields (real, complex, quaternion), dense matrices and the
numerical kernel shared by every other module: matrix exponential,
commutator, the canonical trace inner product, Gram-based numerical rank
and eigenvalue real parts.

Quaternionic matrices are stored natively as a pair of complex components
(q = a + b j, four reals per entry); all spectral and exponential work
routes through the complex 2n x 2n embedding q = a + b j ->
[[a, b], [-conj(b), conj(a)]], so there is a single trusted complex
kernel.
"""

import numpy as np

from . import _kernels, config
from .exceptions import (
    CapacityError,
    DimensionError,
    DomainError,
    FieldMismatchError,
    NumericError,
)

REAL = "R"
COMPLEX = "C"
QUATERNION = "H"

# Largest matrix size (after complex embedding) accepted by the spectral
# routines; everything in this package is small and dense.
EIG_SIZE_LIMIT = 16


class Quaternion:
    """A quaternion w + x i + y j + z k."""

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0.0, x=0.0, y=0.0, z=0.0):
        self.w = float(w)
        self.x = float(x)
        self.y = float(y)
        self.z = float(z)

    def __mul__(self, q):
        return Quaternion(
            self.w * q.w - self.x * q.x - self.y * q.y - self.z * q.z,
            self.w * q.x + self.x * q.w + self.y * q.z - self.z * q.y,
            self.w * q.y - self.x * q.z + self.y * q.w + self.z * q.x,
            self.w * q.z + self.x * q.y - self.y * q.x + self.z * q.w,
        )

    def __add__(self, q):
        return Quaternion(self.w + q.w, self.x + q.x, self.y + q.y, self.z + q.z)

    def __sub__(self, q):
        return Quaternion(self.w - q.w, self.x - q.x, self.y - q.y, self.z - q.z)

    def __eq__(self, q):
        if not isinstance(q, Quaternion):
            return NotImplemented
        return (self.w, self.x, self.y, self.z) == (q.w, q.x, q.y, q.z)

    def __hash__(self):
        return hash((self.w, self.x, self.y, self.z))

    def conjugate(self):
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm2(self):
        return self.w**2 + self.x**2 + self.y**2 + self.z**2

    def embed(self):
        """Complex 2x2 embedding a + b j -> [[a, b], [-conj(b), conj(a)]]."""
        a = self.w + 1j * self.x
        b = self.y + 1j * self.z
        return np.array([[a, b], [-np.conj(b), np.conj(a)]])

    def components(self):
        return np.array([self.w, self.x, self.y, self.z])

    def __repr__(self):
        return f"Quaternion({self.w}, {self.x}, {self.y}, {self.z})"


class QuaternionMatrix:
    """Dense quaternionic matrix q = a + b j with complex components a, b."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=None):
        self.a = np.asarray(a, dtype=np.complex128)
        if b is None:
            b = np.zeros_like(self.a)
        self.b = np.asarray(b, dtype=np.complex128)
        if self.a.shape != self.b.shape or self.a.ndim != 2:
            raise DimensionError("component shapes must match and be 2-d")

    @property
    def shape(self):
        return self.a.shape

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls(np.zeros((rows, cols)), np.zeros((rows, cols)))

    @classmethod
    def eye(cls, n):
        return cls(np.eye(n), np.zeros((n, n)))

    def __add__(self, other):
        return QuaternionMatrix(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return QuaternionMatrix(self.a - other.a, self.b - other.b)

    def __neg__(self):
        return QuaternionMatrix(-self.a, -self.b)

    def __mul__(self, scalar):
        scalar = complex(scalar)
        if scalar.imag != 0.0:
            raise FieldMismatchError("only real scalars act on both sides of H")
        return QuaternionMatrix(scalar.real * self.a, scalar.real * self.b)

    __rmul__ = __mul__

    def __matmul__(self, other):
        # (a1 + b1 j)(a2 + b2 j) = (a1 a2 - b1 conj(b2)) + (a1 b2 + b1 conj(a2)) j
        return QuaternionMatrix(
            self.a @ other.a - self.b @ np.conj(other.b),
            self.a @ other.b + self.b @ np.conj(other.a),
        )

    @property
    def H(self):
        """Quaternionic conjugate transpose."""
        return QuaternionMatrix(np.conj(self.a).T, -self.b.T)

    def embed(self):
        """Complex 2n x 2m embedding, a block homomorphism of *-algebras."""
        top = np.hstack([self.a, self.b])
        bottom = np.hstack([-np.conj(self.b), np.conj(self.a)])
        return np.vstack([top, bottom])

    @classmethod
    def from_embedding(cls, m, tol=1e-9):
        m = np.asarray(m, dtype=np.complex128)
        if m.shape[0] % 2 or m.shape[1] % 2:
            raise DimensionError("embedded matrix must have even dimensions")
        r, c = m.shape[0] // 2, m.shape[1] // 2
        a, b = m[:r, :c], m[:r, c:]
        residual = max(
            np.abs(m[r:, :c] + np.conj(b)).max(initial=0.0),
            np.abs(m[r:, c:] - np.conj(a)).max(initial=0.0),
        )
        if residual > tol * max(1.0, np.abs(m).max()):
            raise DomainError("matrix is not in the image of the quaternionic embedding")
        return cls(a, b)

    def inv(self):
        return QuaternionMatrix.from_embedding(np.linalg.inv(self.embed()))

    def norm(self):
        return float(np.sqrt(np.linalg.norm(self.a) ** 2 + np.linalg.norm(self.b) ** 2))

    def submatrix(self, rows, cols):
        return QuaternionMatrix(self.a[rows, cols], self.b[rows, cols])

    def real_trace(self):
        return float(np.trace(self.a).real)

    def allclose(self, other, tol=1e-9):
        return (
            np.allclose(self.a, other.a, atol=tol)
            and np.allclose(self.b, other.b, atol=tol)
        )

    def __repr__(self):
        return f"QuaternionMatrix(a={self.a!r}, b={self.b!r})"


def qblock(rows):
    """Assemble a QuaternionMatrix from a 2-d grid of QuaternionMatrix blocks."""
    a = np.block([[blk.a for blk in row] for row in rows])
    b = np.block([[blk.b for blk in row] for row in rows])
    return QuaternionMatrix(a, b)


def field_of(m):
    if isinstance(m, QuaternionMatrix):
        return QUATERNION
    if np.iscomplexobj(m):
        return COMPLEX
    return REAL


def _check_same(a, b):
    if field_of(a) != field_of(b):
        raise FieldMismatchError(f"fields differ: {field_of(a)} vs {field_of(b)}")
    if a.shape != b.shape:
        raise DimensionError(f"shapes differ: {a.shape} vs {b.shape}")


def embed_complex(m):
    """Complex matrix carrying m: the embedding for H, m itself for R/C."""
    if isinstance(m, QuaternionMatrix):
        return m.embed()
    return np.asarray(m, dtype=np.complex128)


def mat_exp(a):
    """Matrix exponential (scaling-and-squaring, truncated series).

    Quaternionic input is exponentiated through its complex embedding.
    """
    if isinstance(a, QuaternionMatrix):
        if a.shape[0] != a.shape[1]:
            raise DimensionError(f"expected square matrix, got {a.shape}")
        return QuaternionMatrix.from_embedding(_kernels.expm(a.embed()))
    a = np.asarray(a)
    result = _kernels.expm(a)
    if not np.iscomplexobj(a):
        return result.real
    return result


def bracket(a, b):
    """Matrix commutator ab - ba."""
    _check_same(a, b)
    if a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected square matrices, got {a.shape}")
    return a @ b - b @ a


def re_trace_inner(a, b):
    """Canonical inner product Re tr(a* b).

    For anti-Hermitian arguments this equals -Re tr(ab), the positive
    definite bi-invariant form on a compact Lie algebra.
    """
    _check_same(a, b)
    if isinstance(a, QuaternionMatrix):
        return float(np.vdot(a.a, b.a).real + np.vdot(a.b, b.b).real)
    return float(np.vdot(a, b).real)


def frobenius(a):
    if isinstance(a, QuaternionMatrix):
        return a.norm()
    return float(np.linalg.norm(a))


def numeric_rank(vectors, tol=None, inner=re_trace_inner):
    """Rank of a spanning set, via the eigenvalues of its Gram matrix.

    Eigenvalues above ``tol`` times the largest one are counted.  The
    result is basis-independent: any set with the same span and the same
    inner product gives the same rank.
    """
    if tol is None:
        tol = config.RANK_REL_TOL
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    n = len(vectors)
    if n == 0:
        return 0
    gram = np.empty((n, n))
    for i in range(n):
        for j in range(i, n):
            gram[i, j] = gram[j, i] = inner(vectors[i], vectors[j])
    eigs = np.linalg.eigvalsh(gram)
    top = eigs[-1]
    if top <= 0.0:
        return 0
    return int(np.count_nonzero(eigs > tol * top))


def eig_real_parts(a):
    """Sorted real parts of the eigenvalues of a (embedded) matrix."""
    m = embed_complex(a)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected square matrix, got {m.shape}")
    if m.shape[0] > EIG_SIZE_LIMIT:
        raise CapacityError(
            f"matrix size {m.shape[0]} exceeds the spectral limit {EIG_SIZE_LIMIT}"
        )
    try:
        eigs = np.linalg.eigvals(m)
    except np.linalg.LinAlgError as exc:
        raise NumericError("eigenvalue iteration failed to converge") from exc
    return sorted(float(v) for v in eigs.real)
