"""The unified Lie algebra carrying all three symmetric pairs of a
compact group K: pairs (x, y) of algebra elements with the curvature
dependent bracket

    [(x, y), (u, v)] = ([x, v] + [y, u], [y, v] + k [x, u]),

its faithful block realization [[y, k x], [x, y]], the screw distribution
{(x, lam x)}, the bi-invariant form g and its positive-definite scaling h,
and the isomorphisms onto the concrete models k + k, k^C and k x| k.

All group-level computation (exponentials, geodesics) happens in the
block realization; quaternionic groups enter through their complex
embedding, so every block matrix is complex.
"""

from dataclasses import dataclass

import numpy as np

from . import groups, linalg
from .exceptions import DomainError, FieldMismatchError
from .groups import CompactGroupId

CURVATURE_SIGNS = (1, -1, 0)


@dataclass(frozen=True)
class KkElement:
    """Element (x, y) of the unified algebra at curvature sign k.

    x is the horizontal (translation) coordinate, y the vertical
    (rotation) coordinate; both are complex matrices of equal size.
    """

    x: np.ndarray
    y: np.ndarray
    k: int

    def __add__(self, other):
        _check_compatible(self, other)
        return KkElement(self.x + other.x, self.y + other.y, self.k)

    def __sub__(self, other):
        _check_compatible(self, other)
        return KkElement(self.x - other.x, self.y - other.y, self.k)

    def __mul__(self, scalar):
        return KkElement(scalar * self.x, scalar * self.y, self.k)

    __rmul__ = __mul__

    def norm(self):
        """Norm under the product inner product <x,u> + <y,v>."""
        return float(np.sqrt(kk_inner(self, self)))


def _check_compatible(a, b):
    if a.k != b.k:
        raise DomainError(f"curvature signs differ: {a.k} vs {b.k}")
    if a.x.shape != b.x.shape:
        raise FieldMismatchError(f"group models differ: {a.x.shape} vs {b.x.shape}")


def kk_bracket(a, b):
    """The curvature-dependent bracket on pairs."""
    _check_compatible(a, b)
    return KkElement(
        linalg.bracket(a.x, b.y) + linalg.bracket(a.y, b.x),
        linalg.bracket(a.y, b.y) + a.k * linalg.bracket(a.x, b.x),
        a.k,
    )


def kk_inner(a, b):
    """Positive definite product inner product on pairs."""
    return linalg.re_trace_inner(a.x, b.x) + linalg.re_trace_inner(a.y, b.y)


def L_operator(a):
    """The distinguished map sending the horizontal axis to the vertical one."""
    if np.abs(a.y).max(initial=0.0) > 1e-12 * max(1.0, np.abs(a.x).max(initial=0.0)):
        raise DomainError("L is defined on the horizontal axis only")
    return KkElement(np.zeros_like(a.x), a.x, a.k)


class ScrewSystem:
    """A screw-motion control system: compact group, curvature sign, pitch."""

    def __init__(self, group: CompactGroupId, k: int, lam: float):
        if k not in CURVATURE_SIGNS:
            raise DomainError(f"curvature sign must be one of {CURVATURE_SIGNS}")
        self.group = group
        self.k = k
        self.lam = float(lam)
        self.basis = groups.embedded_basis(group)
        self.m = group.embedded_size
        self.dim_k = group.dim
        self.dim_g = 2 * group.dim

    def __repr__(self):
        return f"ScrewSystem({self.group}, k={self.k}, lam={self.lam})"

    def descriptor(self):
        return {
            "family": self.group.family,
            "n": self.group.n,
            "k": self.k,
            "lambda": self.lam,
        }

    # -- elements ------------------------------------------------------

    def element(self, x, y):
        return KkElement(
            linalg.embed_complex(x), linalg.embed_complex(y), self.k
        )

    def horizontal_lift(self, x):
        """Lift x in the compact algebra to (x, lam x) in the distribution."""
        x = linalg.embed_complex(x)
        return KkElement(x, self.lam * x, self.k)

    def vertical(self, y):
        y = linalg.embed_complex(y)
        return KkElement(np.zeros_like(y), y, self.k)

    def kk_basis(self):
        """Basis of the full algebra: horizontal then vertical copies."""
        zero = np.zeros((self.m, self.m), dtype=complex)
        out = [KkElement(b, zero, self.k) for b in self.basis]
        out += [KkElement(zero, b, self.k) for b in self.basis]
        return out

    def random_element(self, seed, scale=1.0):
        x = groups.random_algebra_element(self.group, seed, scale)
        y = groups.random_algebra_element(self.group, seed + 10**6, scale)
        return self.element(x, y)

    # -- block realization ---------------------------------------------

    def block(self, a):
        """Faithful realization [[y, k x], [x, y]]; the commutator of block
        matrices equals the pair bracket."""
        return np.block([[a.y, self.k * a.x], [a.x, a.y]])

    def from_block(self, mat):
        m = self.m
        x = mat[m:, :m]
        y = 0.5 * (mat[:m, :m] + mat[m:, m:])
        return KkElement(x, y, self.k)

    def group_membership_residual(self, g):
        """Residual of the defining relations of the k-model group.

        k=1: unitary and commuting with the block swap; k=-1: split-unitary
        and commuting with the symplectic-style J; k=0: lower block
        triangular with equal unitary diagonal blocks.
        """
        m = self.m
        eye = np.eye(m)
        if self.k == 1:
            swap = np.block([[np.zeros((m, m)), eye], [eye, np.zeros((m, m))]])
            r_unitary = np.linalg.norm(g.conj().T @ g - np.eye(2 * m))
            r_structure = np.linalg.norm(g @ swap - swap @ g)
            return max(r_unitary, r_structure)
        if self.k == -1:
            r_form = np.block([[eye, np.zeros((m, m))], [np.zeros((m, m)), -eye]])
            j = np.block([[np.zeros((m, m)), -eye], [eye, np.zeros((m, m))]])
            r_split = np.linalg.norm(g.conj().T @ r_form @ g - r_form)
            r_structure = np.linalg.norm(g @ j - j @ g)
            return max(r_split, r_structure)
        r_upper = np.linalg.norm(g[:m, m:])
        r_equal = np.linalg.norm(g[:m, :m] - g[m:, m:])
        b = g[:m, :m]
        r_unitary = np.linalg.norm(b.conj().T @ b - eye)
        return max(r_upper, r_equal, r_unitary)

    # -- metric --------------------------------------------------------

    def g_form(self, a, b):
        """The bi-invariant form lam<x,v> + lam<y,u> - <y,v> - k<x,u>."""
        lam, k = self.lam, self.k
        return (
            lam * linalg.re_trace_inner(a.x, b.y)
            + lam * linalg.re_trace_inner(a.y, b.x)
            - linalg.re_trace_inner(a.y, b.y)
            - k * linalg.re_trace_inner(a.x, b.x)
        )

    def h_form(self, a, b):
        """The positive scaling g / (lam^2 - k); defined off the degenerate locus."""
        denom = self.lam**2 - self.k
        if abs(denom) < 1e-12:
            raise DomainError("h is undefined when lam^2 = k")
        return self.g_form(a, b) / denom

    def g_gram(self):
        basis = self.kk_basis()
        d = len(basis)
        gram = np.empty((d, d))
        for i in range(d):
            for j in range(i, d):
                gram[i, j] = gram[j, i] = self.g_form(basis[i], basis[j])
        return gram

    def sub_norm(self, a):
        """Sub-Riemannian norm of a distribution element (x, lam x)."""
        residual = np.linalg.norm(a.y - self.lam * a.x)
        if residual > 1e-8 * max(1.0, np.linalg.norm(a.x)):
            raise DomainError("element is not in the screw distribution")
        return float(np.sqrt(linalg.re_trace_inner(a.x, a.x)))


def t_k_isomorphism(a):
    """Isomorphism of the unified algebra onto the concrete model.

    k=1: pair in k + k with componentwise bracket, (x, y) -> (x+y, y-x);
    k=-1: complex matrix y + i x with the plain commutator;
    k=0: the identity onto semidirect-product coordinates.

    The inverse of the k=1 map is (p, q) -> ((p-q)/2, (p+q)/2).
    """
    if a.k == 1:
        return (a.x + a.y, a.y - a.x)
    if a.k == -1:
        return a.y + 1j * a.x
    return (a.x, a.y)


def t_k_inverse(value, k):
    """Inverse of :func:`t_k_isomorphism`."""
    if k == 1:
        p, q = value
        return KkElement(0.5 * (p - q), 0.5 * (p + q), 1)
    if k == -1:
        # y + ix with x, y anti-Hermitian: split into anti-Hermitian parts.
        m = np.asarray(value, dtype=complex)
        y = 0.5 * (m - m.conj().T)
        ix = 0.5 * (m + m.conj().T)
        return KkElement(-1j * ix, y, -1)
    p, q = value
    return KkElement(p, q, 0)


def motion_pair_from_block(mat, m):
    """Read a Cartan-motion-group element (w, B) off a k=0 block element.

    exp([[y, 0], [x, y]]) has the shape [[B, 0], [w B, B]]; the semidirect
    product law (w, B) (z, A) = (w + B z B^-1, B A) is recovered from
    block multiplication.
    """
    b = mat[:m, :m]
    w = mat[m:, :m] @ np.linalg.inv(b)
    return w, b


def verify_L_identities(system, trials, seed=0):
    """Check the two defining identities of the distinguished operator L:

        k [L(x), L(y)] = [x, y]      and      [L(x), z] = L([x, z])

    on seeded random horizontal x, y and vertical z, both in pair
    coordinates and through the block realization.  Returns max residuals.
    """
    if trials < 1:
        raise DomainError("trials must be >= 1")
    k = system.k
    res_first = res_second = res_block = 0.0
    zero = np.zeros((system.m, system.m), dtype=complex)
    for t in range(trials):
        x = linalg.embed_complex(
            groups.random_algebra_element(system.group, seed + 3 * t)
        )
        y = linalg.embed_complex(
            groups.random_algebra_element(system.group, seed + 3 * t + 1)
        )
        z = linalg.embed_complex(
            groups.random_algebra_element(system.group, seed + 3 * t + 2)
        )
        xh = KkElement(x, zero, k)
        yh = KkElement(y, zero, k)
        zv = KkElement(zero, z, k)
        lx = L_operator(xh)
        ly = L_operator(yh)
        first = k * kk_bracket(lx, ly) - kk_bracket(xh, yh)
        res_first = max(res_first, first.norm())
        second = kk_bracket(lx, zv) - L_operator(kk_bracket(xh, zv))
        res_second = max(res_second, second.norm())
        lhs = system.block(kk_bracket(xh + zv, yh))
        rhs = linalg.bracket(system.block(xh + zv), system.block(yh))
        res_block = max(res_block, float(np.linalg.norm(lhs - rhs)))
    return {
        "bracket_identity_residual": res_first,
        "derivation_identity_residual": res_second,
        "block_agreement_residual": res_block,
        "trials": trials,
    }
