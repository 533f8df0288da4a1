"""Octonionic cross product on R^7, the splitting o(7) = L + g2, the
screw system on R^7 x| SO(7), its explicit geodesics and their momentum
certification.

The cross product is generated by e_i x e_{i+1} = e_{i+3} (indices mod 7)
together with antisymmetry and the cyclic rule e_i x e_j = e_k implies
e_j x e_k = e_i.  The derivation algebra g2 of the product is the
14-dimensional complement of the operators L_u(v) = u x v inside o(7).
Group elements of R^7 x| SO(7) are realized as 8x8 affine matrices for
exponentiation.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernels, linalg
from .control import LAMBDA_GRID, ControllabilityReport
from .exceptions import DomainError

DIM = 7
DIM_G2 = 14
DIM_MOTION = 28


def _build_structure_tensor():
    t = np.zeros((DIM, DIM, DIM))
    for i in range(1, DIM + 1):
        a, b, c = i, i % 7 + 1, (i + 2) % 7 + 1
        # each generating triple (a, b, c) yields three cyclic products
        for p, q, r in ((a, b, c), (b, c, a), (c, a, b)):
            t[p - 1, q - 1, r - 1] = 1.0
            t[q - 1, p - 1, r - 1] = -1.0
    return t


CROSS_TENSOR = _build_structure_tensor()


def cross(u, v):
    """Octonionic cross product of two vectors in R^7."""
    return np.einsum("i,j,ijk->k", np.asarray(u, float), np.asarray(v, float),
                     CROSS_TENSOR)


def L_op(u):
    """Antisymmetric matrix of v -> u x v."""
    return np.einsum("i,ijk->kj", np.asarray(u, float), CROSS_TENSOR)


def wedge(u, v):
    """Rank <= 2 antisymmetric matrix with (u ^ v)(w) = <w,u> v - <w,v> u."""
    u = np.asarray(u, float)
    v = np.asarray(v, float)
    return np.outer(v, u) - np.outer(u, v)


def Z_op(u, v):
    """Z(u, v) = 3 u ^ v - L_{u x v}; lands in g2."""
    return 3.0 * wedge(u, v) - L_op(cross(u, v))


def derivation_residual(z):
    """Max residual of Z(a x b) = Z(a) x b + a x Z(b) on all basis pairs."""
    z = np.asarray(z, float)
    eye = np.eye(DIM)
    worst = 0.0
    for i in range(DIM):
        for j in range(DIM):
            lhs = z @ cross(eye[i], eye[j])
            rhs = cross(z @ eye[i], eye[j]) + cross(eye[i], z @ eye[j])
            worst = max(worst, float(np.abs(lhs - rhs).max()))
    return worst


def bracket_LL(u, v):
    """Verify [L_u, L_v] = 3 u^v - 2 L_{u x v} and its regrouping
    [L_u, L_v] + L_{u x v} = Z(u, v); return both residuals and the
    L / g2 components (-L_{u x v}, Z(u, v)) of the commutator."""
    lu, lv = L_op(u), L_op(v)
    comm = lu @ lv - lv @ lu
    lcross = L_op(cross(u, v))
    first = comm - (3.0 * wedge(u, v) - 2.0 * lcross)
    second = comm + lcross - Z_op(u, v)
    return {
        "identity_residual": float(np.abs(first).max()),
        "regrouping_residual": float(np.abs(second).max()),
        "l_component": -lcross,
        "g2_component": Z_op(u, v),
    }


@lru_cache(maxsize=1)
def build_g2_basis():
    """Orthonormal basis of g2 from Gram-Schmidt over {Z(e_i, e_j) : i < j}
    in lexicographic order."""
    eye = np.eye(DIM)
    basis = []
    for i in range(DIM):
        for j in range(i + 1, DIM):
            cand = Z_op(eye[i], eye[j])
            for b in basis:
                cand = cand - np.sum(cand * b) * b
            norm = np.linalg.norm(cand)
            if norm > 1e-8:
                basis.append(cand / norm)
    if len(basis) != DIM_G2:
        raise DomainError(
            f"g2 construction produced {len(basis)} elements, expected {DIM_G2};"
            " the cross-product table is inconsistent"
        )
    return tuple(basis)


def split_o7(w):
    """Unique decomposition w = L_y + g2_part of an antisymmetric matrix."""
    w = np.asarray(w, float)
    if np.abs(w + w.T).max() > 1e-10 * max(1.0, np.abs(w).max()):
        raise DomainError("split is defined on antisymmetric matrices only")
    eye = np.eye(DIM)
    l_basis = [L_op(eye[s]) for s in range(DIM)]
    g2 = build_g2_basis()
    frame = np.stack([m.ravel() for m in (*l_basis, *g2)], axis=1)
    coeffs, *_ = np.linalg.lstsq(frame, w.ravel(), rcond=None)
    y = coeffs[:DIM]
    g2_part = sum(c * b for c, b in zip(coeffs[DIM:], g2))
    return y, g2_part


# -- the motion group R^7 x| SO(7) ------------------------------------------


@dataclass(frozen=True)
class MotionElement:
    """Element (a, A) of R^7 x| o(7) (algebra) or R^7 x| SO(7) (group)."""

    translation: np.ndarray
    rotation: np.ndarray

    def __sub__(self, other):
        return MotionElement(
            self.translation - other.translation, self.rotation - other.rotation
        )

    def norm(self):
        return float(
            np.sqrt(
                np.dot(self.translation, self.translation)
                + np.sum(self.rotation * self.rotation)
            )
        )


def motion_bracket(a: MotionElement, b: MotionElement) -> MotionElement:
    """[(a, A), (b, B)] = (A b - B a, [A, B])."""
    return MotionElement(
        a.rotation @ b.translation - b.rotation @ a.translation,
        a.rotation @ b.rotation - b.rotation @ a.rotation,
    )


def affine(el: MotionElement, group=False):
    """8x8 affine realization: [[A, a], [0, 1]] for the group,
    [[A, a], [0, 0]] for the algebra."""
    out = np.zeros((DIM + 1, DIM + 1))
    out[:DIM, :DIM] = el.rotation
    out[:DIM, DIM] = el.translation
    if group:
        out[DIM, DIM] = 1.0
    return out


def from_affine(mat) -> MotionElement:
    mat = np.asarray(mat)
    return MotionElement(mat[:DIM, DIM].real.copy(), mat[:DIM, :DIM].real.copy())


def motion_exp(el: MotionElement) -> np.ndarray:
    """Group exponential through the affine realization."""
    return _kernels.expm(affine(el)).real


def motion_flat(el: MotionElement) -> np.ndarray:
    """Flatten to a 56-vector (translation then rotation entries)."""
    return np.concatenate([el.translation, el.rotation.ravel()])


# -- controllability ---------------------------------------------------------


def eq13_vectors(lam):
    """The 7 lifted generators and the 21 scaled first brackets whose span
    decides controllability."""
    eye = np.eye(DIM)
    out = [MotionElement(eye[s], lam * L_op(eye[s])) for s in range(DIM)]
    for i in range(DIM):
        li = L_op(eye[i])
        for j in range(i + 1, DIM):
            lj = L_op(eye[j])
            out.append(MotionElement(2.0 * cross(eye[i], eye[j]),
                                     lam * (li @ lj - lj @ li)))
    return out


def octo_controllability(lam) -> ControllabilityReport:
    """Rank test of the screw system on R^7 x| SO(7) at pitch lam."""
    vectors = [motion_flat(v).reshape(1, -1) for v in eq13_vectors(lam)]
    rank = linalg.numeric_rank(vectors)
    predicted = abs(lam) > 1e-12
    return ControllabilityReport(
        system={"family": "R7xSO7", "n": 7, "lambda": float(lam)},
        dim_g=DIM_MOTION,
        dim_span=rank,
        predicted=predicted,
        observed=(rank == DIM_MOTION),
        expected_rank=DIM_MOTION if predicted else DIM,
        extra={"generators": len(vectors)},
    )


def octo_sweep(lambdas=LAMBDA_GRID):
    return [octo_controllability(lam) for lam in lambdas]


# -- geodesics ---------------------------------------------------------------


def _check_admissible(x, y, lam):
    x = np.asarray(x, float)
    y = np.asarray(y, float)
    if abs(lam) < 1e-12:
        raise DomainError("octonionic geodesics require lam != 0")
    if abs(np.dot(x, y)) > 1e-10 * max(1.0, np.linalg.norm(x) * np.linalg.norm(y)):
        raise DomainError("x and y must be orthogonal")
    return x, y


def octo_generators(x, y, lam):
    """The two exponents of the geodesic: X = (x, lam L_x + Z(x,y)) and
    Z = (0, Z(x,y))."""
    x, y = _check_admissible(x, y, lam)
    z = Z_op(x, y)
    big_x = MotionElement(x, lam * L_op(x) + z)
    big_z = MotionElement(np.zeros(DIM), z)
    return big_x, big_z


def octo_geodesic(x, y, lam, t) -> MotionElement:
    """gamma_{x,y}(t) = exp(t(x, lam L_x + Z(x,y))) exp(-t(0, Z(x,y))).

    The second factor inverts the g2 rotation so that the left
    logarithmic derivative Ad(exp(t Z))(X) - Z stays in the distribution:
    exp(t Z(x,y)) is an automorphism of the cross product, hence
    conjugates L_x to L along the rotated direction.
    """
    big_x, big_z = octo_generators(x, y, lam)
    point = _kernels.expm(t * affine(big_x)) @ _kernels.expm(-t * affine(big_z))
    return from_affine(point.real)


def octo_log_derivative(x, y, lam, t) -> MotionElement:
    """Exact left logarithmic derivative of the octonionic geodesic."""
    big_x, big_z = octo_generators(x, y, lam)
    e = _kernels.expm(t * affine(big_z)).real
    d = e @ affine(big_x) @ np.linalg.inv(e) - affine(big_z)
    return from_affine(d)


def initial_velocity(x, y, lam) -> MotionElement:
    """gamma'(0) = X - Z = (x, lam L_x), exact."""
    big_x, big_z = octo_generators(x, y, lam)
    return big_x - big_z


# -- momentum certification --------------------------------------------------


class Covector:
    """Linear functional on R^7 x| o(7), stored as coefficients against a
    declared 28-element basis."""

    def __init__(self, coefficients, basis):
        self.coefficients = np.asarray(coefficients, float)
        self.basis = basis
        frame = np.stack([motion_flat(b) for b in basis])
        if frame.shape != (DIM_MOTION, DIM + DIM * DIM):
            raise DomainError("basis must contain 28 motion-algebra elements")
        # coordinates(v) = pinv(frame^T) v; precomputed once
        self._dual = np.linalg.pinv(frame.T)

    def coordinates(self, el: MotionElement):
        return self._dual @ motion_flat(el)

    def __call__(self, el: MotionElement) -> float:
        return float(np.dot(self.coefficients, self.coordinates(el)))


def _orthonormal_frame(seeds):
    """Gram-Schmidt completion of the given vectors to a frame of R^7,
    with deterministic pivoting over the standard basis."""
    frame = []
    for v in (*seeds, *np.eye(DIM)):
        w = np.asarray(v, float)
        for u in frame:
            w = w - np.dot(w, u) * u
        norm = np.linalg.norm(w)
        if norm > 1e-10:
            frame.append(w / norm)
        if len(frame) == DIM:
            break
    return frame


def adapted_basis(x, y, lam):
    """The 28-element basis adapted to (x, y): lifted frame vectors,
    vertical L-operators of the frame, then the g2 basis."""
    n = np.linalg.norm(y)
    if n > 0:
        x1, x2 = x, y / n
        frame = _orthonormal_frame([x1, x2, cross(x1, x2)])
    else:
        frame = _orthonormal_frame([x])
    zero = np.zeros(DIM)
    basis = [MotionElement(v, lam * L_op(v)) for v in frame]
    basis += [MotionElement(zero, L_op(v)) for v in frame]
    basis += [MotionElement(zero, z) for z in build_g2_basis()]
    return basis


def certify_octo_momentum(x, y, lam):
    """Certify that the explicit geodesic is the normal geodesic with
    initial momentum alpha = delta_1 + c nu_1 + d nu_3, c = 2/(3 lam),
    d = -2n/(3 lam^2), n = ||y|| (alpha = delta_1 when y = 0).

    Checks the three momentum conditions (cometric image, invariance
    under ad of both exponents), the vanishing of alpha on {0} x g2, and
    the Hamiltonian value 1/2 ||x||^2.
    """
    x = np.asarray(x, float)
    y = np.asarray(y, float)
    if abs(np.linalg.norm(x) - 1.0) > 1e-10:
        raise DomainError("normalize x first: the certificate assumes ||x|| = 1")
    _check_admissible(x, y, lam)
    n = float(np.linalg.norm(y))
    basis = adapted_basis(x, y, lam)
    coeffs = np.zeros(DIM_MOTION)
    coeffs[0] = 1.0
    if n > 0:
        c = 2.0 / (3.0 * lam)
        d = -2.0 * n / (3.0 * lam**2)
        coeffs[DIM] = c
        coeffs[DIM + 2] = d
    else:
        c = d = 0.0
    alpha = Covector(coeffs, basis)

    big_x, big_z = octo_generators(x, y, lam)
    # cometric: b(delta_i) = (x_i, lam L_{x_i}), b(nu_i) = b(zeta_j) = 0
    b_alpha = basis[0]
    cometric_residual = (b_alpha - (big_x - big_z)).norm()

    ad_x_residual = max(abs(alpha(motion_bracket(big_x, bp))) for bp in basis)
    g2_zero = np.zeros(DIM)
    ad_z_residual = max(
        abs(alpha(MotionElement(g2_zero, big_z.rotation @ w.rotation
                                - w.rotation @ big_z.rotation)))
        for w in basis[2 * DIM:]
    )
    zeta_residual = max(abs(alpha(b)) for b in basis[2 * DIM:])
    hamiltonian = 0.5 * alpha(b_alpha)
    return {
        "c": c,
        "d": d,
        "n": n,
        "cometric_residual": cometric_residual,
        "ad_X_residual": ad_x_residual,
        "ad_Z_residual": ad_z_residual,
        "g2_vanishing_residual": zeta_residual,
        "hamiltonian": hamiltonian,
        "hamiltonian_expected": 0.5,
    }


def random_orthogonal_pair(seed, scale_x=1.0, scale_y=1.0):
    """Seeded pair (x, y) in R^7 with x unit-normalized times scale_x and
    y orthogonal to x with norm scale_y."""
    rng = np.random.Generator(np.random.PCG64(seed))
    x = rng.standard_normal(DIM)
    x = x / np.linalg.norm(x) * scale_x
    y = rng.standard_normal(DIM)
    y = y - np.dot(y, x) * x / np.dot(x, x)
    return x, y / np.linalg.norm(y) * scale_y
