"""The non-compact dual of a compact classical group as a set of "small
rotations": graphs of unitaries as maximal isotropic subspaces of the
split space F^{n,n}, the Moebius action of the split unitary group, the
homomorphism psi identifying the J-commuting subgroup with the
complexification, and the closed-form SO(2) orbit.

Everything is generic over the scalar field F in {R, C, H}; quaternionic
matrices participate through the QuaternionMatrix type and are
complexified via their embedding where psi or spectra are needed.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels, linalg
from .exceptions import DomainError, SingularityError
from .linalg import COMPLEX, QUATERNION, REAL, QuaternionMatrix, qblock

FIELDS = (REAL, COMPLEX, QUATERNION)


# -- field-generic helpers ---------------------------------------------------


def _ct(m):
    """Conjugate transpose over any of the three fields."""
    if isinstance(m, QuaternionMatrix):
        return m.H
    return np.conj(np.asarray(m)).T


def _inv(m):
    if isinstance(m, QuaternionMatrix):
        return m.inv()
    return np.linalg.inv(m)


def _eye(field, n):
    if field == QUATERNION:
        return QuaternionMatrix.eye(n)
    dtype = complex if field == COMPLEX else float
    return np.eye(n, dtype=dtype)


def _zeros(field, n):
    if field == QUATERNION:
        return QuaternionMatrix.zeros(n)
    dtype = complex if field == COMPLEX else float
    return np.zeros((n, n), dtype=dtype)


def _block2(blocks):
    if isinstance(blocks[0][0], QuaternionMatrix):
        return qblock(blocks)
    return np.block(blocks)


def _norm(m):
    return linalg.frobenius(m)


def _split_blocks(x, n):
    """Quadrants of a 2n x 2n matrix, in (a, c, b, d) reading order:
    a top-left, c top-right, b bottom-left, d bottom-right."""
    if isinstance(x, QuaternionMatrix):
        rows_top, rows_bot = slice(0, n), slice(n, 2 * n)
        return (
            x.submatrix(rows_top, rows_top),
            x.submatrix(rows_top, rows_bot),
            x.submatrix(rows_bot, rows_top),
            x.submatrix(rows_bot, rows_bot),
        )
    return x[:n, :n], x[:n, n:], x[n:, :n], x[n:, n:]


def _size(x):
    return x.shape[0]


def split_form_matrix(field, n):
    """R = diag(I, -I), the matrix of the split Hermitian form."""
    eye, zero = _eye(field, n), _zeros(field, n)
    return _block2([[eye, zero], [zero, -1.0 * eye]])


def j_matrix(field, n):
    """J(x, y) = (-y, x)."""
    eye, zero = _eye(field, n), _zeros(field, n)
    return _block2([[zero, -1.0 * eye], [eye, zero]])


# -- memberships -------------------------------------------------------------


def unitary_residual(a):
    n = _size(a)
    field = linalg.field_of(a)
    return _norm(_ct(a) @ a - _eye(field, n))


def u_nn_residual(x):
    """Residual of X* R X = R, membership in the split unitary group."""
    n = _size(x) // 2
    r = split_form_matrix(linalg.field_of(x), n)
    return _norm(_ct(x) @ r @ x - r)


@dataclass
class UJReport:
    member: bool
    split_residual: float
    j_residual: float
    a: object = None
    b: object = None
    relation_residual: float = 0.0


def uJ_membership(x, tol=1e-10) -> UJReport:
    """Membership in the J-commuting split unitary subgroup; on success
    reports the blocks (a, b) of [[a, -b], [b, a]] and the residual of
    their defining relations a*a - b*b = I, a*b = -b*a."""
    n = _size(x) // 2
    field = linalg.field_of(x)
    j = j_matrix(field, n)
    split_res = float(u_nn_residual(x))
    j_res = float(_norm(x @ j - j @ x))
    if split_res > tol or j_res > tol:
        return UJReport(False, split_res, j_res)
    a, _, b, _ = _split_blocks(x, n)
    rel = max(
        _norm(_ct(a) @ a - _ct(b) @ b - _eye(field, n)),
        _norm(_ct(a) @ b + _ct(b) @ a),
    )
    return UJReport(True, split_res, j_res, a, b, float(rel))


# -- graphs and the Moebius action --------------------------------------------


def graph_subspace(a):
    """Orthonormal column frame of the reflected graph {(Ax, x)}."""
    n = _size(a)
    field = linalg.field_of(a)
    frame = _block2([[a], [_eye(field, n)]]) * (1.0 / np.sqrt(2.0))
    return frame


def graph_isotropy_residual(a):
    """Entrywise size of the split-form Gram matrix of the graph; equals
    ||A*A - I|| / 2, zero exactly for unitary A."""
    n = _size(a)
    r = split_form_matrix(linalg.field_of(a), n)
    frame = graph_subspace(a)
    return _norm(_ct(frame) @ r @ frame)


def subspace_projector(frame):
    """Orthogonal projector onto the span of an orthonormal frame, as a
    complex matrix (quaternionic frames are embedded)."""
    f = linalg.embed_complex(frame)
    return f @ f.conj().T


def subspaces_equal(frame1, frame2, tol=1e-9):
    p1, p2 = subspace_projector(frame1), subspace_projector(frame2)
    return float(np.linalg.norm(p1 - p2)) <= tol


def mobius_act(x, a):
    """Fractional-linear action X . A = (aA + c)(bA + d)^{-1} of the split
    unitary group on unitaries, X = [[a, c], [b, d]]."""
    n = _size(a)
    # relative check: entries of X*RX grow like ||X||^2, so an absolute
    # threshold would reject far-out but exact group elements
    if u_nn_residual(x) > 1e-9 * max(1.0, float(_norm(x)) ** 2):
        raise DomainError("X must preserve the split form")
    xa, xc, xb, xd = _split_blocks(x, n)
    denom = xb @ a + xd
    denom_c = linalg.embed_complex(denom)
    if np.linalg.cond(denom_c) > 1e12:
        raise SingularityError("point moved to infinity: bA + d is singular")
    return (xa @ a + xc) @ _inv(denom)


# -- psi and the matrix trigonometry ------------------------------------------


def mat_cos(z):
    """cos of a square matrix via (exp(iz) + exp(-iz)) / 2."""
    return _cos_sin(z)[0]


def mat_sin(z):
    return _cos_sin(z)[1]


def _cos_sin(z):
    m = linalg.embed_complex(z)
    plus = _kernels.expm(1j * m)
    minus = _kernels.expm(-1j * m)
    c = 0.5 * (plus + minus)
    s = -0.5j * (plus - minus)
    if isinstance(z, QuaternionMatrix):
        return (
            QuaternionMatrix.from_embedding(c),
            QuaternionMatrix.from_embedding(s),
        )
    if not np.iscomplexobj(z):
        return c.real, s.real
    return c, s


def build_uJ(u, z):
    """The J-commuting element [[u cos z, -u sin z], [u sin z, u cos z]]
    from a unitary u and an anti-Hermitian z."""
    c, s = _cos_sin(z)
    return _block2([[u @ c, -1.0 * (u @ s)], [u @ s, u @ c]])


def psi_map(x):
    """psi([[a, -b], [b, a]]) = a + i b, the isomorphism onto the
    complexified unitary group.  Quaternionic blocks are complexified
    through their embedding."""
    report = uJ_membership(x)
    if not report.member:
        raise DomainError("psi is defined on the J-commuting subgroup only")
    a = linalg.embed_complex(report.a)
    b = linalg.embed_complex(report.b)
    return a + 1j * b


def u_prime_sigma_min(a):
    """Smallest singular value of A^2 + I (nonsingular exactly on U')."""
    m = linalg.embed_complex(a)
    vals = np.linalg.svd(m @ m + np.eye(m.shape[0]), compute_uv=False)
    return float(vals[-1])


@dataclass
class UPlusReport:
    member: bool
    boundary: bool
    min_real_part: float
    a2_plus_i_sigma_min: float


def u_plus_membership(a, margin=1e-9) -> UPlusReport:
    """Small-rotation test: every eigenvalue of A has positive real part.

    Real parts within the margin of zero give a boundary verdict (the
    rotation is "at infinity") rather than a clean membership call.
    """
    if unitary_residual(a) > 1e-9:
        raise DomainError("membership is defined for unitary matrices")
    reals = linalg.eig_real_parts(a)
    low = reals[0]
    return UPlusReport(
        member=bool(low > margin),
        boundary=bool(abs(low) <= margin),
        min_real_part=float(low),
        a2_plus_i_sigma_min=u_prime_sigma_min(a),
    )


# -- random generators --------------------------------------------------------


def _random_anti_hermitian(field, n, rng):
    if field == QUATERNION:
        a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        a = 0.5 * (a - a.conj().T)
        b = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        b = 0.5 * (b + b.T)
        return QuaternionMatrix(a, b)
    if field == COMPLEX:
        a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        return 0.5 * (a - a.conj().T)
    a = rng.standard_normal((n, n))
    return 0.5 * (a - a.T)


def _random_general(field, n, rng):
    if field == QUATERNION:
        return QuaternionMatrix(
            rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)),
            rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)),
        )
    if field == COMPLEX:
        return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return rng.standard_normal((n, n))


def random_unitary(field, n, seed, scale=1.0):
    """exp of a seeded random anti-Hermitian matrix."""
    rng = np.random.Generator(np.random.PCG64(seed))
    z = _random_anti_hermitian(field, n, rng) * scale
    return linalg.mat_exp(z)


def random_u_nn(field, n, seed, scale=0.5):
    """Seeded random element of the split unitary group U(n, n, F),
    the exponential of [[p, q], [q*, r]] with p, r anti-Hermitian."""
    rng = np.random.Generator(np.random.PCG64(seed))
    p = _random_anti_hermitian(field, n, rng) * scale
    r = _random_anti_hermitian(field, n, rng) * scale
    q = _random_general(field, n, rng) * scale
    m = _block2([[p, q], [_ct(q), r]])
    return linalg.mat_exp(m)


def random_uJ(field, n, seed, scale=0.5):
    """Seeded random element of the J-commuting subgroup, built from the
    (u, z) parametrization."""
    rng = np.random.Generator(np.random.PCG64(seed))
    u = linalg.mat_exp(_random_anti_hermitian(field, n, rng) * scale)
    z = _random_anti_hermitian(field, n, rng) * scale
    return build_uJ(u, z)


# -- the SO(2) example --------------------------------------------------------


def _rot2(angle):
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, -s], [s, c]])


def so2_orbit(s, t, eps):
    """Orbit of eps = +-1 in SO(2), identified with the unit circle,
    under the complexified rotation with parameter zeta = s + it.

    Returns (closed_form, matrix_route): the closed form is
    eps * exp(-i eps arcsin(tanh 2t)); the matrix route builds the
    J-commuting element from (u, z), applies the Moebius action to
    eps I_2 and reads the resulting rotation off as a unit complex
    number.  The orbit does not depend on s.
    """
    if eps not in (1, -1):
        raise DomainError("eps must be +1 or -1")
    closed = eps * np.exp(-1j * eps * np.arcsin(np.tanh(2.0 * t)))
    u = _rot2(s)
    z = np.array([[0.0, -t], [t, 0.0]])
    x = build_uJ(u, z)
    w = mobius_act(x, eps * np.eye(2))
    matrix_route = complex(w[0, 0] + 1j * w[1, 0])
    return closed, matrix_route
