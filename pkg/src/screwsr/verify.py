"""Aggregated numerical certification of every identity the library
implements, grouped per module.  Each check returns a CheckResult with
its worst residual and tolerance; run_all collects the full suite.
"""

import time
from dataclasses import dataclass, field

import numpy as np

from . import control, dualspace, geodesics, groups, linalg, octonion, screws
from .control import LAMBDA_GRID
from .groups import CompactGroupId
from .screws import ScrewSystem

SWEEP_GROUPS = (
    CompactGroupId("SO", 3),
    CompactGroupId("SO", 4),
    CompactGroupId("SU", 2),
    CompactGroupId("SU", 3),
    CompactGroupId("Sp", 1),
    CompactGroupId("Sp", 2),
)
CURVATURES = (1, -1, 0)


@dataclass
class CheckResult:
    name: str
    passed: bool
    residual: float
    tolerance: float
    detail: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "detail": self.detail,
        }


def _result(name, residual, tolerance, **detail):
    return CheckResult(name, bool(residual <= tolerance), float(residual),
                       float(tolerance), detail)


def _flag(name, ok, **detail):
    return CheckResult(name, bool(ok), 0.0 if ok else 1.0, 0.5, detail)


# -- algebra -----------------------------------------------------------------


def algebra_suite(seed=0):
    rng = np.random.Generator(np.random.PCG64(seed))
    out = []

    worst = 0.0
    for _ in range(20):
        a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        a *= 5.0 / np.linalg.norm(a)
        worst = max(worst, np.linalg.norm(
            linalg.mat_exp(a) @ linalg.mat_exp(-a) - np.eye(4)))
    out.append(_result("exp inverse identity", worst, 1e-12))

    worst = 0.0
    for _ in range(20):
        z = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        z = 0.5 * (z - z.conj().T)
        e = linalg.mat_exp(z)
        worst = max(worst, np.linalg.norm(e.conj().T @ e - np.eye(4)))
    out.append(_result("exp of anti-Hermitian is unitary", worst, 1e-10))

    worst = 0.0
    for _ in range(10):
        d = np.diag(rng.standard_normal(4) + 1j * rng.standard_normal(4))
        e = np.diag(rng.standard_normal(4) + 1j * rng.standard_normal(4))
        worst = max(worst, np.linalg.norm(
            linalg.mat_exp(d + e) - linalg.mat_exp(d) @ linalg.mat_exp(e)))
    out.append(_result("exp additivity on commuting arguments", worst, 1e-10))

    worst = 0.0
    for _ in range(20):
        a, b, c = (rng.standard_normal((3, 3)) for _ in range(3))
        jac = (linalg.bracket(a, linalg.bracket(b, c))
               + linalg.bracket(b, linalg.bracket(c, a))
               + linalg.bracket(c, linalg.bracket(a, b)))
        worst = max(worst, np.linalg.norm(jac))
    out.append(_result("Jacobi identity of the commutator", worst, 1e-12))

    worst = 0.0
    for trial in range(20):
        p = dualspace._random_general(linalg.QUATERNION, 3, rng)
        q = dualspace._random_general(linalg.QUATERNION, 3, rng)
        worst = max(worst, np.linalg.norm(
            (p @ q).embed() - p.embed() @ q.embed()))
    out.append(_result("quaternion embedding is a homomorphism", worst, 1e-12))

    basis = groups.algebra_basis(CompactGroupId("SO", 3)).elements
    rank_plain = linalg.numeric_rank([b for b in basis])
    mixed = [basis[0] + basis[1], basis[0] - basis[1], 2.0 * basis[2]]
    rank_mixed = linalg.numeric_rank(mixed)
    out.append(_flag("numeric rank is span-invariant",
                     rank_plain == 3 and rank_mixed == 3,
                     rank_plain=rank_plain, rank_mixed=rank_mixed))
    return out


# -- compact groups ----------------------------------------------------------


def groups_suite(seed=1):
    out = []
    for gid in SWEEP_GROUPS:
        basis = groups.algebra_basis(gid)
        out.append(_flag(f"{gid} basis count", len(basis) == gid.dim,
                         count=len(basis), dim=gid.dim))
        embedded = groups.embedded_basis(gid)
        brackets = [linalg.bracket(embedded[i], embedded[j])
                    for i in range(len(embedded))
                    for j in range(i + 1, len(embedded))]
        rank = linalg.numeric_rank(list(embedded) + brackets)
        out.append(_flag(f"{gid} bracket closure and [k,k] = k",
                         rank == gid.dim, rank=rank))
        worst = 0.0
        for t in range(5):
            x = linalg.embed_complex(groups.random_algebra_element(gid, seed + 3 * t))
            y = linalg.embed_complex(groups.random_algebra_element(gid, seed + 3 * t + 1))
            z = linalg.embed_complex(groups.random_algebra_element(gid, seed + 3 * t + 2))
            worst = max(worst, abs(
                linalg.re_trace_inner(linalg.bracket(z, x), y)
                + linalg.re_trace_inner(x, linalg.bracket(z, y))))
        out.append(_result(f"{gid} ad-invariance of the inner product",
                           worst, 1e-10))
        worst = 0.0
        for t in range(5):
            x = linalg.embed_complex(groups.random_algebra_element(gid, seed + 100 + t))
            y = linalg.embed_complex(groups.random_algebra_element(gid, seed + 200 + t))
            g = linalg.mat_exp(linalg.embed_complex(
                groups.random_algebra_element(gid, seed + 300 + t)))
            gap = abs(
                linalg.re_trace_inner(groups.adjoint(g, x), groups.adjoint(g, y))
                - linalg.re_trace_inner(x, y))
            worst = max(worst, gap)
        out.append(_result(f"{gid} adjoint preserves the inner product",
                           worst, 1e-10))
    return out


# -- screw core --------------------------------------------------------------


def screws_suite(seed=2):
    out = []
    gid = CompactGroupId("SU", 2)
    for k in CURVATURES:
        system = ScrewSystem(gid, k, 0.5)
        rep = screws.verify_L_identities(system, trials=20, seed=seed)
        worst = max(rep["bracket_identity_residual"],
                    rep["derivation_identity_residual"])
        out.append(_result(f"L identities, k={k}", worst, 1e-10))
        out.append(_result(f"block-commutator agreement, k={k}",
                           rep["block_agreement_residual"], 1e-13))

        worst = 0.0
        for t in range(10):
            x = groups.random_algebra_element(gid, seed + 2 * t)
            y = groups.random_algebra_element(gid, seed + 2 * t + 1)
            lift_x = system.horizontal_lift(x)
            lift_y = system.horizontal_lift(y)
            br = screws.kk_bracket(lift_x, lift_y)
            comm = linalg.bracket(lift_x.x, lift_y.x)
            expected = screws.KkElement(
                2.0 * system.lam * comm, (system.lam**2 + k) * comm, k)
            worst = max(worst, (br - expected).norm())
        out.append(_result(f"bracket of lifted pairs, k={k}", worst, 1e-12))

        worst = 0.0
        for t in range(10):
            a = system.random_element(seed + 50 + t)
            b = system.random_element(seed + 90 + t)
            ta, tb = screws.t_k_isomorphism(a), screws.t_k_isomorphism(b)
            tab = screws.t_k_isomorphism(screws.kk_bracket(a, b))
            if k == 1:
                got = (linalg.bracket(ta[0], tb[0]), linalg.bracket(ta[1], tb[1]))
                gap = max(np.linalg.norm(tab[0] - got[0]),
                          np.linalg.norm(tab[1] - got[1]))
            elif k == -1:
                gap = np.linalg.norm(tab - linalg.bracket(ta, tb))
            else:
                # semidirect bracket: (ad(y1) x2 - ad(y2) x1, [y1, y2])
                got = (linalg.bracket(ta[1], tb[0]) - linalg.bracket(tb[1], ta[0]),
                       linalg.bracket(ta[1], tb[1]))
                gap = max(np.linalg.norm(tab[0] - got[0]),
                          np.linalg.norm(tab[1] - got[1]))
            worst = max(worst, float(gap))
        out.append(_result(f"T_k is a Lie algebra homomorphism, k={k}",
                           worst, 1e-12))

        worst = 0.0
        for t in range(10):
            a = system.random_element(seed + 10 + t)
            b = system.random_element(seed + 20 + t)
            c = system.random_element(seed + 30 + t)
            worst = max(worst, abs(
                system.g_form(screws.kk_bracket(c, a), b)
                + system.g_form(a, screws.kk_bracket(c, b))))
        out.append(_result(f"g is ad-invariant, k={k}", worst, 1e-10))

    ok = True
    for k in CURVATURES:
        for lam in LAMBDA_GRID:
            system = ScrewSystem(gid, k, lam)
            eigs = np.abs(np.linalg.eigvalsh(system.g_gram()))
            degenerate = eigs.min() < 1e-9 * eigs.max()
            ok = ok and (degenerate == (abs(lam * lam - k) < 1e-12))
    out.append(_flag("g degenerate exactly on lam^2 = k", ok))
    return out


# -- controllability ----------------------------------------------------------


def controllability_suite():
    out = []
    mismatches = 0
    cases = 0
    for gid in SWEEP_GROUPS:
        for report in control.sweep(gid):
            cases += 1
            if report.observed != report.predicted or not report.consistent:
                mismatches += 1
    out.append(_flag("rank sweep matches the predicted controllability locus",
                     mismatches == 0, cases=cases, mismatches=mismatches))
    for kappa, lam, expected in ((0, 0.0, False), (1, 1.0, False), (-1, 0.5, True)):
        rep = control.space_form_report(kappa, lam)
        out.append(_flag(f"space form kappa={kappa}, lam={lam}",
                         rep.observed == expected, rank=rep.dim_span))
    return out


# -- geodesics ----------------------------------------------------------------


def geodesics_suite(seed=3):
    out = []
    worst_h = worst_s = worst_m = 0.0
    for gid in (CompactGroupId("SO", 3), CompactGroupId("SU", 2),
                CompactGroupId("Sp", 1)):
        for k in CURVATURES:
            for lam in (0.5, -2.0):
                system = ScrewSystem(gid, k, lam)
                for t in range(3):
                    x = groups.random_algebra_element(gid, seed + 2 * t)
                    y = groups.random_algebra_element(gid, seed + 2 * t + 1)
                    spec = geodesics.GeodesicSpec(system, x, y)
                    cert = geodesics.certify(spec, count=41)
                    worst_h = max(worst_h, cert["horizontality_residual"])
                    worst_s = max(worst_s, cert["speed_deviation"])
                    worst_m = max(worst_m, cert["membership_residual"])
    out.append(_result("geodesic horizontality", worst_h, 1e-9))
    out.append(_result("geodesic constant speed", worst_s, 1e-9))
    out.append(_result("geodesic group membership", worst_m, 1e-9))

    gid = CompactGroupId("SU", 2)
    system = ScrewSystem(gid, 0, 1.0)
    x = groups.random_algebra_element(gid, seed + 11)
    commuting = geodesics.GeodesicSpec(system, x, 2.0 * linalg.embed_complex(x))
    cert_c = geodesics.certify(commuting, count=41)
    y = groups.random_algebra_element(gid, seed + 12)
    generic = geodesics.GeodesicSpec(system, x, y)
    cert_g = geodesics.certify(generic, count=41)
    out.append(_flag(
        "single-exponential degeneration iff [X, Y] = 0",
        cert_c["single_exponential_gap"] <= 1e-10
        and cert_c["commutator_norm"] <= 1e-12
        and cert_g["single_exponential_gap"] > 1e-6
        and cert_g["commutator_norm"] > 1e-6,
        commuting_gap=cert_c["single_exponential_gap"],
        generic_gap=cert_g["single_exponential_gap"]))

    crit = geodesics.verify_geodesic_criterion(generic)
    out.append(_result("distribution is the h-orthogonal complement",
                       crit["orthogonality_residual"], 1e-10))
    out.append(_flag("h positive definite on the distribution",
                     crit["h_positive_definite"],
                     min_eigenvalue=crit["h_gram_min_eigenvalue"]))

    rng = np.random.Generator(np.random.PCG64(seed))
    worst = 0.0
    for kappa, lam in ((0, 1.0), (1, 0.5), (-1, -0.75)):
        x = rng.standard_normal(3)
        y = rng.standard_normal(3)
        rep = geodesics.cross_check_space_form(kappa, lam, x, y, count=21)
        worst = max(worst, rep["derivative_gap"])
    out.append(_result("space-form geodesics match the SO(3) model",
                       worst, 1e-8))
    return out


# -- octonion ------------------------------------------------------------------


def octonion_suite(seed=4, ll_pairs=1000):
    out = []
    eye = np.eye(7)
    table = (
        (5, 6, 1), (2, 4, 1), (3, 7, 1), (6, 7, 2), (4, 1, 2), (3, 5, 2),
        (7, 1, 3), (5, 2, 3), (4, 6, 3), (1, 2, 4), (6, 3, 4), (5, 7, 4),
        (2, 3, 5), (7, 4, 5), (6, 1, 5), (3, 4, 6), (7, 2, 6), (1, 5, 6),
        (4, 5, 7), (2, 6, 7), (1, 3, 7),
    )
    worst = max(
        float(np.abs(octonion.cross(eye[i - 1], eye[j - 1]) - eye[s - 1]).max())
        for i, j, s in table
    )
    out.append(_result("cross-product table (21 products)", worst, 0.0))

    ok = True
    for i in range(7):
        for j in range(7):
            c = octonion.cross(eye[i], eye[j])
            ok = ok and np.allclose(c, -octonion.cross(eye[j], eye[i]))
            if i != j and np.abs(c).max() > 0:
                k = int(np.argmax(np.abs(c)))
                if c[k] > 0:
                    ok = ok and np.allclose(octonion.cross(eye[j], eye[k]), eye[i])
    out.append(_flag("cross-product antisymmetry and cyclicity", ok))

    rng = np.random.Generator(np.random.PCG64(seed))
    worst = 0.0
    for _ in range(ll_pairs):
        u = rng.standard_normal(7)
        v = rng.standard_normal(7)
        rep = octonion.bracket_LL(u, v)
        worst = max(worst, rep["identity_residual"], rep["regrouping_residual"])
    out.append(_result("[L_u, L_v] = 3u^v - 2L_{uxv}", worst, 1e-12))

    g2 = octonion.build_g2_basis()
    out.append(_flag("dim g2 = 14", len(g2) == 14, count=len(g2)))
    worst = max(octonion.derivation_residual(z) for z in g2)
    out.append(_result("g2 elements are cross-product derivations",
                       worst, 1e-12))
    worst = 0.0
    for z in g2:
        for s in range(7):
            lhs = z @ octonion.L_op(eye[s]) - octonion.L_op(eye[s]) @ z
            worst = max(worst, float(np.abs(lhs - octonion.L_op(z @ eye[s])).max()))
    out.append(_result("[Z, L_u] = L_{Z(u)} on the g2 basis", worst, 1e-12))

    l_basis = [octonion.L_op(eye[s]) for s in range(7)]
    rank = linalg.numeric_rank(l_basis + list(g2))
    out.append(_flag("o(7) = L + g2 (rank 21)", rank == 21, rank=rank))

    ok = True
    for lam in LAMBDA_GRID:
        rep = octonion.octo_controllability(lam)
        ok = ok and rep.consistent and (rep.observed == rep.predicted)
    out.append(_flag("octonionic controllability sweep", ok))

    worst_mom = 0.0
    worst_vel = 0.0
    worst_ham = 0.0
    for t in range(5):
        x, y = octonion.random_orthogonal_pair(seed + t, scale_y=1.5)
        for lam in (1.0, -0.5):
            rep = octonion.certify_octo_momentum(x, y, lam)
            worst_mom = max(worst_mom, rep["cometric_residual"],
                            rep["ad_X_residual"], rep["ad_Z_residual"],
                            rep["g2_vanishing_residual"])
            worst_ham = max(worst_ham, abs(rep["hamiltonian"] - 0.5))
            vel = octonion.initial_velocity(x, y, lam)
            expected = octonion.MotionElement(x, lam * octonion.L_op(x))
            worst_vel = max(worst_vel, (vel - expected).norm())
    out.append(_result("octonionic momentum conditions", worst_mom, 1e-9))
    out.append(_result("octonionic initial velocity", worst_vel, 1e-10))
    out.append(_result("Hamiltonian equals ||x||^2 / 2", worst_ham, 1e-10))

    worst = 0.0
    x, y = octonion.random_orthogonal_pair(seed + 77)
    for t in np.linspace(0.0, 3.0, 13):
        lld = octonion.octo_log_derivative(x, y, 1.0, float(t))
        worst = max(worst, float(np.linalg.norm(
            lld.rotation - octonion.L_op(lld.translation))))
        worst = max(worst, abs(np.linalg.norm(lld.translation) - 1.0))
    out.append(_result("octonionic geodesic horizontality and speed",
                       worst, 1e-9))
    return out


# -- dual space ----------------------------------------------------------------


def dualspace_suite(seed=5, triples=100):
    out = []
    worst_iso = 0.0
    worst_act = 0.0
    worst_psi = 0.0
    for field in dualspace.FIELDS:
        for n in (2, 3):
            for t in range(max(1, triples // 20)):
                a = dualspace.random_unitary(field, n, seed + t)
                worst_iso = max(worst_iso, dualspace.graph_isotropy_residual(a))
            for t in range(triples):
                x = dualspace.random_u_nn(field, n, seed + 1000 + 3 * t)
                y = dualspace.random_u_nn(field, n, seed + 1000 + 3 * t + 1)
                a = dualspace.random_unitary(field, n, seed + 1000 + 3 * t + 2)
                lhs = dualspace.mobius_act(x @ y, a)
                rhs = dualspace.mobius_act(x, dualspace.mobius_act(y, a))
                worst_act = max(worst_act, dualspace._norm(lhs - rhs),
                                dualspace.unitary_residual(lhs))
            for t in range(20):
                x = dualspace.random_uJ(field, n, seed + 5000 + 2 * t)
                y = dualspace.random_uJ(field, n, seed + 5000 + 2 * t + 1)
                gap = np.linalg.norm(
                    dualspace.psi_map(x @ y)
                    - dualspace.psi_map(x) @ dualspace.psi_map(y))
                worst_psi = max(worst_psi, float(gap))
    out.append(_result("graph isotropy", worst_iso, 1e-10))
    out.append(_result("Moebius closure and associativity", worst_act, 1e-9))
    out.append(_result("psi is a homomorphism", worst_psi, 1e-9))

    rng = np.random.Generator(np.random.PCG64(seed))
    worst = 0.0
    for _ in range(50):
        v = rng.standard_normal(4)
        w = rng.standard_normal(4)
        j = dualspace.j_matrix(linalg.REAL, 2)
        r = dualspace.split_form_matrix(linalg.REAL, 2)
        worst = max(worst, abs((j @ v) @ r @ (j @ w) + v @ r @ w))
    out.append(_result("g(J., J.) = -g(., .)", worst, 1e-12))

    worst = 0.0
    for s in np.linspace(-2.0, 2.0, 21):
        for t in np.linspace(-2.0, 2.0, 21):
            for eps in (1, -1):
                closed, route = dualspace.so2_orbit(s, t, eps)
                worst = max(worst, abs(closed - route))
    out.append(_result("SO(2) orbit closed form vs matrix route",
                       worst, 1e-9))

    rot_pi = dualspace._rot2(np.pi)
    rot_half = dualspace._rot2(np.pi / 2.0)
    rep_i = dualspace.u_plus_membership(np.eye(2))
    rep_pi = dualspace.u_plus_membership(rot_pi)
    rep_half = dualspace.u_plus_membership(rot_half)
    out.append(_flag("small-rotation classification",
                     rep_i.member and not rep_pi.member
                     and not rep_half.member and rep_half.boundary))
    return out


def run_all(seed=0):
    """The full verification suite; returns (results, elapsed_seconds)."""
    start = time.perf_counter()
    results = []
    results += algebra_suite(seed)
    results += groups_suite(seed + 1)
    results += screws_suite(seed + 2)
    results += controllability_suite()
    results += geodesics_suite(seed + 3)
    results += octonion_suite(seed + 4)
    results += dualspace_suite(seed + 5)
    return results, time.perf_counter() - start
