"""Unit tests for the seven-dimensional cross product, g2, and the
motion-group system built on them."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from screwsr import octonion as oc
from screwsr.exceptions import DomainError

E = np.eye(7)

# Every product of the multiplication table, as (i, j, result) triples
# with 1-based indices: e_i x e_j = e_k.
TABLE = [
    (1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (5, 6, 1), (6, 7, 2), (7, 1, 3),
    (2, 4, 1), (3, 5, 2), (4, 6, 3), (5, 7, 4), (6, 1, 5), (7, 2, 6), (1, 3, 7),
    (4, 1, 2), (5, 2, 3), (6, 3, 4), (7, 4, 5), (1, 5, 6), (2, 6, 7), (3, 7, 1),
]


class TestCross:
    def test_table(self):
        for i, j, k in TABLE:
            np.testing.assert_array_equal(oc.cross(E[i - 1], E[j - 1]), E[k - 1])

    def test_antisymmetry_on_basis(self):
        for i in range(7):
            for j in range(7):
                np.testing.assert_array_equal(
                    oc.cross(E[i], E[j]), -oc.cross(E[j], E[i])
                )

    def test_self_product_vanishes(self):
        rng = np.random.Generator(np.random.PCG64(0))
        u = rng.standard_normal(7)
        assert np.linalg.norm(oc.cross(u, u)) <= 1e-15 * np.dot(u, u)

    def test_cyclicity(self):
        # e_i x e_j = e_k implies e_j x e_k = e_i
        for i in range(7):
            for j in range(7):
                if i == j:
                    continue
                k = oc.cross(E[i], E[j])
                idx = int(np.argmax(np.abs(k)))
                sign = k[idx]
                np.testing.assert_array_equal(
                    oc.cross(E[j], sign * E[idx]), E[i]
                )

    def test_norm_identity(self):
        rng = np.random.Generator(np.random.PCG64(1))
        for _ in range(20):
            u, v = rng.standard_normal(7), rng.standard_normal(7)
            lhs = np.dot(oc.cross(u, v), oc.cross(u, v))
            rhs = np.dot(u, u) * np.dot(v, v) - np.dot(u, v) ** 2
            assert lhs == pytest.approx(rhs, rel=1e-12)

    def test_orthogonality(self):
        rng = np.random.Generator(np.random.PCG64(2))
        u, v = rng.standard_normal(7), rng.standard_normal(7)
        w = oc.cross(u, v)
        assert abs(np.dot(w, u)) <= 1e-12
        assert abs(np.dot(w, v)) <= 1e-12

    def test_corrupted_table_detected(self):
        # a mutated structure tensor must break cyclicity
        bad = oc.CROSS_TENSOR.copy()
        bad[0, 1, 3], bad[0, 1, 4] = 0.0, 1.0  # e1 x e2 -> e5 instead of e4

        def bad_cross(u, v):
            return np.einsum("i,j,ijk->k", u, v, bad)

        violations = 0
        for i in range(7):
            for j in range(7):
                if i == j:
                    continue
                k = bad_cross(E[i], E[j])
                idx = int(np.argmax(np.abs(k)))
                if np.linalg.norm(bad_cross(E[j], k[idx] * E[idx]) - E[i]) > 1e-12:
                    violations += 1
        assert violations > 0


class TestOperators:
    def test_L_of_zero(self):
        np.testing.assert_array_equal(oc.L_op(np.zeros(7)), np.zeros((7, 7)))

    def test_L_matches_cross(self):
        rng = np.random.Generator(np.random.PCG64(3))
        u, v = rng.standard_normal(7), rng.standard_normal(7)
        np.testing.assert_allclose(oc.L_op(u) @ v, oc.cross(u, v), atol=1e-14)
        assert np.linalg.norm(oc.L_op(u) @ u) <= 1e-14

    def test_L_antisymmetric_injective(self):
        rng = np.random.Generator(np.random.PCG64(4))
        u = rng.standard_normal(7)
        m = oc.L_op(u)
        assert np.linalg.norm(m + m.T) <= 1e-14
        assert np.linalg.norm(m) > 0.0

    def test_wedge(self):
        np.testing.assert_array_equal(oc.wedge(E[0], E[0]), np.zeros((7, 7)))
        np.testing.assert_array_equal(oc.wedge(E[0], E[1]) @ E[0], E[1])
        np.testing.assert_array_equal(oc.wedge(E[0], E[1]) @ E[2], np.zeros(7))

    def test_Z_on_orthonormal_pair(self):
        rng = np.random.Generator(np.random.PCG64(5))
        x = rng.standard_normal(7)
        x /= np.linalg.norm(x)
        y = rng.standard_normal(7)
        y -= np.dot(x, y) * x
        y /= np.linalg.norm(y)
        z = oc.Z_op(x, y)
        np.testing.assert_allclose(z @ x, 2 * y, atol=1e-12)
        assert np.linalg.norm(z @ oc.cross(x, y)) <= 1e-12

    def test_Z_basis_example(self):
        np.testing.assert_allclose(oc.Z_op(E[0], E[1]) @ E[0], 2 * E[1], atol=1e-14)

    def test_Z_is_derivation(self):
        rng = np.random.Generator(np.random.PCG64(6))
        z = oc.Z_op(rng.standard_normal(7), rng.standard_normal(7))
        assert oc.derivation_residual(z) <= 1e-12


class TestBracketLL:
    def test_self(self):
        report = oc.bracket_LL(E[2], E[2])
        assert report["identity_residual"] <= 1e-15
        assert np.linalg.norm(report["g2_component"]) <= 1e-15

    def test_basis_pair(self):
        report = oc.bracket_LL(E[0], E[1])
        assert report["identity_residual"] <= 1e-14
        np.testing.assert_allclose(
            report["l_component"], -oc.L_op(E[3]), atol=1e-14
        )

    @given(st.integers(min_value=0, max_value=100_000))
    @settings(max_examples=50, deadline=None)
    def test_random_pairs(self, seed):
        rng = np.random.Generator(np.random.PCG64(seed))
        u, v = rng.standard_normal(7), rng.standard_normal(7)
        report = oc.bracket_LL(u, v)
        scale = max(1.0, np.linalg.norm(u) * np.linalg.norm(v))
        assert report["identity_residual"] <= 1e-12 * scale
        assert report["regrouping_residual"] <= 1e-12 * scale


class TestG2:
    def test_dimension(self):
        assert len(oc.build_g2_basis()) == 14

    def test_every_element_is_a_derivation(self):
        for b in oc.build_g2_basis():
            assert oc.derivation_residual(b) <= 1e-12

    def test_bracket_with_L(self):
        # [Z, L_u] = L_{Z u} for derivations Z
        rng = np.random.Generator(np.random.PCG64(7))
        u = rng.standard_normal(7)
        for b in oc.build_g2_basis():
            lhs = b @ oc.L_op(u) - oc.L_op(u) @ b
            assert np.linalg.norm(lhs - oc.L_op(b @ u)) <= 1e-12

    def test_direct_sum_with_L(self):
        from screwsr import linalg

        vectors = [oc.L_op(E[s]) for s in range(7)] + list(oc.build_g2_basis())
        assert linalg.numeric_rank(vectors) == 21

    def test_split(self):
        y, g2 = oc.split_o7(oc.L_op(E[2]))
        np.testing.assert_allclose(y, E[2], atol=1e-12)
        assert np.linalg.norm(g2) <= 1e-12
        b0 = oc.build_g2_basis()[0]
        y, g2 = oc.split_o7(b0)
        assert np.linalg.norm(y) <= 1e-12
        np.testing.assert_allclose(g2, b0, atol=1e-12)

    def test_split_of_LL_bracket(self):
        w = oc.L_op(E[0]) @ oc.L_op(E[1]) - oc.L_op(E[1]) @ oc.L_op(E[0])
        y, g2 = oc.split_o7(w)
        np.testing.assert_allclose(y, -E[3], atol=1e-12)  # -e4 = -(e1 x e2)
        np.testing.assert_allclose(g2, oc.Z_op(E[0], E[1]), atol=1e-12)

    def test_split_rejects_symmetric(self):
        with pytest.raises(DomainError):
            oc.split_o7(np.eye(7))


class TestControllability:
    def test_full_rank_off_zero(self):
        for lam in (1.0, -0.5, 2.0):
            report = oc.octo_controllability(lam)
            assert report.dim_span == 28
            assert report.observed and report.consistent

    def test_rank_collapse_at_zero(self):
        report = oc.octo_controllability(0.0)
        assert report.dim_span == 7
        assert not report.observed
        assert report.consistent

    def test_eq13_count(self):
        assert len(oc.eq13_vectors(1.0)) == 28


class TestGeodesics:
    def test_identity_at_zero(self):
        x, y = oc.random_orthogonal_pair(0)
        g = oc.octo_geodesic(x, y, 1.0, 0.0)
        assert np.linalg.norm(g.translation) <= 1e-14
        assert np.linalg.norm(g.rotation - np.eye(7)) <= 1e-14

    def test_y_zero_single_screw(self):
        x, _ = oc.random_orthogonal_pair(1)
        t = 2.1
        g = oc.octo_geodesic(x, np.zeros(7), 0.5, t)
        single = oc.from_affine(
            oc.motion_exp(oc.MotionElement(t * x, t * 0.5 * oc.L_op(x)))
        )
        assert (g - single).norm() <= 1e-12

    def test_initial_velocity(self):
        x, y = oc.random_orthogonal_pair(2)
        for lam in (1.0, -0.5):
            v = oc.octo_log_derivative(x, y, lam, 0.0)
            want = oc.initial_velocity(x, y, lam)
            assert (v - want).norm() <= 1e-10

    def test_horizontality_along_curve(self):
        x, y = oc.random_orthogonal_pair(3)
        lam = -1.0
        for t in np.linspace(0.0, 5.0, 21):
            lld = oc.octo_log_derivative(x, y, lam, t)
            res = np.linalg.norm(lld.rotation - lam * oc.L_op(lld.translation))
            assert res <= 1e-9
            assert np.linalg.norm(lld.translation) == pytest.approx(1.0, abs=1e-9)

    def test_rejects_non_orthogonal(self):
        with pytest.raises(DomainError):
            oc.octo_geodesic(E[0], E[0] + E[1], 1.0, 1.0)

    def test_rejects_zero_pitch(self):
        with pytest.raises(DomainError):
            oc.octo_geodesic(E[0], E[1], 0.0, 1.0)

    def test_scaling_in_first_argument(self):
        # gamma_{c x, y}(t) = gamma_{x, y}(c t): the second argument enters
        # the rotation generator bilinearly, so only x may be scaled
        x, y = oc.random_orthogonal_pair(4)
        c = 2.0
        for t in np.linspace(0.0, 2.0, 9):
            a = oc.octo_geodesic(c * x, y, 1.0, t)
            b = oc.octo_geodesic(x, y, 1.0, c * t)
            assert (a - b).norm() <= 1e-9


class TestMomentum:
    def test_basis_pair_coefficients(self):
        report = oc.certify_octo_momentum(E[0], E[1], 1.0)
        assert report["c"] == pytest.approx(2.0 / 3.0)
        assert report["d"] == pytest.approx(-2.0 / 3.0)
        assert report["cometric_residual"] <= 1e-9
        assert report["ad_X_residual"] <= 1e-9
        assert report["ad_Z_residual"] <= 1e-9

    def test_y_zero_branch(self):
        report = oc.certify_octo_momentum(E[0], np.zeros(7), 1.0)
        assert report["c"] == 0.0 and report["d"] == 0.0
        assert report["ad_X_residual"] <= 1e-9

    def test_hamiltonian_value(self):
        x, y = oc.random_orthogonal_pair(5)
        report = oc.certify_octo_momentum(x, y, -0.5)
        assert report["hamiltonian"] == pytest.approx(0.5, abs=1e-9)

    def test_momentum_vanishes_on_g2(self):
        x, y = oc.random_orthogonal_pair(6)
        report = oc.certify_octo_momentum(x, y, 1.0)
        assert report["g2_vanishing_residual"] <= 1e-12

    def test_requires_unit_x(self):
        with pytest.raises(DomainError):
            oc.certify_octo_momentum(2.0 * E[0], E[1], 1.0)


class TestMotionElement:
    def test_bracket_matches_affine_commutator(self):
        rng = np.random.Generator(np.random.PCG64(8))

        def rand_el():
            m = rng.standard_normal((7, 7))
            return oc.MotionElement(rng.standard_normal(7), 0.5 * (m - m.T))

        a, b = rand_el(), rand_el()
        lhs = oc.affine(oc.motion_bracket(a, b))
        rhs = oc.affine(a) @ oc.affine(b) - oc.affine(b) @ oc.affine(a)
        assert np.linalg.norm(lhs - rhs) <= 1e-12
