"""Unit tests for the closed-form geodesics and the space-form instance."""

import numpy as np
import pytest

from screwsr import geodesics, groups, linalg
from screwsr.exceptions import DomainError
from screwsr.geodesics import (
    GeodesicSpec,
    certify,
    cross_check_space_form,
    geodesic_point,
    hat,
    left_log_derivative,
    sample,
    space_form_geodesic,
    space_form_log_derivative,
    verify_geodesic_criterion,
)
from screwsr.groups import CompactGroupId
from screwsr.screws import ScrewSystem

SO3 = CompactGroupId("SO", 3)
SU2 = CompactGroupId("SU", 2)


def _spec(gid, k, lam, seed):
    sys_ = ScrewSystem(gid, k, lam)
    x = groups.random_algebra_element(gid, seed)
    y = groups.random_algebra_element(gid, seed + 100)
    return GeodesicSpec(sys_, linalg.embed_complex(x), linalg.embed_complex(y))


class TestConstruction:
    def test_rejects_degenerate_pitch(self):
        with pytest.raises(DomainError):
            _spec(SU2, 1, 1.0, 0)

    def test_start_at_identity(self):
        spec = _spec(SO3, 0, 1.0, 1)
        point = geodesic_point(spec, 0.0)
        assert np.linalg.norm(point - np.eye(point.shape[0])) <= 1e-14

    def test_initial_derivative_is_lift(self):
        spec = _spec(SU2, -1, 0.75, 2)
        lld = left_log_derivative(spec, 0.0)
        assert np.linalg.norm(lld.x - spec.X) <= 1e-13
        assert np.linalg.norm(lld.y - 0.75 * spec.X) <= 1e-13

    def test_vertical_zero_gives_constant_derivative(self):
        sys_ = ScrewSystem(SO3, 1, 0.5)
        x = linalg.embed_complex(groups.random_algebra_element(SO3, 3))
        spec = GeodesicSpec(sys_, x, np.zeros_like(x))
        for t in (0.0, 1.3, 4.9):
            lld = left_log_derivative(spec, t)
            assert np.linalg.norm(lld.x - x) <= 1e-12


class TestCertification:
    @pytest.mark.parametrize("gid", [SO3, SU2, CompactGroupId("Sp", 1)], ids=str)
    @pytest.mark.parametrize("k", (1, -1, 0))
    def test_horizontality_and_speed(self, gid, k):
        spec = _spec(gid, k, 0.5, 4)
        report = certify(spec, t_max=5.0, count=101)
        assert report["horizontality_residual"] <= 1e-9
        assert report["speed_deviation"] <= 1e-9
        assert report["membership_residual"] <= 1e-9

    def test_commuting_pair_degenerates(self):
        sys_ = ScrewSystem(SU2, -1, 0.5)
        x = linalg.embed_complex(groups.random_algebra_element(SU2, 5))
        spec = GeodesicSpec(sys_, x, 2.0 * x)  # [X, 2X] = 0
        report = certify(spec, t_max=5.0, count=51)
        assert report["commutator_norm"] <= 1e-12
        assert report["single_exponential_gap"] <= 1e-10

    def test_noncommuting_pair_does_not_degenerate(self):
        spec = _spec(SU2, -1, 0.5, 6)
        report = certify(spec, t_max=5.0, count=51)
        assert report["commutator_norm"] > 1e-6
        assert report["single_exponential_gap"] > 1e-6

    def test_reparametrization(self):
        # gamma_{cX, cY}(t) = gamma_{X, Y}(ct): both generators scale linearly
        sys_ = ScrewSystem(SO3, 0, 1.0)
        x = linalg.embed_complex(groups.random_algebra_element(SO3, 7))
        y = linalg.embed_complex(groups.random_algebra_element(SO3, 8))
        spec = GeodesicSpec(sys_, x, y)
        scaled = GeodesicSpec(sys_, 2.5 * x, 2.5 * y)
        for t in np.linspace(0.0, 2.0, 9):
            gap = np.linalg.norm(
                geodesic_point(scaled, t) - geodesic_point(spec, 2.5 * t)
            )
            assert gap <= 1e-9

    def test_sampler_matches_direct_evaluation(self):
        spec = _spec(SO3, 1, -0.75, 9)
        curve = sample(spec, t_max=3.0, count=31)
        for t, point in zip(curve.times, curve.points):
            assert np.linalg.norm(point - geodesic_point(spec, t)) <= 1e-11

    @pytest.mark.parametrize("k,lam", [(0, 1.0), (1, 0.5), (-1, 2.0)])
    def test_normal_geodesic_hypotheses(self, k, lam):
        spec = _spec(SU2, k, lam, 10)
        report = verify_geodesic_criterion(spec)
        assert report["orthogonality_residual"] <= 1e-10
        assert report["h_positive_definite"]
        assert report["u_in_distribution_residual"] <= 1e-12


class TestSpaceForm:
    def test_zero_data_is_identity(self):
        zero = np.zeros(3)
        for t in (0.0, 1.0, 4.0):
            g = space_form_geodesic(1, 0.5, zero, zero, t)
            assert np.linalg.norm(g - np.eye(4)) <= 1e-14

    def test_flat_unit_pitch_screw(self):
        # flat space, x = e1, y = 0: translate along e1 while rotating
        # about e1 through angle t (pitch 1)
        x = np.array([1.0, 0.0, 0.0])
        y = np.zeros(3)
        t = 1.7
        g = space_form_geodesic(0, 1.0, x, y, t)
        assert g[1, 0] == pytest.approx(t, abs=1e-12)  # translation distance
        c, s = np.cos(t), np.sin(t)
        rot = np.array([[1, 0, 0], [0, c, -s], [0, s, c]], dtype=float)
        assert np.linalg.norm(g[1:, 1:] - rot) <= 1e-12

    def test_rotation_block_orthogonal(self):
        rng = np.random.Generator(np.random.PCG64(11))
        x, y = rng.standard_normal(3), rng.standard_normal(3)
        g = space_form_geodesic(1, 0.5, x, y, 2.3)
        block = g[1:, 1:]
        # kappa = 1: the whole 4x4 matrix is orthogonal, not the 3x3 block
        assert np.linalg.norm(g.T @ g - np.eye(4)) <= 1e-9

    def test_rejects_square_pitch_locus(self):
        with pytest.raises(DomainError):
            space_form_geodesic(1, 1.0, np.ones(3), np.zeros(3), 1.0)

    @pytest.mark.parametrize("kappa,lam", [(0, 1.0), (1, 0.5), (-1, -0.75), (-1, 2.0)])
    def test_cross_model_agreement(self, kappa, lam):
        rng = np.random.Generator(np.random.PCG64(12))
        x, y = rng.standard_normal(3), rng.standard_normal(3)
        report = cross_check_space_form(kappa, lam, x, y, t_max=5.0)
        assert report["derivative_gap"] <= 1e-8
        assert report["start_residual_4x4"] <= 1e-14

    def test_hat_map(self):
        u = np.array([1.0, 2.0, 3.0])
        v = np.array([-0.5, 0.25, 2.0])
        np.testing.assert_allclose(hat(u) @ v, np.cross(u, v))

    def test_log_derivative_at_zero(self):
        x = np.array([0.3, -0.2, 1.1])
        y = np.array([1.0, 0.0, -1.0])
        lld = space_form_log_derivative(1, 0.5, x, y, 0.0)
        assert np.linalg.norm(lld[1:, 0] - x) <= 1e-14
        assert np.linalg.norm(lld[1:, 1:] - hat(0.5 * x)) <= 1e-14
