"""Unit tests for the bracket-generating rank reports."""

import json

import numpy as np
import pytest

from screwsr import control
from screwsr.control import (
    LAMBDA_GRID,
    bracket_generating_rank,
    exceptional,
    space_form_report,
    sweep,
)
from screwsr.exceptions import DomainError
from screwsr.groups import CompactGroupId
from screwsr.screws import ScrewSystem

SU2 = CompactGroupId("SU", 2)
SO3 = CompactGroupId("SO", 3)


class TestExceptionalLocus:
    def test_locus_points(self):
        assert exceptional(1, 1.0)
        assert exceptional(1, -1.0)
        assert exceptional(0, 0.0)
        assert not exceptional(-1, 1.0)
        assert not exceptional(1, 0.5)
        assert not exceptional(0, 0.5)

    def test_k_minus_one_never_exceptional(self):
        # lam^2 = -1 has no real solution
        for lam in LAMBDA_GRID:
            assert not exceptional(-1, lam)


class TestRank:
    def test_su2_compact_pair_at_unit_pitch(self):
        report = bracket_generating_rank(ScrewSystem(SU2, 1, 1.0))
        assert report.dim_span == 3
        assert not report.observed
        assert report.consistent

    def test_su2_motion_group_at_zero_pitch(self):
        report = bracket_generating_rank(ScrewSystem(SU2, 0, 0.0))
        assert report.dim_span == 3
        assert not report.observed
        assert report.consistent

    def test_so3_noncompact_pair_full_grid(self):
        for lam in LAMBDA_GRID:
            report = bracket_generating_rank(ScrewSystem(SO3, -1, lam))
            assert report.dim_span == 6
            assert report.observed
            assert report.consistent

    def test_rank_invariant_under_rescaled_pitch_sign(self):
        a = bracket_generating_rank(ScrewSystem(SU2, -1, 0.5))
        b = bracket_generating_rank(ScrewSystem(SU2, -1, -0.5))
        assert a.dim_span == b.dim_span

    def test_sweep_shape(self):
        reports = sweep(SU2)
        assert len(reports) == 3 * len(LAMBDA_GRID)
        assert all(r.consistent for r in reports)

    def test_report_serializes(self):
        report = bracket_generating_rank(ScrewSystem(SU2, 1, 0.5))
        blob = json.dumps(report.to_dict(), sort_keys=True)
        assert '"dim_span": 6' in blob


class TestSpaceForm:
    def test_flat_zero_pitch_not_controllable(self):
        report = space_form_report(0, 0.0)
        assert not report.observed
        assert report.consistent

    def test_sphere_unit_pitch_not_controllable(self):
        report = space_form_report(1, 1.0)
        assert not report.observed
        assert not report.extra["predicates_disagree"]

    def test_predicates_disagree_at_sphere_negative_unit_pitch(self):
        # both printed predicates are carried; the computed rank decides
        report = space_form_report(1, -1.0)
        assert report.extra["predicates_disagree"]
        assert report.dim_span == report.expected_rank

    def test_hyperbolic_generic_controllable(self):
        report = space_form_report(-1, 0.5)
        assert report.observed
        assert report.consistent

    def test_bad_kappa(self):
        with pytest.raises(DomainError):
            space_form_report(2, 0.5)
