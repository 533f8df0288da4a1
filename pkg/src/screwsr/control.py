"""Bracket-generating rank tests for the screw distribution.

The distribution is spanned by the lifts (b_i, lam b_i) of an algebra
basis; one layer of brackets produces (2 lam [x,y], (lam^2 + k)[x,y]), so
the span of lifts plus pairwise brackets has full rank 2 dim k except on
the locus lam^2 = k (reachable only for k in {0, 1}), where it collapses
to dim k.  The computed rank is always the source of truth; printed
predicates travel along for audit.
"""

from dataclasses import dataclass, field

import numpy as np

from . import linalg, screws
from .exceptions import DomainError
from .groups import CompactGroupId
from .screws import ScrewSystem, kk_bracket

# Straddles every exceptional locus lam^2 = k for k in {1, -1, 0}.
LAMBDA_GRID = (-2.0, -1.0, -0.75, -0.5, 0.0, 0.5, 0.75, 1.0, 2.0)

_EXACT_TOL = 1e-12


@dataclass
class ControllabilityReport:
    """Outcome of a bracket-generating rank computation."""

    system: dict
    dim_g: int
    dim_span: int
    predicted: bool
    observed: bool
    expected_rank: int
    extra: dict = field(default_factory=dict)

    @property
    def controllable(self):
        return self.observed

    @property
    def consistent(self):
        """Computed rank matches the rank the theory predicts."""
        return self.dim_span == self.expected_rank

    def to_dict(self):
        out = {
            "system": self.system,
            "dim_g": self.dim_g,
            "dim_span": self.dim_span,
            "predicted": self.predicted,
            "observed": self.observed,
            "expected_rank": self.expected_rank,
            "consistent": self.consistent,
        }
        out.update(self.extra)
        return out


def _stack(a):
    """Flatten a pair element into a single row matrix so that
    re_trace_inner on the rows equals the product inner product."""
    return np.concatenate([a.x.ravel(), a.y.ravel()]).reshape(1, -1)


def exceptional(k, lam):
    """True on the non-controllable locus lam^2 = k of the theorem."""
    return abs(lam * lam - k) < _EXACT_TOL


def bracket_generating_rank(system: ScrewSystem) -> ControllabilityReport:
    """Rank of the span of the distribution plus its first brackets."""
    lifts = [system.horizontal_lift(b) for b in system.basis]
    vectors = list(lifts)
    for i in range(len(lifts)):
        for j in range(i + 1, len(lifts)):
            vectors.append(kk_bracket(lifts[i], lifts[j]))
    rank = linalg.numeric_rank([_stack(v) for v in vectors])
    predicted = not exceptional(system.k, system.lam)
    expected = system.dim_g if predicted else system.dim_k
    return ControllabilityReport(
        system=system.descriptor(),
        dim_g=system.dim_g,
        dim_span=rank,
        predicted=predicted,
        observed=(rank == system.dim_g),
        expected_rank=expected,
        extra={"generators": len(vectors)},
    )


def sweep(group: CompactGroupId, ks=(1, -1, 0), lambdas=LAMBDA_GRID):
    """Reports for every (k, lam) combination of the default grid."""
    return [
        bracket_generating_rank(ScrewSystem(group, k, lam))
        for k in ks
        for lam in lambdas
    ]


def space_form_report(kappa: int, lam: float) -> ControllabilityReport:
    """Controllability of screw motions of the curvature-kappa space form.

    The isometry algebras of the three space forms are o(4), o(1,3) and
    R^3 x| o(3), which are the k = kappa models over SO(3).  The report
    carries two printed predicates that disagree at (kappa=1, lam=-1):
    "kappa^2 != lam" and the general-theorem condition "lam^2 != k".  The
    computed rank arbitrates.
    """
    if kappa not in (1, -1, 0):
        raise DomainError("kappa must be a curvature sign in {1, -1, 0}")
    system = ScrewSystem(CompactGroupId("SO", 3), kappa, lam)
    report = bracket_generating_rank(system)
    square_predicate = abs(kappa * kappa - lam) > _EXACT_TOL
    theorem_predicate = report.predicted
    report.extra.update(
        {
            "kappa": kappa,
            "predicate_kappa_sq_neq_lambda": square_predicate,
            "predicate_lambda_sq_neq_k": theorem_predicate,
            "predicates_disagree": square_predicate != theorem_predicate,
        }
    )
    return report
