"""Screw-motion control systems on compact classical groups.

Controllability by bracket generation, closed-form sub-Riemannian
geodesics as products of two exponentials, the octonionic system on
R^7 x| SO(7), and the dual-space picture of non-compact symmetric
spaces as sets of small rotations.
"""

from . import (
    control,
    dualspace,
    geodesics,
    groups,
    linalg,
    octonion,
    screws,
    verify,
)
from ._kernels import IMPLEMENTATION as kernel_implementation
from .control import (
    LAMBDA_GRID,
    ControllabilityReport,
    bracket_generating_rank,
    space_form_report,
    sweep,
)
from .exceptions import (
    CapacityError,
    DimensionError,
    DomainError,
    FieldMismatchError,
    NumericError,
    SingularityError,
)
from .geodesics import (
    GeodesicSpec,
    certify,
    cross_check_space_form,
    geodesic_point,
    left_log_derivative,
    space_form_geodesic,
)
from .groups import CompactGroupId, algebra_basis, random_algebra_element
from .linalg import QuaternionMatrix
from .screws import KkElement, ScrewSystem, kk_bracket, kk_inner

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "CompactGroupId",
    "ControllabilityReport",
    "DimensionError",
    "DomainError",
    "FieldMismatchError",
    "GeodesicSpec",
    "KkElement",
    "LAMBDA_GRID",
    "NumericError",
    "QuaternionMatrix",
    "ScrewSystem",
    "SingularityError",
    "algebra_basis",
    "bracket_generating_rank",
    "certify",
    "cross_check_space_form",
    "geodesic_point",
    "kernel_implementation",
    "kk_bracket",
    "kk_inner",
    "left_log_derivative",
    "random_algebra_element",
    "space_form_geodesic",
    "space_form_report",
    "sweep",
    "__version__",
]
