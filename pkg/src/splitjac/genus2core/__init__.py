"""Genus-2 curves: models, invariants, Jacobian arithmetic, point counts."""

from .counting import (
    COUNT_LIMIT,
    ResourceLimitError,
    count_points,
    jacobian_order,
    lpoly,
    lpoly_elliptic,
    lpoly_genus1,
    tate_isogenous,
)
from .curve import Genus2Curve, InvalidCurveError, field_from_tag
from .invariants import (
    IgusaClebsch,
    IgusaJ,
    ic_to_j,
    igusa_clebsch,
    igusa_j,
    j_invariant_cubic,
    weighted_equal,
    weighted_match,
)
from .jacobian import (
    InvalidDivisorError,
    MumfordDivisor,
    cantor_add,
    geometric_add,
    scalar_mul,
)

__all__ = [
    "COUNT_LIMIT",
    "Genus2Curve",
    "IgusaClebsch",
    "IgusaJ",
    "InvalidCurveError",
    "InvalidDivisorError",
    "MumfordDivisor",
    "ResourceLimitError",
    "cantor_add",
    "count_points",
    "field_from_tag",
    "geometric_add",
    "ic_to_j",
    "igusa_clebsch",
    "igusa_j",
    "j_invariant_cubic",
    "jacobian_order",
    "lpoly",
    "lpoly_elliptic",
    "lpoly_genus1",
    "scalar_mul",
    "tate_isogenous",
    "weighted_equal",
    "weighted_match",
]
