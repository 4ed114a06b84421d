"""Exact arithmetic foundation: fields, polynomials, resultants."""

from .fields import (
    QQ,
    FieldError,
    FpElem,
    NonSquareError,
    PrimeField,
    QuadExtElem,
    QuadExtField,
    cube_roots,
    is_square,
    quad_ext,
    sqrt,
)
from .polys import (
    BiPoly,
    PolynomialError,
    UniPoly,
    discriminant,
    resultant,
    resultant_bivar_y,
)

__all__ = [
    "QQ",
    "FieldError",
    "FpElem",
    "NonSquareError",
    "PrimeField",
    "QuadExtElem",
    "QuadExtField",
    "cube_roots",
    "is_square",
    "quad_ext",
    "sqrt",
    "BiPoly",
    "PolynomialError",
    "UniPoly",
    "discriminant",
    "resultant",
    "resultant_bivar_y",
]
