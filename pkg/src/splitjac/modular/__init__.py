"""Modular polynomials, symmetric reduction, isogeny loci."""

from .eliminate import (
    DegreeBudgetError,
    cached_locus,
    eliminate_locus,
    eliminate_locus_general,
    load_locus_file,
    save_locus_file,
)
from .phi import (
    SUPPORTED_LEVELS,
    IntegrityError,
    ModularPolynomial,
    UnsupportedLevelError,
    are_isogenous,
    load_phi_file,
    phi,
    save_phi_file,
)
from .qexp import compute_phi, j_series, symmetric_reduce

__all__ = [
    "DegreeBudgetError",
    "IntegrityError",
    "ModularPolynomial",
    "SUPPORTED_LEVELS",
    "UnsupportedLevelError",
    "are_isogenous",
    "cached_locus",
    "compute_phi",
    "eliminate_locus",
    "j_series",
    "load_locus_file",
    "load_phi_file",
    "phi",
    "save_locus_file",
    "save_phi_file",
    "symmetric_reduce",
]
