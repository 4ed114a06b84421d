"""Modular polynomials: symmetry, Kronecker congruence, st reduction."""

from fractions import Fraction

import pytest

from splitjac.exactmath import BiPoly
from splitjac.modular import (
    SUPPORTED_LEVELS,
    UnsupportedLevelError,
    are_isogenous,
    compute_phi,
    j_series,
    phi,
    symmetric_reduce,
)


def test_supported_levels():
    assert set(SUPPORTED_LEVELS) == {2, 3, 5, 7}
    with pytest.raises(UnsupportedLevelError):
        phi(11)


@pytest.mark.parametrize("n", [2, 3, 5, 7])
def test_symmetry_and_kronecker(n):
    m = phi(n)
    assert m.xy_form.is_symmetric()
    assert m.kronecker_holds()


@pytest.mark.parametrize("n", [2, 3])
def test_st_form_is_the_symmetric_reduction(n):
    m = phi(n)
    assert m.st_form == symmetric_reduce(m.xy_form)


def test_st_substitution_identity():
    """st_form(x+y, xy) == xy_form(x, y) as exact polynomials."""
    for n in (2, 3):
        m = phi(n)
        x_plus_y = BiPoly({(1, 0): 1, (0, 1): 1})
        xy = BiPoly({(1, 1): 1})
        acc = BiPoly({})
        for (a, b), c in m.st_form.terms.items():
            acc = acc + (x_plus_y ** a) * (xy ** b) * c
        assert acc == m.xy_form


def test_known_isogenous_pair():
    # 2-isogeny: j = 1728 (CM by i) is 2-isogenous to j = 66^3
    assert are_isogenous(Fraction(1728), Fraction(287496), 2)
    assert not are_isogenous(Fraction(1728), Fraction(1729), 2)


def test_phi2_from_q_expansions():
    """Recompute phi_2 from scratch via q-expansions; must equal the
    embedded coefficients."""
    assert compute_phi(2) == phi(2).xy_form


def test_j_series_leading_terms():
    # q^-1 + 744 + 196884 q + 21493760 q^2 + ...
    assert j_series(4)[:4] == [1, 744, 196884, 21493760]
