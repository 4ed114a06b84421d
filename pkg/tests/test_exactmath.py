"""Field and polynomial arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splitjac.exactmath import (
    QQ,
    BiPoly,
    NonSquareError,
    PrimeField,
    UniPoly,
    cube_roots,
    discriminant,
    is_square,
    quad_ext,
    resultant,
    resultant_bivar_y,
    sqrt,
)

F7 = PrimeField(7)
F101 = PrimeField(101)


def test_resultant_examples():
    x = UniPoly.x()
    assert resultant(x - 1, x - 2) == -1
    assert resultant(x * x + 1, x - 3) == 10
    f = x ** 3 - 2 * x + 5
    assert resultant(f, f) == 0


def test_discriminant_examples():
    x = UniPoly.x()
    assert discriminant(x * x - 1) == 4
    assert discriminant(x * x) == 0


def test_square_roots_all_fields():
    assert is_square(Fraction(9, 4)) and sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert not is_square(Fraction(-1))
    with pytest.raises(NonSquareError):
        sqrt(Fraction(2))
    for fld in (F7, F101, quad_ext(7), quad_ext(101)):
        if hasattr(fld, "d"):
            a = fld(3, 4)
        else:
            a = fld.of(5)
        assert sqrt(a * a) ** 2 == a * a


def test_cube_roots():
    assert cube_roots(Fraction(8, 27)) == [Fraction(2, 3)]
    assert cube_roots(Fraction(2)) == []
    assert len(cube_roots(F101.of(1))) == 1  # 3 does not divide 100
    roots7 = cube_roots(F7.of(6))
    assert all(r ** 3 == F7.of(6) for r in roots7)


@given(st.integers(0, 100), st.integers(1, 100))
def test_fp_field_axioms(a, b):
    x, y = F101.of(a), F101.of(b)
    assert (x + y) - y == x
    assert (x * y) / y == x
    assert x * (y + F101.one()) == x * y + x


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=5),
       st.lists(st.integers(-5, 5), min_size=1, max_size=5))
@settings(max_examples=50)
def test_unipoly_xgcd_bezout(cs, ds):
    f = UniPoly([Fraction(c) for c in cs], QQ)
    g = UniPoly([Fraction(d) for d in ds], QQ)
    if f.is_zero() and g.is_zero():
        return
    gg, s, t = f.xgcd(g)
    assert s * f + t * g == gg
    if not gg.is_zero():
        assert gg[gg.degree] == 1  # monic
        assert (f % gg).is_zero() and (g % gg).is_zero()


def test_bipoly_basics():
    b = BiPoly({(1, 0): 1, (0, 1): 1})
    sq = (b * b).terms
    assert sq == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    f = BiPoly({(0, 1): 1, (1, 0): -1})
    g = BiPoly({(0, 1): 1, (1, 0): -2})
    assert resultant_bivar_y(f, g).terms == {(1, 0): -1}


def test_bipoly_divides_exact_div():
    a = BiPoly({(1, 0): 1, (0, 1): 2})
    b = BiPoly({(2, 0): 3, (0, 0): -1})
    prod = a * b
    assert a.divides(prod) and b.divides(prod)
    assert prod.exact_div(a) == b
    assert not BiPoly({(1, 1): 1}).divides(prod)


def test_quad_ext_requires_odd_prime():
    k = quad_ext(13)
    a = k(2, 5)
    assert a * a.inverse() == k(1, 0)
    assert a.conjugate().conjugate() == a
    assert a.norm() == (a * a.conjugate()).re
