"""Curves, invariants, weighted matching."""

from fractions import Fraction

import pytest

from splitjac.exactmath import QQ, PrimeField
from splitjac.genus2core import (
    Genus2Curve,
    InvalidCurveError,
    ic_to_j,
    igusa_clebsch,
    igusa_j,
    j_invariant_cubic,
    weighted_equal,
    weighted_match,
)
from splitjac.genus2core.invariants import IgusaClebsch, j_to_ic

F = Fraction


def test_curve_validation():
    with pytest.raises(InvalidCurveError):
        Genus2Curve([0, 0, 0, 0, 1], QQ)  # degree 4
    with pytest.raises(InvalidCurveError):
        Genus2Curve([0, 0, 1, 2, 1], QQ)  # x^2 (x+1)^2: repeated roots
    c = Genus2Curve([3, 1, 4, 1, 5, 9, 2], QQ)
    assert c.degree == 6
    assert Genus2Curve.from_json(c.to_json()) == c


def test_invariants_weights_under_scaling():
    """I_k scales with weight k under f -> lambda * f (quadratic twist)."""
    cs = [F(3), F(1), F(4), F(1), F(5), F(9), F(2)]
    lam = F(7)
    ic1 = igusa_clebsch(Genus2Curve(cs, QQ))
    ic2 = igusa_clebsch(Genus2Curve([lam * c for c in cs], QQ))
    for a, b, w in zip(ic1.astuple(), ic2.astuple(), IgusaClebsch.weights):
        assert b == lam ** w * a


def test_ic_j_roundtrip():
    ic = igusa_clebsch(Genus2Curve([3, 1, 4, 1, 5, 9, 2], QQ))
    back = j_to_ic(ic_to_j(ic))
    assert back.astuple() == ic.astuple()


def test_weighted_equal_over_fp():
    fld = PrimeField(101)
    cs = [fld.of(c) for c in [3, 1, 4, 1, 5, 9, 2]]
    j = igusa_j(Genus2Curve(cs, fld))
    j_scaled = igusa_j(Genus2Curve([fld.of(4) * c for c in cs], fld))
    assert weighted_equal(j, j_scaled)
    other = igusa_j(Genus2Curve([fld.of(c) for c in [3, 1, 4, 1, 5, 9, 3]],
                                fld))
    assert not weighted_equal(j, other)


def test_weighted_match_zero_patterns():
    assert weighted_match((0, 2), (0, 8), (1, 3))
    assert not weighted_match((0, 2), (1, 8), (1, 3))
    assert weighted_match((2, 4), (4, 16), (1, 2))
    assert not weighted_match((2, 4), (4, 17), (1, 2))


def test_j_invariant_cubic_anchors():
    assert j_invariant_cubic(F(1), F(0), F(0), F(1)) == 0
    assert j_invariant_cubic(F(1), F(0), F(1), F(0)) == 1728
    # twist invariance: scaling the whole cubic keeps j
    assert (j_invariant_cubic(F(8) * 5, F(0), F(2) * 5, F(7) * 5)
            == j_invariant_cubic(F(8), F(0), F(2), F(7)))
    with pytest.raises(ValueError):
        j_invariant_cubic(F(0), F(1), F(1), F(1))
