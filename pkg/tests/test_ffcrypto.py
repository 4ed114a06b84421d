"""Supersingular Montgomery curves and genus-2 lifts."""

import pytest

from splitjac import ffcrypto
from splitjac.exactmath import QuadExtField


def test_anchor_lift_p7():
    """alpha = 1 + i over F_49: the three published quadratics mod 7."""
    f1, f2, f3, X = ffcrypto.lift_to_genus2(
        ffcrypto.MontgomeryCurve.from_parts(7, 1, 1))
    assert [int(f1[i]) for i in range(3)] == [6, 2, 1]
    assert [int(f2[i]) for i in range(3)] == [6, 5, 1]
    assert [int(f3[i]) for i in range(3)] == [6, 4, 1]
    assert X.degree == 6


def test_degenerate_reasons():
    fld = QuadExtField(7)
    with pytest.raises(ValueError):
        ffcrypto.MontgomeryCurve(fld(3, 0))  # alpha in F_p
    with pytest.raises(ffcrypto.LiftDegenerateError) as exc:
        ffcrypto.lift_to_genus2(ffcrypto.MontgomeryCurve(fld(0, 2)))
    assert "alpha_0 = 0" in str(exc.value)


def test_restriction_isogeny_anchor():
    holds, lx, le = ffcrypto.verify_restriction_isogeny(
        ffcrypto.MontgomeryCurve.from_parts(7, 1, 1))
    assert holds
    assert lx == [le[0], 0, le[1], 0, le[2]]


@pytest.mark.parametrize("p", [7, 11])
def test_full_scan_lemma_and_supersingular(p):
    rows = ffcrypto.ss_scan(p)
    assert len(rows) == p * (p - 1)
    valid = [r for r in rows if r["valid"]]
    assert valid, "no nondegenerate alpha"
    for r in valid:
        assert r["lemma_holds"] is True
        if r["supersingular"]:
            # L_E = 1 + c1 T + q T^2; #E = L(1) = (p+1)^2 means c1 = 2p
            assert r["LE_c1"] == 2 * p


def test_scan_csv_deterministic():
    rows = ffcrypto.ss_scan(7, limit=10)
    csv1 = ffcrypto.scan_to_csv(rows)
    csv2 = ffcrypto.scan_to_csv(ffcrypto.ss_scan(7, limit=10))
    assert csv1 == csv2
    assert csv1.splitlines()[0] == ",".join(ffcrypto.SCAN_COLUMNS)
    assert len(csv1.splitlines()) == 11


def test_parallel_scan_matches_serial():
    serial = ffcrypto.ss_scan(7)
    parallel = ffcrypto.ss_scan(7, workers=3)
    assert serial == parallel


def test_weil_restriction_forms_evaluate_in_base_field():
    curve = ffcrypto.MontgomeryCurve.from_parts(7, 1, 1)
    fld = QuadExtField(7)
    w0, w1 = ffcrypto.weil_restriction_forms(curve, fld(1, 1))
    base = curve.field.base
    args = [base.of(k) for k in (2, 3, 4, 5)]
    for w in (w0, w1):
        val = w(*args)
        assert val.field.p == 7  # lands in F_p, not F_{p^2}
