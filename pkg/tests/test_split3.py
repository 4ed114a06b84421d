"""The (3,3)-split family: covers, invariants, (chi, psi) surface."""

import random
from fractions import Fraction as F

import pytest

from splitjac import split3 as s3
from splitjac.exactmath import QQ, PrimeField, UniPoly, is_square
from splitjac.genus2core import Genus2Curve, igusa_j, j_invariant_cubic
from splitjac.genus2core.invariants import weighted_match

ANCHOR = (F(-3375, 2), F(405000, 13))


def _uv_samples(rng, n, span=9):
    out = []
    while len(out) < n:
        u, v = F(rng.randint(-span, span)), F(rng.randint(-span, span))
        try:
            chi, psi = s3.chi_psi(u, v)
        except Exception:
            continue
        out.append((u, v, chi, psi))
    return out


def test_chi_psi_anchor():
    assert s3.chi_psi(F(1), F(1)) == ANCHOR
    assert s3.chi_psi(F(1), F(11)) == (F(0), F(0))  # w = 0
    with pytest.raises(s3.DegeneratePairError):
        s3.chi_psi(F(1), F(0))


def test_pair_invariants_match_closed_forms():
    rng = random.Random(5)
    n = 0
    for u, v, chi, psi in _uv_samples(rng, 60):
        Fc, Gc = s3.cubic_factors(u, v)
        try:
            r1, r2, _ = s3.cubic_pair_invariants(Fc, Gc)
        except Exception:
            continue
        assert (r1, r2) == (chi, psi)
        n += 1
    assert n >= 40


def test_pair_invariants_are_invariant():
    def shift(p, c):
        return p.compose(UniPoly([c, F(1)], QQ))

    def scale(p, lam):
        return UniPoly([p[i] * lam ** i for i in range(p.degree + 1)], QQ)

    Fc, Gc = s3.cubic_factors(F(2), F(5))
    base = s3.cubic_pair_invariants(Fc, Gc)
    shifted = s3.cubic_pair_invariants(shift(Fc, F(3)), shift(Gc, F(3)))
    scaled = s3.cubic_pair_invariants(scale(Fc, F(5)), scale(Gc, F(5)))
    assert base == shifted == scaled
    # identical cubics: the antisymmetric invariant vanishes
    cube = UniPoly([F(-1), F(0), F(0), F(1)], QQ)
    assert s3.cubic_pair_invariants(cube, cube)[0] == 0


def test_elliptic_model_anchors():
    e1, e2 = s3.elliptic_components3(F(1), F(1))
    assert e1 == (F(-16), F(-8), F(-11), F(4))
    assert s3.printed_elliptic_components3(F(1), F(1))[0] == \
        (F(16), F(8), F(11), F(-4))
    assert s3.printed_elliptic_components3(F(1), F(1))[1] == e2


def test_cover_identities():
    rng = random.Random(5)
    n = 0
    while n < 25:
        u, v = F(rng.randint(-6, 6)), F(rng.randint(-6, 6))
        try:
            ok1 = s3.verify_cover(u, v, 1)
            ok2 = s3.verify_cover(u, v, 2)
        except Exception:
            continue
        assert ok1 and ok2, (u, v)
        n += 1


def test_cover_identities_over_fp():
    fld = PrimeField(101)
    n = 0
    for a in range(2, 40):
        try:
            ok = (s3.verify_cover(fld.of(a), fld.of(a + 5), 1, fld)
                  and s3.verify_cover(fld.of(a), fld.of(a + 5), 2, fld))
        except Exception:
            continue
        assert ok
        n += 1
    assert n > 20


def test_j_anchor_and_oracle():
    assert s3.j_invariants3(F(1), F(1)) == (F(780448, 2197), F(128))
    rng = random.Random(11)
    n = 0
    for u, v, _, _ in _uv_samples(rng, 40):
        try:
            ja, jb = s3.j_invariants3(u, v)
            m1, m2 = s3.elliptic_components3(u, v)
        except Exception:
            continue
        assert j_invariant_cubic(*m1) == ja
        assert j_invariant_cubic(*m2) == jb
        n += 1
    assert n >= 25


def test_st_surface_matches_j_oracle():
    chi, psi = ANCHOR
    j1, j2 = s3.j_invariants3(F(1), F(1))
    s, t = s3.st_surface(chi, psi)
    assert (s, t) == (F(1061664, 2197), F(99897344, 2197))
    assert s == j1 + j2 and t == j1 * j2
    rng = random.Random(13)
    n = 0
    for u, v, c, p in _uv_samples(rng, 50, span=12):
        try:
            ja, jb = s3.j_invariants3(u, v)
            sv, tv = s3.st_surface(c, p)
        except Exception:
            continue
        assert sv == ja + jb and tv == ja * jb
        n += 1
    assert n >= 30


def test_printed_st_is_erratum():
    chi, psi = ANCHOR
    s, t = s3.st_surface(chi, psi)
    ps, pt = s3.printed_st(chi, psi)
    assert ps != s and pt != t


def test_s3_square_equivalence():
    rng = random.Random(17)
    n = 0
    for _, _, c, p in _uv_samples(rng, 30, span=12):
        try:
            sv, tv = s3.st_surface(c, p)
        except Exception:
            continue
        assert is_square(sv * sv - 4 * tv) == is_square(s3.s3_surface(c, p))
        n += 1
    assert n >= 20


def test_igusa_surface_matches_sextic():
    rng = random.Random(19)
    n = 0
    for u, v, c, p in _uv_samples(rng, 15):
        if not c or not p:
            continue
        sx = s3.sextic(u, v)
        oracle = igusa_j(Genus2Curve([sx[i] for i in range(7)], QQ))
        try:
            cand = s3.igusa_chipsi_surface(c, p)
        except Exception:
            continue
        assert weighted_match(cand.astuple(), oracle.astuple(), (2, 4, 6, 10))
        n += 1
    assert n >= 8
    # the displayed block does not match (erratum; kept for the report)
    chi, psi = ANCHOR
    sx = s3.sextic(F(1), F(1))
    oracle = igusa_j(Genus2Curve([sx[i] for i in range(7)], QQ))
    printed = s3.igusa_from_chipsi(chi, psi)
    assert printed.j10 == -(2 ** 30) * chi ** 3 * psi ** 9
    assert s3.igusa_from_chipsi(F(1), F(1)).j10 == -(2 ** 30)
    assert not weighted_match(printed.astuple(), oracle.astuple(),
                              (2, 4, 6, 10))


def test_locus3_eval_soundness_spotcheck():
    fld = PrimeField(101)
    hits = misses = 0
    for a in range(1, 101):
        u, v = fld.of(a), fld.of(2 * a % 101)
        try:
            c, p = s3.chi_psi(u, v)
            j1, j2 = s3.j_invariants3(u, v)
        except Exception:
            continue
        if not c or not p:
            continue
        from splitjac.modular import are_isogenous
        for n_level in (2, 3):
            vals = s3.isogeny_locus3_eval(n_level, c, p)
            iso = are_isogenous(j1, j2, n_level)
            if not vals[-1]:
                assert iso
                hits += 1
            elif iso:
                misses += 1
    assert misses == 0


def test_record():
    rec = s3.split3_record(F(1), F(1))
    assert rec["chi"] == ANCHOR[0] and rec["psi"] == ANCHOR[1]
    assert rec["st"]["s"] == F(1061664, 2197)
    assert rec["j1"] == F(780448, 2197) and rec["j2"] == 128
