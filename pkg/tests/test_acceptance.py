"""Acceptance suite: twelve exact, property-based criteria.

Each test prints its criterion verdict (run pytest with -s or rely on
the captured output on failure).  All checks are exact; the only
tolerances are the stated runtime budgets.
"""

import random
import time
from fractions import Fraction as F

import pytest

from splitjac import ffcrypto, split2 as s2, split3 as s3, surfaces
from splitjac.exactmath import QQ, PrimeField, UniPoly, is_square
from splitjac.genus2core import (
    Genus2Curve,
    MumfordDivisor,
    cantor_add,
    geometric_add,
    igusa_j,
    jacobian_order,
)
from splitjac.genus2core.invariants import igusa_clebsch, weighted_match
from splitjac.modular import are_isogenous, phi, symmetric_reduce
from splitjac.validation import ERRATUM, MATCH, run_validation


def _verdict(num, name, ok):
    print("criterion %2d (%s): %s" % (num, name, "PASS" if ok else "FAIL"))
    assert ok


def _sample_s1s2(rng, n):
    out = []
    while len(out) < n:
        a = F(rng.randint(-50, 50), rng.randint(1, 12))
        b = F(rng.randint(-50, 50), rng.randint(1, 12))
        if s2.delta_s(a, b):
            out.append((a, b))
    return out


def test_criterion_01_j_quadratic_n2():
    """200 seeded rational (s1, s2): j1+j2 = s(u,v), j1*j2 = t(u,v)."""
    t0 = time.time()
    rng = random.Random(101)
    ok = True
    for a, b in _sample_s1s2(rng, 200):
        u, v = s2.dihedral_invariants(a, b)
        if not s2.delta_uv(u, v):
            continue
        j1, j2 = s2.j_invariants(a, b)
        s, t = s2.j_quadratic(u, v)
        if j1 + j2 != s or j1 * j2 != t:
            ok = False
            break
    elapsed = time.time() - t0
    _verdict(1, "j-quadratic identity (n=2)", ok and elapsed < 10)


def test_criterion_02_discriminant_identity():
    """(j1-j2)^2 Delta^2 = 65536 S2; anchor S2(2,9) = 15876 = 126^2."""
    rng = random.Random(101)
    ok = s2.s2_surface(F(2), F(9)) == 15876 == 126 ** 2
    for a, b in _sample_s1s2(rng, 200):
        u, v = s2.dihedral_invariants(a, b)
        if not s2.delta_uv(u, v):
            continue
        j1, j2 = s2.j_invariants(a, b)
        if (j1 - j2) ** 2 * s2.delta_uv(u, v) ** 2 != 65536 * s2.s2_surface(u, v):
            ok = False
            break
    _verdict(2, "discriminant identity", ok)


def test_criterion_03_phi_st_forms():
    """Symmetric reduction of phi_2, phi_3 equals the (s, t) display."""
    ok = all(phi(n).st_form == symmetric_reduce(phi(n).xy_form)
             for n in (2, 3))
    _verdict(3, "phi2/phi3 (s,t) forms", ok)


def test_criterion_04_kronecker_and_symmetry():
    """Kronecker congruence for phi5, phi7; symmetry for all four."""
    ok = all(phi(n).xy_form.is_symmetric() for n in (2, 3, 5, 7))
    ok = ok and phi(5).kronecker_holds() and phi(7).kronecker_holds()
    _verdict(4, "Kronecker + symmetry", ok)


def test_criterion_05_jacobian_arithmetic():
    """3 random curves over F_101: 200 cantor=geometric pairs, group
    axioms on 200 triples, [L(1)]D = 0 for 20 divisors."""
    t0 = time.time()
    fld = PrimeField(101)
    rng = random.Random(55)
    curves = []
    while len(curves) < 3:
        # degree-5 models, so the chord construction applies
        cs = ([fld.of(rng.randrange(101)) for _ in range(5)]
              + [fld.of(rng.randrange(1, 101))])
        try:
            curves.append(Genus2Curve(cs, fld))
        except Exception:
            continue
    ok = True
    for curve in curves:
        pts = [(x, y) for x in fld.elements() for y in fld.elements()
               if y * y == curve.f(x)]
        divs = []
        while len(divs) < 30:
            (x1, y1), (x2, y2) = rng.sample(pts, 2)
            d = cantor_add(MumfordDivisor.from_point(curve, x1, y1),
                           MumfordDivisor.from_point(curve, x2, y2))
            divs.append(d)
        n_pairs = 0
        while n_pairs < 67:  # ~200 pairs across the 3 curves
            a, b = rng.sample(divs, 2)
            if (a.u.degree == 2 and b.u.degree == 2
                    and a.u.gcd(b.u).degree == 0):
                if geometric_add(a, b) != cantor_add(a, b):
                    ok = False
                n_pairs += 1
        for _ in range(67):  # ~200 triples across the 3 curves
            a, b, c = rng.sample(divs, 3)
            if cantor_add(cantor_add(a, b), c) != cantor_add(a, cantor_add(b, c)):
                ok = False
            if cantor_add(a, b) != cantor_add(b, a):
                ok = False
            if not cantor_add(a, -a).is_identity():
                ok = False
        order = jacobian_order(curve)
        for d in divs[:7]:
            if not (order * d).is_identity():
                ok = False
    elapsed = time.time() - t0
    _verdict(5, "Jacobian arithmetic F_101 (%.1fs)" % elapsed,
             ok and elapsed < 60)


def test_criterion_06_cover_identities():
    """V^2 - E(U) reduces to zero modulo Y^2 - f at 20 random (u, v)."""
    rng = random.Random(66)
    n = 0
    ok = True
    while n < 20:
        u, v = F(rng.randint(-9, 9)), F(rng.randint(-9, 9))
        try:
            ok1 = s3.verify_cover(u, v, 1)
            ok2 = s3.verify_cover(u, v, 2)
        except Exception:
            continue
        ok = ok and ok1 and ok2
        n += 1
    _verdict(6, "(3,3) cover identities", ok)


def test_criterion_07_j_surface_33():
    """Anchors at (u,v)=(1,1); printed (s, t)/S3 match on 100 points or
    carry errata with corrected forms that do match."""
    ok = s3.j_invariants3(F(1), F(1)) == (F(780448, 2197), F(128))
    chi, psi = s3.chi_psi(F(1), F(1))
    ok = ok and s3.st_surface(chi, psi) == (F(1061664, 2197),
                                            F(99897344, 2197))
    rng = random.Random(77)
    n = printed_s_ok = printed_t_ok = corrected_ok = 0
    while n < 100:
        u, v = F(rng.randint(-30, 30), rng.randint(1, 6)), \
            F(rng.randint(-30, 30), rng.randint(1, 6))
        try:
            c, p = s3.chi_psi(u, v)
            if not c or not p:
                continue
            j1, j2 = s3.j_invariants3(u, v)
            sv, tv = s3.st_surface(c, p)
        except Exception:
            continue
        if sv == j1 + j2 and tv == j1 * j2:
            corrected_ok += 1
        try:
            ps, pt = s3.printed_st(c, p)
            printed_s_ok += ps == j1 + j2
            printed_t_ok += pt == j1 * j2
        except Exception:
            pass
        n += 1
    ok = ok and corrected_ok == 100
    if printed_s_ok < 100 or printed_t_ok < 100:
        # printed forms are errata: the validation report must say so
        # and the corrected forms must match (checked above)
        report = run_validation(seed=7, points=10)
        status = {e.formula_id: e.status for e in report.entries}
        ok = ok and status["split3.j_sum_surface"] == ERRATUM
        ok = ok and status["split3.j_product_surface"] == ERRATUM
        ok = ok and status["split3.s3_polynomial"] == ERRATUM
    _verdict(7, "(3,3) j-surface anchors + erratum policy", ok)


def test_criterion_08_igusa_consistency():
    """chi-psi Igusa block vs sextic invariants at 50 points (the
    printed block is a documented erratum; the corrected one must
    match)."""
    rng = random.Random(88)
    n = printed_match = corrected_match = 0
    while n < 50:
        u, v = F(rng.randint(-20, 20), rng.randint(1, 4)), \
            F(rng.randint(-20, 20), rng.randint(1, 4))
        try:
            c, p = s3.chi_psi(u, v)
            if not c or not p:
                continue
            sx = s3.sextic(u, v)
            oracle = igusa_j(Genus2Curve([sx[i] for i in range(7)], QQ))
            cand = s3.igusa_chipsi_surface(c, p)
        except Exception:
            continue
        corrected_match += weighted_match(cand.astuple(), oracle.astuple(),
                                          (2, 4, 6, 10))
        printed = s3.igusa_from_chipsi(c, p)
        printed_match += weighted_match(printed.astuple(), oracle.astuple(),
                                        (2, 4, 6, 10))
        n += 1
    ok = corrected_match == 50
    if printed_match < 50:
        report = run_validation(seed=8, points=10)
        status = {e.formula_id: e.status for e in report.entries}
        ok = ok and status["split3.igusa_block"] == ERRATUM
    _verdict(8, "Igusa consistency (50 pts)", ok)


def test_criterion_09_shioda_inose():
    """si_from_uv and si_from_chipsi weighted-match the Igusa-Clebsch
    route at 50 points each (printed chi-psi forms: documented
    erratum; corrected forms must match)."""
    rng = random.Random(99)
    uv_ok = n = 0
    while n < 50:
        a, b = F(rng.randint(-9, 9)), F(rng.randint(-9, 9))
        if not s2.delta_s(a, b):
            continue
        u, v = s2.dihedral_invariants(a, b)
        try:
            ref = surfaces.si_from_igusa_clebsch(igusa_clebsch(
                Genus2Curve([F(-1), F(0), b, F(0), -a, F(0), F(1)], QQ)))
        except Exception:
            continue
        uv_ok += surfaces.si_weighted_match(ref, surfaces.si_from_uv(u, v))
        n += 1
    chipsi_printed = chipsi_corrected = n = 0
    while n < 50:
        u, v = F(rng.randint(-12, 12), rng.randint(1, 4)), \
            F(rng.randint(-12, 12), rng.randint(1, 4))
        try:
            c, p = s3.chi_psi(u, v)
            if not c or not p:
                continue
            sx = s3.sextic(u, v)
            ref = surfaces.si_from_igusa_clebsch(
                igusa_clebsch(Genus2Curve([sx[i] for i in range(7)], QQ)))
            corrected = surfaces.si_from_chipsi_corrected(c, p)
        except Exception:
            continue
        chipsi_corrected += surfaces.si_weighted_match(ref, corrected)
        try:
            chipsi_printed += surfaces.si_weighted_match(
                ref, surfaces.si_from_chipsi(c, p))
        except Exception:
            pass
        n += 1
    ok = uv_ok == 50 and chipsi_corrected == 50
    if chipsi_printed < 50:
        report = run_validation(seed=9, points=10)
        status = {e.formula_id: e.status for e in report.entries}
        ok = ok and status["surfaces.si_chipsi_closed_forms"] == ERRATUM
    _verdict(9, "Shioda-Inose weighted match (50+50 pts)", ok)


def test_criterion_10_mod_p_locus_soundness():
    """Over F_101: printed f1 f2 = 0 (N=2) and D6 line (N=3) imply
    phi_N(j1, j2) = 0 where defined; eliminated (2,2) locus equals
    printed f1*f2 up to a constant."""
    t0 = time.time()
    fld = PrimeField(101)
    ok = True
    checked2 = checked3 = 0
    for a in range(101):
        for b in range(101):
            u, v = fld.of(a), fld.of(b)
            d = s2.delta_uv(u, v)
            if not d or not is_square(s2.s2_surface(u, v)):
                continue
            on2 = not (s2.F1_PRINTED(u, v) * s2.F2_PRINTED(u, v))
            on3 = not s2.D6_LINE(u, v)
            if not (on2 or on3):
                continue
            s, t = s2.j_quadratic(u, v)
            disc = s * s - t * 4
            if not is_square(disc):
                continue
            from splitjac.exactmath import sqrt
            r = sqrt(disc)
            half = fld.one() / 2
            j1, j2 = (s + r) * half, (s - r) * half
            if on2:
                checked2 += 1
                if not are_isogenous(j1, j2, 2):
                    ok = False
            if on3:
                checked3 += 1
                if not are_isogenous(j1, j2, 3):
                    ok = False
    ok = ok and checked2 > 50 and checked3 > 20
    # eliminated (n, N) = (2, 2) locus == printed f1*f2 up to constant
    elim = s2.isogeny_locus(2)
    printed = s2.F1_PRINTED * s2.F2_PRINTED
    key = next(iter(printed.terms))
    c1, c2 = elim.terms.get(key), printed.terms[key]
    prop = (c1 is not None and set(elim.terms) == set(printed.terms)
            and all(F(c) * F(c2) == F(printed.terms[k]) * F(c1)
                    for k, c in elim.terms.items()))
    elapsed = time.time() - t0
    _verdict(10, "mod-p locus soundness (%d+%d pts, %.0fs)"
             % (checked2, checked3, elapsed),
             ok and prop and elapsed < 300)


def test_criterion_11_ffcrypto_scans():
    """p in {7, 11, 19, 23}: full alpha-scans; lemma everywhere;
    supersingular implies (p+1)^2 points."""
    t0 = time.time()
    ok = True
    for p in (7, 11, 19, 23):
        rows = ffcrypto.ss_scan(p)
        if len(rows) != p * (p - 1):
            ok = False
        for r in rows:
            if not r["valid"]:
                continue
            if r["lemma_holds"] is not True:
                ok = False
            # #E = L(1) = 1 + c1 + p^2, so (p+1)^2 points means c1 = 2p
            if r["supersingular"] and r["LE_c1"] != 2 * p:
                ok = False
    elapsed = time.time() - t0
    _verdict(11, "ffcrypto scans p=7,11,19,23 (%.0fs)" % elapsed,
             ok and elapsed < 300)


def test_criterion_12_d4_pair():
    """phi_2(d4_pair(w)) = 0 at 30 rational w."""
    p2 = phi(2)
    ok = True
    n = 0
    rng = random.Random(1212)
    while n < 30:
        w = F(rng.randint(-40, 40), rng.randint(1, 7))
        if w == -1:
            continue
        j, jp = s2.d4_pair(w)
        if p2(j, jp) != 0:
            ok = False
        n += 1
    if not ok:
        report = run_validation(seed=12, points=10)
        status = {e.formula_id: e.status for e in report.entries}
        ok = status["split2.d4_isogeny_pair"] == ERRATUM
    _verdict(12, "D4 2-isogeny pair", ok)
