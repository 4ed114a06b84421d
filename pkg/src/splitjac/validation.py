"""Trust-but-verify registry for every closed-form display shipped by
the library.

Each registered formula is re-checked at runtime against an
independent oracle (symbolic substitution, invariant recomputation, or
finite-field scans).  A check ends in one of three states:

- ``match``: the display agrees with the oracle everywhere tested;
- ``erratum``: the display disagrees and the library ships an
  oracle-backed corrected form (the corrected form is what the public
  functions use);
- ``unresolved``: the check could not decide (never expected on the
  shipped formula set).
"""

import json
import random
from fractions import Fraction

from .exactmath import QQ, BiPoly, PrimeField, UniPoly, is_square
from .genus2core import Genus2Curve, igusa_j
from .genus2core.invariants import (
    igusa_clebsch,
    j_invariant_cubic,
    weighted_match,
)
from .modular import are_isogenous, phi
from . import ffcrypto, split2, split3, surfaces

MATCH, ERRATUM, UNRESOLVED = "match", "erratum", "unresolved"


def _fmt(x):
    """Decimal-string form of a value (tuples/lists recurse)."""
    if isinstance(x, (tuple, list)):
        return [_fmt(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _fmt(v) for k, v in x.items()}
    return str(x)


class Entry:
    def __init__(self, formula_id, location, status, witness=None,
                 printed=None, oracle=None, note=""):
        self.formula_id = formula_id
        self.location = location
        self.status = status
        self.witness = witness
        self.printed = printed
        self.oracle = oracle
        self.note = note

    def asdict(self):
        return {
            "formula_id": self.formula_id,
            "location": self.location,
            "status": self.status,
            "witness": _fmt(self.witness) if self.witness is not None else None,
            "printed": _fmt(self.printed) if self.printed is not None else None,
            "oracle": _fmt(self.oracle) if self.oracle is not None else None,
            "note": self.note,
        }


class ValidationReport:
    def __init__(self, entries, seed, points):
        self.entries = entries
        self.seed = seed
        self.points = points

    @property
    def unresolved(self):
        return [e for e in self.entries if e.status == UNRESOLVED]

    @property
    def errata(self):
        return [e for e in self.entries if e.status == ERRATUM]

    def asdict(self):
        return {
            "seed": self.seed,
            "points": self.points,
            "counts": {
                MATCH: sum(e.status == MATCH for e in self.entries),
                ERRATUM: len(self.errata),
                UNRESOLVED: len(self.unresolved),
            },
            "entries": [e.asdict() for e in self.entries],
        }

    def to_json(self, indent=2):
        return json.dumps(self.asdict(), indent=indent)

    def summary(self):
        lines = ["validation: %d formulas, %d match, %d errata, %d unresolved"
                 % (len(self.entries),
                    sum(e.status == MATCH for e in self.entries),
                    len(self.errata), len(self.unresolved))]
        for e in self.entries:
            lines.append("  [%-10s] %-34s %s" % (e.status, e.formula_id,
                                                 e.note or e.location))
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# individual checks


def _sample_s1s2(rng, n):
    out = []
    while len(out) < n:
        s1 = Fraction(rng.randint(-40, 40), rng.randint(1, 9))
        s2 = Fraction(rng.randint(-40, 40), rng.randint(1, 9))
        if split2.delta_s(s1, s2):
            out.append((s1, s2))
    return out


def _sample_uv3(rng, n):
    out = []
    while len(out) < n:
        u = Fraction(rng.randint(-30, 30), rng.randint(1, 6))
        v = Fraction(rng.randint(-30, 30), rng.randint(1, 6))
        try:
            chi, psi = split3.chi_psi(u, v)
        except Exception:
            continue
        if chi and psi:
            out.append((u, v, chi, psi))
    return out


def check_pair_addition_quadratic(rng, points):
    """Displayed quadratic for the two new intersection abscissae of the
    interpolating cubic: x^2 + (sum x_i) x + (b3^2 - a5)/(b0^2 prod x_i)."""
    from .exactmath import sqrt as fsqrt
    fld = PrimeField(101)
    f = UniPoly([fld.of(c) for c in (3, 7, 0, 1, 0, 1)], fld)  # degree-5 model
    xs, ys = [], []
    k = 2
    while len(xs) < 4:
        x = fld.of(k)
        k += 1
        if is_square(f(x)) and f(x):
            xs.append(x)
            ys.append(fsqrt(f(x)))
    # interpolating cubic through the four points (Lagrange)
    g = UniPoly([fld.of(0)], fld)
    for i in range(4):
        basis = UniPoly([fld.one()], fld)
        denom = fld.one()
        for j in range(4):
            if j != i:
                basis = basis * UniPoly([-xs[j], fld.one()], fld)
                denom = denom * (xs[i] - xs[j])
        g = g + basis * (ys[i] / denom)
    diff = g * g - f
    # true quadratic: divide out the four known roots
    for x in xs:
        diff = diff.exact_div(UniPoly([-x, fld.one()], fld))
    true_quad = diff.monic()
    b0, b3 = g[3], g[0]
    prod = xs[0] * xs[1] * xs[2] * xs[3]
    ssum = xs[0] + xs[1] + xs[2] + xs[3]
    printed_lin = ssum
    printed_const = (b3 * b3 - f[5]) / (b0 * b0 * prod)
    printed = (printed_lin, printed_const)
    oracle = (true_quad[1], true_quad[0])
    # derived correction: linear (2 b0 b1 - a5)/b0^2 + sum, negated;
    # constant (b3^2 - a0)/(b0^2 prod)
    corr_lin = (g[3] * g[2] * 2 - f[5]) / (b0 * b0) + ssum
    corr = (corr_lin, (b3 * b3 - f[0]) / (b0 * b0 * prod))
    status = MATCH if printed == oracle else ERRATUM
    note = ""
    if status == ERRATUM:
        if corr != oracle:
            status = UNRESOLVED
        else:
            note = ("divisor addition uses polynomial division of "
                    "g^2 - f instead of the displayed quadratic")
    return Entry("jacobian.pair_addition_quadratic",
                 "quadratic for the two new abscissae in rational-"
                 "interpolation divisor addition",
                 status, witness={"curve": "y^2=x^5+x^3+7x+3 over F_101",
                                  "x": [int(x) for x in xs]},
                 printed=printed, oracle=oracle, note=note)


def check_phi_st(N):
    """The displayed (s, t) rewrite of phi_N equals the symmetric
    reduction of the displayed (x, y) form."""
    ok = _st_identity(phi(N))
    return Entry("modular.phi%d_st_reduction" % N,
                 "level-%d modular polynomial in (j1+j2, j1 j2) form" % N,
                 MATCH if ok else ERRATUM,
                 witness="polynomial identity st(x+y, xy) == xy(x, y)",
                 printed="displayed st form", oracle="symmetric reduction")


def _st_identity(m):
    # st_form(x+y, xy) == xy_form(x, y) as exact bivariate polynomials
    x_plus_y = BiPoly({(1, 0): 1, (0, 1): 1})
    xy = BiPoly({(1, 1): 1})
    acc = BiPoly({})
    pows = {}

    def p(base, tag, n):
        tab = pows.setdefault(tag, {0: BiPoly({(0, 0): 1})})
        while n not in tab:
            k = max(tab)
            tab[k + 1] = tab[k] * base
        return tab[n]

    for (a, b), c in m.st_form.terms.items():
        acc = acc + p(x_plus_y, "s", a) * p(xy, "t", b) * c
    return acc == m.xy_form


def check_split2_j_sum(rng, points):
    pts = _sample_s1s2(rng, points)
    bad = None
    for s1, s2 in pts:
        u, v = split2.dihedral_invariants(s1, s2)
        j1, j2 = split2.j_invariants(s1, s2)
        s, _ = split2.j_quadratic(u, v)
        if s != j1 + j2:
            bad = (s1, s2, s, j1 + j2)
            break
    status = MATCH if bad is None else ERRATUM
    return Entry("split2.j_sum_coefficient",
                 "s(u, v) = 256 A / Delta in the 2-split j-quadratic",
                 status, witness=bad or ("%d points" % len(pts)),
                 printed=None if bad is None else bad[2],
                 oracle=None if bad is None else bad[3])


def check_split2_j_product(rng, points):
    """Displayed t has 65536 (u^2+9u-3v)/Delta^2; the oracle j1*j2
    requires the cube of that trinomial."""
    pts = _sample_s1s2(rng, points)
    n_printed = n_corr = 0
    wit = None
    for s1, s2 in pts:
        u, v = split2.dihedral_invariants(s1, s2)
        j1, j2 = split2.j_invariants(s1, s2)
        d = split2.delta_uv(u, v)
        printed_t = split2.B_POLY(u, v) * 65536 / (d * d)
        _, t = split2.j_quadratic(u, v)
        if printed_t == j1 * j2:
            n_printed += 1
        elif wit is None:
            wit = ((u, v), printed_t, j1 * j2)
        if t == j1 * j2:
            n_corr += 1
    if n_printed == len(pts):
        return Entry("split2.j_product_coefficient",
                     "t(u, v) display in the 2-split j-quadratic",
                     MATCH, witness="%d points" % len(pts))
    status = ERRATUM if n_corr == len(pts) else UNRESOLVED
    return Entry("split2.j_product_coefficient",
                 "t(u, v) display in the 2-split j-quadratic",
                 status, witness=wit[0], printed=wit[1], oracle=wit[2],
                 note="corrected t = 65536 (u^2+9u-3v)^3 / Delta^2 "
                      "(cube omitted in the display)")


def check_split2_s2(rng, points):
    pts = _sample_s1s2(rng, points)
    n_printed = n_corr = 0
    wit = None
    for s1, s2 in pts:
        u, v = split2.dihedral_invariants(s1, s2)
        j1, j2 = split2.j_invariants(s1, s2)
        d = split2.delta_uv(u, v)
        lhs = (j1 - j2) ** 2 * d * d
        if lhs == 65536 * split2.printed_s2(u, v):
            n_printed += 1
        elif wit is None:
            wit = ((u, v), split2.printed_s2(u, v), lhs / 65536)
        if lhs == 65536 * split2.s2_surface(u, v):
            n_corr += 1
    if n_printed == len(pts):
        return Entry("split2.s2_polynomial", "quartic display of S2(u, v)",
                     MATCH, witness="%d points" % len(pts))
    status = ERRATUM if n_corr == len(pts) else UNRESOLVED
    return Entry("split2.s2_polynomial", "quartic display of S2(u, v)",
                 status, witness=wit[0], printed=wit[1], oracle=wit[2],
                 note="authoritative S2 = A^2 - 4 B^3; at (2,9) the "
                      "display gives 14876 instead of 15876 = 126^2")


def check_d4_pair():
    ws = [Fraction(k) for k in list(range(2, 26)) + [-3, -4, -7, 29, 31, 37]]
    bad = None
    for w in ws:
        try:
            ja, jb = split2.d4_pair(w)
        except Exception:
            continue
        if not are_isogenous(ja, jb, 2):
            bad = (w, ja, jb)
            break
    status = MATCH if bad is None else ERRATUM
    return Entry("split2.d4_isogeny_pair",
                 "closed-form 2-isogenous j-pair on the D4 stratum",
                 status, witness=bad or ("%d rational w" % len(ws)),
                 note="" if bad is None else "phi_2(j-pair) != 0")


def check_split2_locus_n2():
    elim = split2.isogeny_locus(2)
    printed = split2.F1_PRINTED * split2.F2_PRINTED
    ok = _proportional(elim, printed)
    return Entry("split2.locus_n2_f1f2",
                 "factored display f1(u,v) f2(u,v) of the level-2 locus",
                 MATCH if ok else ERRATUM,
                 witness="eliminated polynomial vs displayed product",
                 note="equal up to a nonzero constant" if ok else "differ")


def _proportional(p, q):
    if set(p.terms) != set(q.terms):
        return False
    k = next(iter(p.terms))
    c1, c2 = Fraction(p.terms[k]), Fraction(q.terms[k])
    return all(Fraction(c) * c2 == Fraction(q.terms[t]) * c1
               for t, c in p.terms.items())


def check_split2_locus_n3():
    elim = split2.isogeny_locus(3)
    printed = split2.D6_LINE * split2.G1_PRINTED * split2.G2_PRINTED
    ok = _proportional(elim, printed)
    return Entry("split2.locus_n3_factorization",
                 "factored display (4v-u^2+110u-1125) g1 g2 of the "
                 "level-3 locus",
                 MATCH if ok else ERRATUM,
                 witness="eliminated polynomial vs displayed product",
                 note="equal up to a nonzero constant" if ok else "differ")


def check_cover1():
    u, v = Fraction(1), Fraction(1)
    ok_corr = split3.verify_cover(u, v, 1)
    # displayed map: V1 denominator F (not F^2) and the un-twisted model
    F, _ = split3.cubic_factors(u, v)
    e1p = split3.printed_elliptic_components3(u, v)[0]
    X = Fraction(2)
    n1 = Fraction(1) * (v * v * X ** 3 - v * X - 2)
    f = split3.sextic(u, v)
    V2_disp = f(X) * n1 * n1 / F(X) ** 2
    c3, c2, c1, c0 = e1p
    U = v * X * X / F(X)
    E_disp = c3 * U ** 3 + c2 * U * U + c1 * U + c0
    if V2_disp == E_disp:
        status = MATCH
    elif ok_corr:
        status = ERRATUM
    else:
        status = UNRESOLVED
    return Entry("split3.cover1_map",
                 "first degree-3 cover (U1, V1) and its cubic model",
                 status,
                 witness={"(u,v)": (u, v), "X": X},
                 printed=E_disp, oracle=V2_disp,
                 note="V1 needs denominator F^2 and the model is the "
                      "(-1)-twist of the display (all four coefficient "
                      "signs flip); corrected identity verified "
                      "symbolically" if status == ERRATUM else "")


def check_cover2():
    u, v = Fraction(1), Fraction(1)
    ok_corr = split3.verify_cover(u, v, 2)
    # displayed numerator has constant +1; corrected uses -1
    cov = split3.degree3_covers(u, v)[1]
    disp_num = UniPoly([Fraction(1), -v, v * (v - 4 * u),
                        v * v * (v - 4 * u + 8)], QQ)
    e2 = split3.elliptic_components3(u, v)[1]
    X = Fraction(2)
    UN, UD = cov.u_num(X), cov.u_den(X)
    U = UN / UD
    E = e2[0] * U ** 3 + e2[1] * U * U + e2[2] * U + e2[3]
    f = split3.sextic(u, v)
    V2_disp = cov.vsq_scale * f(X) * disp_num(X) ** 2 / cov.v_den(X) ** 2
    if V2_disp == E:
        status = MATCH
    elif ok_corr:
        status = ERRATUM
    else:
        status = UNRESOLVED
    return Entry("split3.cover2_map",
                 "second degree-3 cover (U2, V2) numerator of V2",
                 status, witness={"(u,v)": (u, v), "X": X},
                 printed=V2_disp, oracle=E,
                 note="constant term of the V2 numerator is -1, "
                      "not +1" if status == ERRATUM else "")


def check_split3_chi_psi(rng, points):
    pts = _sample_uv3(rng, points)
    bad = None
    for u, v, chi, psi in pts:
        F, G = split3.cubic_factors(u, v)
        try:
            r1, r2, _ = split3.cubic_pair_invariants(F, G)
        except Exception:
            continue
        if (r1, r2) != (chi, psi):
            bad = ((u, v), (r1, r2), (chi, psi))
            break
    return Entry("split3.chi_psi_closed_forms",
                 "closed forms of the pair invariants (chi, psi)",
                 MATCH if bad is None else ERRATUM,
                 witness=bad or ("%d points" % len(pts)))


def check_split3_j(rng, points):
    pts = _sample_uv3(rng, points)
    bad = None
    for u, v, _, _ in pts:
        j1, j2 = split3.j_invariants3(u, v)
        m1, m2 = split3.elliptic_components3(u, v)
        if (j_invariant_cubic(*m1), j_invariant_cubic(*m2)) != (j1, j2):
            bad = (u, v)
            break
    return Entry("split3.j_closed_forms",
                 "closed forms of the component j-invariants (3-split)",
                 MATCH if bad is None else ERRATUM,
                 witness=bad or ("%d points" % len(pts)))


def _split3_st_entry(rng, points, which, fid, loc, note):
    pts = _sample_uv3(rng, points)
    n_printed = n_corr = 0
    wit = None
    for u, v, chi, psi in pts:
        j1, j2 = split3.j_invariants3(u, v)
        target = j1 + j2 if which == 0 else j1 * j2
        try:
            pr = split3.printed_st(chi, psi)[which]
        except Exception:
            pr = None
        co = split3.st_surface(chi, psi)[which]
        if pr == target:
            n_printed += 1
        elif wit is None:
            wit = ((chi, psi), pr, target)
        if co == target:
            n_corr += 1
    if n_printed == len(pts):
        return Entry(fid, loc, MATCH, witness="%d points" % len(pts))
    status = ERRATUM if n_corr == len(pts) else UNRESOLVED
    return Entry(fid, loc, status, witness=wit[0], printed=wit[1],
                 oracle=wit[2], note=note)


def check_split3_s(rng, points):
    return _split3_st_entry(
        rng, points, 0, "split3.j_sum_surface",
        "s(chi, psi) display of the 3-split j-quadratic",
        "corrected s = N_S / (-40310784 chi^4 psi^6), derived by "
        "elimination and verified symbolically")


def check_split3_t(rng, points):
    return _split3_st_entry(
        rng, points, 1, "split3.j_product_surface",
        "t(chi, psi) display of the 3-split j-quadratic",
        "corrected t = N_T / (-2176782336 chi^3 psi^9), derived by "
        "elimination and verified symbolically")


def check_split3_s3():
    """Square-class criterion: is_square(S3) must equal rationality of
    the component j's.  Scan F_101 for a decisive witness."""
    fld = PrimeField(101)
    wit = None
    n_agree_corr = n_pts = 0
    for a in range(101):
        for b in range(101):
            u, v = fld.of(a), fld.of(b)
            try:
                chi, psi = split3.chi_psi(u, v)
                j1, j2 = split3.j_invariants3(u, v)
            except Exception:
                continue
            if not chi or not psi:
                continue
            n_pts += 1
            split_here = True  # j's computed in F_p, so always rational
            sq_corr = is_square(split3.s3_surface(chi, psi))
            sq_printed = is_square(split3.printed_s3(chi, psi))
            if sq_corr == split_here:
                n_agree_corr += 1
            if sq_printed != split_here and wit is None:
                wit = ((int(chi), int(psi)),
                       "printed S3 non-square over F_101",
                       "j1, j2 in F_101 (split)")
        if wit and n_pts > 400:
            break
    if wit is None:
        return Entry("split3.s3_polynomial", "displayed S3(chi, psi)",
                     MATCH, witness="%d F_101 points" % n_pts)
    status = ERRATUM if n_agree_corr == n_pts else UNRESOLVED
    return Entry("split3.s3_polynomial", "displayed S3(chi, psi)",
                 status, witness=wit[0], printed=wit[1], oracle=wit[2],
                 note="authoritative S3 = discriminant numerator of the "
                      "corrected j-quadratic (the display is not even "
                      "square-equivalent to it)")


def check_split3_igusa(rng, points):
    pts = _sample_uv3(rng, points)
    n_printed = n_corr = 0
    wit = None
    for u, v, chi, psi in pts:
        sx = split3.sextic(u, v)
        J = igusa_j(Genus2Curve([sx[i] for i in range(7)], QQ))
        P = split3.igusa_from_chipsi(chi, psi)
        if weighted_match(P.astuple(), J.astuple(), (2, 4, 6, 10)):
            n_printed += 1
        elif wit is None:
            wit = ((chi, psi), P.astuple(), J.astuple())
        try:
            C = split3.igusa_chipsi_surface(chi, psi)
            if weighted_match(C.astuple(), J.astuple(), (2, 4, 6, 10)):
                n_corr += 1
        except Exception:
            pass
    if n_printed == len(pts):
        return Entry("split3.igusa_block",
                     "displayed [J2:J4:J6:J10] block in (chi, psi)",
                     MATCH, witness="%d points" % len(pts))
    status = ERRATUM if n_corr == len(pts) else UNRESOLVED
    return Entry("split3.igusa_block",
                 "displayed [J2:J4:J6:J10] block in (chi, psi)",
                 status, witness=wit[0], printed=wit[1], oracle=wit[2],
                 note="no weight-0 ratio of the display matches; "
                      "corrected ratios J4/J2^2, J6/J2^3, J10/J2^5 "
                      "fitted against the sextic-invariant oracle")


def check_split3_locus_n2_component():
    elim = split3.isogeny_locus3(2)
    divides = split3.G1_N2_PRINTED.divides(elim)
    if divides:
        return Entry("split3.locus_n2_component",
                     "displayed genus-zero component of the 3-split "
                     "level-2 locus", MATCH,
                     witness="divides the eliminated locus")
    return Entry("split3.locus_n2_component",
                 "displayed genus-zero component of the 3-split "
                 "level-2 locus", ERRATUM,
                 witness="bivariate divisibility test",
                 printed="does not divide the eliminated locus",
                 oracle="eliminated locus from the corrected (s, t)",
                 note="the display descends from the uncorrected (s, t); "
                      "membership must use the eliminated locus")


def check_si_uv(rng, points):
    bad = None
    n = 0
    while n < points:
        s1 = Fraction(rng.randint(-9, 9))
        s2 = Fraction(rng.randint(-9, 9))
        if not split2.delta_s(s1, s2):
            continue
        u, v = split2.dihedral_invariants(s1, s2)
        C = Genus2Curve([Fraction(-1), Fraction(0), s2, Fraction(0),
                         -s1, Fraction(0), Fraction(1)], QQ)
        ref = surfaces.si_from_igusa_clebsch(igusa_clebsch(C))
        cand = surfaces.si_from_uv(u, v)
        if not surfaces.si_weighted_match(ref, cand):
            bad = ((u, v), cand.astuple(), ref.astuple())
            break
        n += 1
    return Entry("surfaces.si_uv_closed_forms",
                 "(alpha, beta, gamma, delta) closed forms in (u, v)",
                 MATCH if bad is None else ERRATUM,
                 witness=bad or ("%d points" % n))


def check_si_chipsi(rng, points):
    n_printed = n_corr = n = 0
    wit = None
    pts = _sample_uv3(rng, points)
    for u, v, chi, psi in pts:
        sx = split3.sextic(u, v)
        C = Genus2Curve([sx[i] for i in range(7)], QQ)
        ref = surfaces.si_from_igusa_clebsch(igusa_clebsch(C))
        try:
            pr = surfaces.si_from_chipsi(chi, psi)
            if surfaces.si_weighted_match(ref, pr):
                n_printed += 1
            elif wit is None:
                wit = ((chi, psi), pr.astuple(), ref.astuple())
        except Exception:
            pass
        try:
            co = surfaces.si_from_chipsi_corrected(chi, psi)
            if surfaces.si_weighted_match(ref, co):
                n_corr += 1
        except Exception:
            pass
        n += 1
    if n_printed == n:
        return Entry("surfaces.si_chipsi_closed_forms",
                     "(alpha, beta, gamma, delta) closed forms in "
                     "(chi, psi)", MATCH, witness="%d points" % n)
    status = ERRATUM if n_corr == n else UNRESOLVED
    return Entry("surfaces.si_chipsi_closed_forms",
                 "(alpha, beta, gamma, delta) closed forms in (chi, psi)",
                 status, witness=None if wit is None else wit[0],
                 printed=None if wit is None else wit[1],
                 oracle=None if wit is None else wit[2],
                 note="inherits the Igusa-block erratum; corrected "
                      "parameters built from the corrected ratios")


def check_lift_f3():
    bad = None
    for p in (7, 11):
        rows = ffcrypto.ss_scan(p)
        for r in rows:
            if r["valid"] and not r["lemma_holds"]:
                bad = r
                break
        if bad:
            break
    return Entry("ffcrypto.lift_f3",
                 "third quadratic of the genus-2 lift of a Montgomery "
                 "curve",
                 MATCH if bad is None else ERRATUM,
                 witness=bad or "full alpha-scans for p = 7, 11",
                 note="" if bad is None else
                 "L_X(T) != L_E(T^2) at the witness row")


def run_validation(seed=0, points=50):
    """Run every registered check; deterministic for a fixed seed."""
    rng = random.Random(seed)
    entries = [
        check_pair_addition_quadratic(rng, points),
        check_phi_st(2),
        check_phi_st(3),
        check_split2_j_sum(rng, points),
        check_split2_j_product(rng, points),
        check_split2_s2(rng, points),
        check_d4_pair(),
        check_split2_locus_n2(),
        check_split2_locus_n3(),
        check_cover1(),
        check_cover2(),
        check_split3_chi_psi(rng, points),
        check_split3_j(rng, points),
        check_split3_s(rng, points),
        check_split3_t(rng, points),
        check_split3_s3(),
        check_split3_igusa(rng, max(10, points // 3)),
        check_split3_locus_n2_component(),
        check_si_uv(rng, max(10, points // 2)),
        check_si_chipsi(rng, max(10, points // 3)),
        check_lift_f3(),
    ]
    return ValidationReport(entries, seed, points)
