"""The (2,2)-reducible genus-2 family Y^2 = X^6 - s1 X^4 + s2 X^2 - 1.

The Jacobian splits as a product of the two elliptic quotients by
(X, Y) -> (-X, +-Y).  Everything is parametrized either by (s1, s2) or
by the dihedral invariants (u, v) = (s1 s2, s1^3 + s2^3), which
classify the curve up to the twist action.
"""

from .exactmath import QQ, BiPoly, NonSquareError, cube_roots, is_square, sqrt
from .genus2core import InvalidCurveError
from .modular import cached_locus, eliminate_locus, phi

# s = j1 + j2 and t = j1*j2 as rational functions of (u, v):
# s = 256*A/Delta, t = 65536*B^3/Delta^2.
A_POLY = BiPoly({(0, 2): 1, (3, 0): -2, (2, 0): 54, (1, 1): -9, (0, 1): -27})
B_POLY = BiPoly({(2, 0): 1, (1, 0): 9, (0, 1): -3})
DELTA_POLY = BiPoly({(2, 0): 1, (0, 1): -4, (1, 0): 18, (0, 0): -27})
D6_LINE = BiPoly({(0, 1): 4, (2, 0): -1, (1, 0): 110, (0, 0): -1125})

# level-2 locus factors as displayed in the source text (their product
# equals the eliminated locus up to sign; see the validation module)
F1_PRINTED = BiPoly({
    (0, 3): -16, (0, 2): -81216, (0, 1): -892296, (0, 0): -2460375,
    (1, 2): 3312, (1, 1): 707616, (1, 0): 3805380, (2, 1): 18360,
    (2, 0): -1296162, (3, 1): -1744, (3, 0): -140076, (4, 0): 801,
    (5, 0): 256,
})
F2_PRINTED = BiPoly({
    (7, 0): 4096, (6, 0): 256016, (5, 1): -45824, (5, 0): 4736016,
    (4, 1): -2126736, (4, 0): 23158143, (3, 1): -25451712,
    (3, 0): -119745540, (2, 2): 5291136, (2, 1): -48166488,
    (2, 0): -2390500350, (1, 3): -179712, (1, 2): 35831808,
    (1, 1): 1113270480, (1, 0): 9300217500, (0, 3): -4036608,
    (0, 1): -1791153000, (0, 0): -8303765625, (0, 4): -1024,
    (3, 2): 163840, (0, 2): -122250384, (2, 3): 256,
})

# level-3 locus factors as displayed (eliminated locus = line * g1 * g2)
G1_PRINTED = BiPoly({
    (6, 0): -27008, (7, 0): 256, (5, 1): -2432, (0, 4): 1, (3, 2): 7296,
    (1, 3): -6692, (1, 0): -1755067500, (0, 3): 2419308,
    (4, 0): -34553439, (2, 1): 127753092, (3, 1): 16274844,
    (2, 2): -1720730, (5, 0): -1941120, (0, 1): 381631500,
    (2, 0): 1018668150, (3, 0): -116158860, (0, 2): 52621974,
    (4, 1): 387712, (1, 1): -483963660, (1, 2): -33416676,
    (0, 0): 922640625,
})
G2_PRINTED = BiPoly({
    (6, 0): 291350448, (2, 4): -1, (6, 1): -998848, (7, 1): -3456,
    (4, 2): 4749840, (5, 2): 17032, (0, 5): 4, (8, 0): 80368,
    (9, 0): 256, (7, 0): 6848224, (2, 3): -10535040, (3, 3): -35872,
    (1, 4): 26478, (5, 1): -77908736, (0, 4): 9516699,
    (3, 2): 307234984, (1, 3): -419583744, (0, 3): -826436736,
    (4, 0): 27502903296, (2, 1): 28808773632, (3, 1): -23429955456,
    (2, 2): 5455334016, (0, 1): -41278242816, (2, 0): 82556485632,
    (3, 0): -108737593344, (0, 2): -12123095040, (1, 1): 41278242816,
    (1, 2): 3503554560, (5, 0): 5341019904, (4, 1): -2454612480,
})

# S2(u,v) as displayed in the source text; the authoritative value is
# A^2 - 4 B^3 (they disagree, see the validation module)
PRINTED_S2 = (
    BiPoly({(0, 4): 1})
    - BiPoly({(1, 3): 18, (0, 3): 162})
    - BiPoly({(3, 2): 4, (2, 2): -297, (1, 2): -1458, (0, 2): -729})
    - BiPoly({(3, 1): 216 * 7, (2, 1): 216 * 27})
    + BiPoly({(6, 0): 8, (5, 0): -108, (4, 0): 3888, (3, 0): 2916})
)


def delta_s(s1, s2):
    """Discriminant-type quantity of the (s1, s2) model."""
    return (s1 ** 3 * 4 + s2 ** 3 * 4 - s1 ** 2 * s2 ** 2
            - s1 * s2 * 18 + 27)


def delta_uv(u, v):
    """Delta(u, v) = u^2 - 4v + 18u - 27; Delta^2 matches delta_s^2."""
    return u * u - v * 4 + u * 18 - 27


def dihedral_invariants(s1, s2):
    """(u, v) = (s1 s2, s1^3 + s2^3); swap- and twist-invariant."""
    if not delta_s(s1, s2):
        raise InvalidCurveError("singular curve: delta_s = 0")
    return (s1 * s2, s1 ** 3 + s2 ** 3)


def uv_to_s1s2(u, v, field=QQ):
    """All (s1, s2) in the field with the given dihedral invariants.

    s1^3, s2^3 are the roots of z^2 - v z + u^3; returns every pair of
    compatible cube roots (possibly none over a non-closed field).
    """
    one = field.one()
    u, v = u * one, v * one
    disc = v * v - (u ** 3) * 4
    try:
        r = sqrt(disc)
    except NonSquareError:
        return []
    half = one / 2
    z_roots = [(v + r) * half, (v - r) * half]
    pairs = []
    for z1 in z_roots:
        z2 = v - z1
        for s1 in cube_roots(z1):
            if s1:
                s2 = u / s1
                if s2 ** 3 == z2:
                    pairs.append((s1, s2))
            else:
                for s2 in cube_roots(z2):
                    pairs.append((s1, s2))
    out = []
    for p in pairs:
        if p not in out and delta_s(*p):
            out.append(p)
    return out


def elliptic_components(s1, s2):
    """Weierstrass coefficient tuples of the two elliptic quotients.

    E1: y^2 = x^3 - s1 x^2 + s2 x - 1 and E2 with (s1, s2) swapped;
    returned as (1, a2, a4, a6) coefficient tuples of the cubic.
    """
    if not delta_s(s1, s2):
        raise InvalidCurveError("singular curve: delta_s = 0")
    one = s1 * 0 + 1
    return ((one, -s1, s2, -one), (one, -s2, s1, -one))


def j_invariants(s1, s2):
    """(j1, j2) of the elliptic components."""
    d = delta_s(s1, s2)
    if not d:
        raise InvalidCurveError("singular curve: delta_s = 0")
    j1 = (s1 * s1 - s2 * 3) ** 3 * (-256) / d
    j2 = (s2 * s2 - s1 * 3) ** 3 * (-256) / d
    return (j1, j2)


def j_quadratic(u, v):
    """(s, t) with j^2 - s j + t = 0 satisfied by both component j's.

    s = 256 A / Delta and t = 65536 B^3 / Delta^2 with
    A = v^2 - 2u^3 + 54u^2 - 9uv - 27v and B = u^2 + 9u - 3v.
    """
    d = delta_uv(u, v)
    if not d:
        raise InvalidCurveError("Delta(u, v) = 0")
    a = A_POLY(u, v)
    b = B_POLY(u, v)
    return (a * 256 / d, b ** 3 * 65536 / (d * d))


def s2_surface(u, v):
    """Splitting quantity S2 = A^2 - 4 B^3; (j1-j2)^2 Delta^2 = 65536 S2.

    The Jacobian is (2,2)-reducible over the base field exactly when
    S2 is a square there.
    """
    a = A_POLY(u, v)
    b = B_POLY(u, v)
    return a * a - b ** 3 * 4


def printed_s2(u, v):
    """The displayed quartic for S2, kept for the validation report."""
    return PRINTED_S2(u, v)


def is_split_over(u, v):
    """Whether both component j-invariants lie in the base field."""
    return is_square(s2_surface(u, v))


def aut_stratum(u, v):
    """Automorphism stratum of the curve with invariants (u, v)."""
    if not delta_uv(u, v):
        raise InvalidCurveError("Delta(u, v) = 0")
    on_d4 = v * v == u ** 3 * 4
    on_d6 = not D6_LINE(u, v)
    if on_d4 and on_d6:
        return "boundary"
    if on_d4:
        return "D4"
    if on_d6:
        return "D6"
    return "V4"


def d4_pair(w):
    """The 2-isogenous j-pair on the D4 stratum, parametrized by w.

    j = 256 w^3/(w+1), j' = -16 (w-15)^3/(w+1)^2; phi_2(j, j') = 0
    identically.
    """
    wp1 = w + 1
    if not wp1:
        raise InvalidCurveError("pole at w = -1")
    j = w ** 3 * 256 / wp1
    jp = (w - 15) ** 3 * (-16) / (wp1 * wp1)
    return (j, jp)


def _locus_factors(N):
    if N == 2:
        return [F1_PRINTED, F2_PRINTED]
    if N == 3:
        return [D6_LINE, G1_PRINTED, G2_PRINTED]
    if N in (5, 7):
        return [isogeny_locus(N)]
    raise ValueError("unsupported level N=%s" % (N,))


def isogeny_locus(N):
    """The eliminated level-N locus polynomial in (u, v)."""
    def compute():
        return eliminate_locus(N, A_POLY * 256, (B_POLY ** 3) * 65536,
                               DELTA_POLY, budget=200000)
    return cached_locus("2", N, compute)


def isogeny_locus_eval(N, u, v):
    """Values of the level-N locus factors at (u, v).

    All factors vanish nowhere off the locus; a zero value certifies
    that the two elliptic components are N-isogenous (when defined).
    """
    if N not in (2, 3, 5, 7):
        raise ValueError("unsupported level N=%s" % (N,))
    return [f(u, v) for f in _locus_factors(N)]


def split2_record(s1, s2):
    """Full JSON-friendly description of the (s1, s2) curve."""
    u, v = dihedral_invariants(s1, s2)
    j1, j2 = j_invariants(s1, s2)
    s, t = j_quadratic(u, v)
    return {
        "s1": s1, "s2": s2, "u": u, "v": v,
        "Delta": delta_uv(u, v), "S2": s2_surface(u, v),
        "stratum": aut_stratum(u, v),
        "j1": j1, "j2": j2,
        "quadratic": {"s": s, "t": t},
    }
