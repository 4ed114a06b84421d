"""Point counts, L-polynomials, and Tate-style isogeny tests.

Counting is exhaustive over the base field (with a resource guard), so
everything downstream — Frobenius trace coefficients, Jacobian order,
the Hasse-Weil sanity interval — is exact.
"""

from math import isqrt

from ..exactmath import PrimeField, QuadExtField, UniPoly, quad_ext

COUNT_LIMIT = 10 ** 6  # largest field order we will enumerate exhaustively


class ResourceLimitError(Exception):
    pass


def _field_order(field):
    if isinstance(field, QuadExtField):
        return field.p ** 2
    if isinstance(field, PrimeField):
        return field.p
    raise TypeError("point counting needs a finite field")


def _extension(field):
    """The quadratic extension of a finite field (prime fields only)."""
    if isinstance(field, PrimeField):
        return quad_ext(field.p)
    raise ResourceLimitError("counting over the quadratic extension of F_p^2 "
                             "is not supported")


def count_points(f: UniPoly, field) -> int:
    """Number of projective points on y^2 = f(x) over the given field."""
    squares = set()
    for x in field.elements():
        squares.add(x * x)
    lead = f[f.degree] if not f.is_zero() else field.of(0)
    total = 0
    zero = field.of(0)
    for x in field.elements():
        y2 = f(x)
        if y2 == zero:
            total += 1
        elif y2 in squares:
            total += 2
    if f.degree % 2 == 1:
        total += 1  # one point at infinity on the odd-degree model
    elif lead in squares:
        total += 2
    return total


def _counts(curve, powers):
    """#C(F_{q^k}) for k in powers (currently k in {1, 2})."""
    field = curve.field
    q = _field_order(field)
    out = {}
    for k in powers:
        if k == 1:
            fld, f = field, curve.f
        else:
            fld = _extension(field)
            f = UniPoly([fld.of(int(c)) for c in curve.f.coeffs], fld)
        qk = _field_order(fld)
        if qk > COUNT_LIMIT:
            raise ResourceLimitError(
                "field of order %d exceeds the exhaustive-count limit" % qk)
        out[k] = count_points(f, fld)
    return out


def lpoly_genus1(q: int, n1: int):
    """L-polynomial q t^2 + c1 t + 1 of an elliptic curve with n1 points."""
    c1 = n1 - (q + 1)
    if c1 * c1 > 4 * q:
        raise ValueError("trace violates the Hasse bound")
    return [1, c1, q]


def lpoly(curve):
    """L-polynomial coefficients [1, c1, c2, q*c1, q^2] of a genus-2 curve.

    L(t) = q^2 t^4 + q c1 t^3 + c2 t^2 + c1 t + 1, recovered from the
    point counts over F_q and F_{q^2}.
    """
    field = curve.field
    q = _field_order(field)
    counts = _counts(curve, (1, 2))
    c1 = counts[1] - (q + 1)
    twice_c2 = counts[2] - (q * q + 1) + c1 * c1
    if twice_c2 % 2:
        raise ArithmeticError("inconsistent point counts")
    c2 = twice_c2 // 2
    coeffs = [1, c1, c2, q * c1, q * q]
    _check_weil(coeffs, q)
    return coeffs


def _check_weil(coeffs, q):
    """Hasse-Weil sanity: trace bound and (sqrt q -+ 1)^4 order interval."""
    c1 = coeffs[1]
    if c1 * c1 > 16 * q:
        raise ArithmeticError("Frobenius trace violates the Weil bound")
    order = sum(coeffs)
    # (sqrt q - 1)^4 <= order <= (sqrt q + 1)^4, checked without rounding:
    # both bounds are (q^2 + 6q + 1) -+ 4 sqrt(q) (q + 1).
    mid = q * q + 6 * q + 1
    gap = order - mid
    if gap * gap > 16 * q * (q + 1) ** 2 or order <= 0:
        raise ArithmeticError("Jacobian order violates the Weil interval")


def jacobian_order(curve) -> int:
    """#Jac(C)(F_q) = L(1)."""
    return sum(lpoly(curve))


def lpoly_elliptic(a, b, field):
    """L-polynomial of y^2 = x^3 + a x + b over a finite field."""
    q = _field_order(field)
    if q > COUNT_LIMIT:
        raise ResourceLimitError(
            "field of order %d exceeds the exhaustive-count limit" % q)
    f = UniPoly([b, a, field.of(0), field.of(1)], field)
    return lpoly_genus1(q, count_points(f, field))


def tate_isogenous(l1, l2) -> bool:
    """Isogeny test for abelian varieties by L-polynomial divisibility.

    Equal dimension: equality of L-polynomials.  Otherwise the smaller
    L-polynomial must divide the larger (split factor of the Jacobian).
    """
    if len(l1) == len(l2):
        return l1 == l2
    small, big = sorted((l1, l2), key=len)
    # integer polynomial division: small must divide big exactly
    rem = list(big)
    quo_deg = len(big) - len(small)
    for i in range(quo_deg, -1, -1):
        lead = rem[i + len(small) - 1]
        if lead % small[-1]:
            return False
        q = lead // small[-1]
        for j, c in enumerate(small):
            rem[i + j] -= q * c
    return all(c == 0 for c in rem)
