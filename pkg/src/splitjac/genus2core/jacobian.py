"""Mumford representation and divisor arithmetic on genus-2 Jacobians.

Divisors are pairs (u, v) with u monic of degree <= 2, deg v < deg u,
and u | v^2 - f.  Addition is composition-and-reduction; for two
coprime weight-2 divisors on a degree-5 model there is also a direct
geometric routine that interpolates the cubic through the four points
and is checked against the general one in the tests.
"""

from ..exactmath import UniPoly
from .curve import Genus2Curve, InvalidCurveError


class InvalidDivisorError(Exception):
    pass


class MumfordDivisor:
    """Reduced divisor (u, v) on Jac(C), u monic, deg v < deg u <= 2."""

    def __init__(self, curve: Genus2Curve, u: UniPoly, v: UniPoly):
        field = curve.field
        if u.is_zero() or u.degree > 2:
            raise InvalidDivisorError("u must be nonzero of degree <= 2")
        u = u.monic()
        if not v.is_zero() and v.degree >= max(u.degree, 1):
            v = v % u
        if not (v * v - curve.f) % u == UniPoly([], field):
            raise InvalidDivisorError("u does not divide v^2 - f")
        self.curve = curve
        self.u = u
        self.v = v

    @classmethod
    def identity(cls, curve: Genus2Curve):
        field = curve.field
        return cls(curve, UniPoly([field.of(1)], field), UniPoly([], field))

    @classmethod
    def from_point(cls, curve: Genus2Curve, x, y):
        """Divisor (P) - (infty) for the affine point P = (x, y)."""
        field = curve.field
        if curve.f(x) != y * y:
            raise InvalidDivisorError("point not on curve")
        return cls(curve, UniPoly([-x, field.of(1)], field), UniPoly([y], field))

    def is_identity(self):
        return self.u.degree == 0

    def __eq__(self, other):
        return (isinstance(other, MumfordDivisor) and self.curve == other.curve
                and self.u == other.u and self.v == other.v)

    def __hash__(self):
        return hash((tuple(self.u.coeffs), tuple(self.v.coeffs)))

    def __repr__(self):
        return "MumfordDivisor(u=%r, v=%r)" % (self.u, self.v)

    def __neg__(self):
        return MumfordDivisor(self.curve, self.u, -self.v)

    def __add__(self, other):
        return cantor_add(self, other)

    def __sub__(self, other):
        return cantor_add(self, -other)

    def __mul__(self, n):
        return scalar_mul(self, n)

    __rmul__ = __mul__

    def order(self, bound=None):
        """Order of the divisor class; bound caps the search if given."""
        acc = self
        n = 1
        while not acc.is_identity():
            acc = acc + self
            n += 1
            if bound is not None and n > bound:
                raise InvalidDivisorError("order exceeds bound %d" % bound)
        return n


def cantor_add(d1: MumfordDivisor, d2: MumfordDivisor) -> MumfordDivisor:
    """General composition-and-reduction addition."""
    if d1.curve != d2.curve:
        raise InvalidDivisorError("divisors on different curves")
    curve = d1.curve
    field = curve.field
    f = curve.f
    u1, v1, u2, v2 = d1.u, d1.v, d2.u, d2.v

    d0, e1, e2 = u1.xgcd(u2)
    d, c1, c2 = d0.xgcd(v1 + v2)
    # d = c1*(e1*u1 + e2*u2) + c2*(v1 + v2)
    u = (u1 * u2).exact_div(d * d)
    v = ((c1 * e1) * u1 * v2 + (c1 * e2) * u2 * v1 + c2 * (v1 * v2 + f)).exact_div(d)
    v = v % u
    # reduction
    while u.degree > 2:
        u = (f - v * v).exact_div(u)
        v = (-v) % u
    u = u.monic()
    if u.degree == 0:
        v = UniPoly([], field)
    return MumfordDivisor(curve, u, v)


def geometric_add(d1: MumfordDivisor, d2: MumfordDivisor) -> MumfordDivisor:
    """Chord construction for coprime weight-2 divisors on a degree-5 model.

    Interpolates the unique cubic g with g = v1 mod u1, g = v2 mod u2;
    the residual intersection of y = g(x) with the curve is the
    negative of the sum.
    """
    curve = d1.curve
    if curve != d2.curve:
        raise InvalidDivisorError("divisors on different curves")
    if curve.degree != 5:
        raise InvalidDivisorError("geometric addition needs a degree-5 model")
    if d1.u.degree != 2 or d2.u.degree != 2:
        raise InvalidDivisorError("geometric addition needs weight-2 divisors")
    u1, v1, u2, v2 = d1.u, d1.v, d2.u, d2.v
    d, inv_u1, _ = u1.xgcd(u2)
    if d.degree != 0:
        raise InvalidDivisorError("geometric addition needs coprime u-polynomials")
    f = curve.f
    # CRT: g = v1 + u1 * ((v2 - v1) * u1^{-1} mod u2), deg g <= 3
    g = v1 + u1 * (((v2 - v1) * inv_u1) % u2)
    num = g * g - f  # vanishes at the four source points; degree 6
    u3 = num.exact_div(u1 * u2)
    if u3.degree == 0:
        return MumfordDivisor.identity(curve)
    u3 = u3.monic()
    v3 = (-g) % u3
    return MumfordDivisor(curve, u3, v3)


def scalar_mul(d: MumfordDivisor, n: int) -> MumfordDivisor:
    if n < 0:
        return scalar_mul(-d, -n)
    acc = MumfordDivisor.identity(d.curve)
    add = d
    while n:
        if n & 1:
            acc = cantor_add(acc, add)
        n >>= 1
        if n:
            add = cantor_add(add, add)
    return acc
