"""Classical invariants of binary sextics and weighted-equality tests.

Igusa-Clebsch invariants are computed through transvectants of the
sextic; the integer combinations below were calibrated once against the
root-symmetric definitions (sums over root pairings/splittings) and
verified on held-out random sextics, so I2..I10 follow the classical
normalization in which I10 is the discriminant-type product
a6^10 * prod (x_i - x_j)^2.
"""

from math import comb, factorial

from ..exactmath import FieldError
from .curve import Genus2Curve, InvalidCurveError


def _transvectant(f, m, g, n, r, field):
    """r-th transvectant of binary forms of orders m and n.

    Forms are coefficient lists c[i] of x^i y^(order-i).
    """
    def dx(h, o):
        return [h[i + 1] * (i + 1) for i in range(o)]

    def dy(h, o):
        return [h[i] * (o - i) for i in range(o)]

    def part(h, o, kx, ky):
        for _ in range(kx):
            h = dx(h, o)
            o -= 1
        for _ in range(ky):
            h = dy(h, o)
            o -= 1
        return h

    num = factorial(m - r) * factorial(n - r)
    den = factorial(m) * factorial(n)
    scale = field.of(num) / field.of(den)
    out = [field.of(0)] * (m + n - 2 * r + 1)
    for k in range(r + 1):
        df = part(f, m, r - k, k)
        dg = part(g, n, k, r - k)
        c = scale * ((-1) ** k * comb(r, k))
        for i, a in enumerate(df):
            for j, b in enumerate(dg):
                out[i + j] = out[i + j] + c * a * b
    return out


class IgusaClebsch:
    """(I2, I4, I6, I10) with weights (2, 4, 6, 10)."""

    weights = (2, 4, 6, 10)

    def __init__(self, i2, i4, i6, i10):
        self.i2, self.i4, self.i6, self.i10 = i2, i4, i6, i10

    def astuple(self):
        return (self.i2, self.i4, self.i6, self.i10)

    def __eq__(self, other):
        return isinstance(other, IgusaClebsch) and self.astuple() == other.astuple()

    def __repr__(self):
        return "IgusaClebsch%r" % (self.astuple(),)


class IgusaJ:
    """(J2, J4, J6, J10) with weights (2, 4, 6, 10)."""

    weights = (2, 4, 6, 10)

    def __init__(self, j2, j4, j6, j10):
        self.j2, self.j4, self.j6, self.j10 = j2, j4, j6, j10

    def astuple(self):
        return (self.j2, self.j4, self.j6, self.j10)

    def __eq__(self, other):
        return isinstance(other, IgusaJ) and self.astuple() == other.astuple()

    def __repr__(self):
        return "IgusaJ%r" % (self.astuple(),)


def igusa_clebsch(curve: Genus2Curve) -> IgusaClebsch:
    field = curve.field
    if field.char in (2, 3, 5):
        raise FieldError("Igusa-Clebsch invariants need characteristic not in {2,3,5}")
    f = list(curve.coeffs)
    a = _transvectant(f, 6, f, 6, 6, field)[0]
    i4 = _transvectant(f, 6, f, 6, 4, field)
    b = _transvectant(i4, 4, i4, 4, 4, field)[0]
    d4 = _transvectant(i4, 4, i4, 4, 2, field)
    c = _transvectant(i4, 4, d4, 4, 4, field)[0]
    y1 = _transvectant(f, 6, i4, 4, 4, field)
    y2 = _transvectant(i4, 4, y1, 2, 2, field)
    y3 = _transvectant(i4, 4, y2, 2, 2, field)
    d = _transvectant(y3, 2, y1, 2, 2, field)[0]
    i2 = a * (-120)
    i4v = a * a * (-720) + b * 6750
    i6v = a * a * a * 8640 - a * b * 108000 + c * 202500
    i10 = (a ** 2 * (a ** 3 * (-62208) + a * b * 972000 + c * 1620000)
           + b * (a * b * (-3037500) + c * (-6075000))
           + d * (-4556250))
    if not i10:
        raise InvalidCurveError("I10 = 0: singular sextic")
    return IgusaClebsch(i2, i4v, i6v, i10)


def ic_to_j(ic: IgusaClebsch) -> IgusaJ:
    """Convert Igusa-Clebsch I's to Igusa J's (char not 2, 3)."""
    one = ic.i10 / ic.i10
    j2 = ic.i2 * (one / 8)
    j4 = (j2 * j2 * 4 - ic.i4) * (one / 96)
    j6 = (j2 ** 3 * 8 - j2 * j4 * 160 - ic.i6) * (one / 576)
    j10 = ic.i10 * (one / 4096)
    return IgusaJ(j2, j4, j6, j10)


def j_to_ic(j: IgusaJ) -> IgusaClebsch:
    """Convert Igusa J's back to Igusa-Clebsch I's (inverse of ic_to_j)."""
    i2 = j.j2 * 8
    i4 = j.j2 * j.j2 * 4 - j.j4 * 96
    i6 = j.j2 ** 3 * 8 - j.j2 * j.j4 * 160 - j.j6 * 576
    i10 = j.j10 * 4096
    return IgusaClebsch(i2, i4, i6, i10)


def igusa_j(curve: Genus2Curve) -> IgusaJ:
    return ic_to_j(igusa_clebsch(curve))


def weighted_match(a, b, weights):
    """True iff b = (lambda^w_i * a_i) for some lambda in the closure.

    Exact pairwise cross-ratio test: zero patterns must agree and
    a_i^w_j * b_j^w_i = a_j^w_i * b_i^w_j for every nonzero pair.
    """
    pairs = list(zip(a, b, weights))
    for (x, y, _) in pairs:
        if bool(x) != bool(y):
            return False
    nz = [(x, y, w) for x, y, w in pairs if x]
    for i in range(len(nz)):
        x1, y1, w1 = nz[i]
        for j in range(i + 1, len(nz)):
            x2, y2, w2 = nz[j]
            if x1 ** w2 * y2 ** w1 != x2 ** w1 * y1 ** w2:
                return False
    return True


def weighted_equal(a: IgusaJ, b: IgusaJ) -> bool:
    """Isomorphism-class test: some lambda scales one J-tuple to the other."""
    if not a.j10 or not b.j10:
        raise InvalidCurveError("weighted_equal needs J10 != 0 on both sides")
    return weighted_match(a.astuple(), b.astuple(), IgusaJ.weights)


def j_invariant_cubic(c3, c2, c1, c0):
    """j-invariant of y^2 = c3 x^3 + c2 x^2 + c1 x + c0 (c3 != 0)."""
    if not c3:
        raise ValueError("leading coefficient vanishes")
    # rescale to a monic model y^2 = x^3 + c2 x^2 + c1 c3 x + c0 c3^2
    a2, a4, a6 = c2, c1 * c3, c0 * c3 * c3
    b2 = a2 * 4
    b4 = a4 * 2
    b6 = a6 * 4
    c4 = b2 * b2 - b4 * 24
    c6 = -(b2 ** 3) + b2 * b4 * 36 - b6 * 216
    disc_1728 = c4 ** 3 - c6 ** 2  # 1728 * discriminant
    if not disc_1728:
        raise ValueError("singular cubic")
    return c4 ** 3 * 1728 / disc_1728
