"""Exact polynomial arithmetic: dense univariate, sparse bivariate.

Univariate polynomials carry their coefficient field; bivariate
polynomials are sparse exponent-pair maps whose coefficients are plain
integers (the common case for modular polynomials and loci) or field
elements.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .fields import QQ, FieldError


class PolynomialError(Exception):
    pass


def _field_of(coeffs, field):
    if field is not None:
        return field
    return QQ


class UniPoly:
    """Dense univariate polynomial over a field; trailing zeros stripped."""

    __slots__ = ("field", "coeffs")

    def __init__(self, coeffs, field=None):
        self.field = _field_of(coeffs, field)
        cs = [self.field(c) if isinstance(c, (int, Fraction)) else c for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, field=QQ):
        return cls((), field)

    @classmethod
    def one(cls, field=QQ):
        return cls((1,), field)

    @classmethod
    def x(cls, field=QQ):
        return cls((0, 1), field)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self):
        if not self.coeffs:
            raise PolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.of(0)

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        return UniPoly((other,), self.field)

    def __add__(self, other):
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly([self[i] + o[i] for i in range(n)], self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly([self[i] - o[i] for i in range(n)], self.field)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if self.is_zero() or o.is_zero():
            return UniPoly.zero(self.field)
        out = [self.field.of(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out, self.field)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise PolynomialError("negative polynomial power")
        result = UniPoly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs and self.field == other.field
        return self == self._coerce(other)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __divmod__(self, other):
        o = self._coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = UniPoly.zero(self.field)
        r = self
        inv_lead = self.field.one() / o.lead()
        while not r.is_zero() and r.degree >= o.degree:
            shift = r.degree - o.degree
            c = r.lead() * inv_lead
            term = UniPoly([self.field.of(0)] * shift + [c], self.field)
            q = q + term
            r = r - term * o
        return q, r

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise PolynomialError("division is not exact")
        return q

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        inv = self.field.one() / self.lead()
        return UniPoly([c * inv for c in self.coeffs], self.field)

    def derivative(self) -> "UniPoly":
        return UniPoly(
            [self.coeffs[i] * self.field.of(i) for i in range(1, len(self.coeffs))],
            self.field,
        )

    def __call__(self, x):
        acc = self.field.of(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other: "UniPoly") -> "UniPoly":
        acc = UniPoly.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * other + UniPoly((c,), self.field)
        return acc

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, self._coerce(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def xgcd(self, other: "UniPoly"):
        """Returns (g, s, t) with g = s*self + t*other, g monic (or zero)."""
        F = self.field
        a, b = self, self._coerce(other)
        s0, s1 = UniPoly.one(F), UniPoly.zero(F)
        t0, t1 = UniPoly.zero(F), UniPoly.one(F)
        while not b.is_zero():
            q, r = divmod(a, b)
            a, b = b, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if a.is_zero():
            return a, s0, t0
        inv = F.one() / a.lead()
        unit = UniPoly((inv,), F)
        return a.monic(), s0 * unit, t0 * unit

    def __repr__(self):
        if self.is_zero():
            return "UniPoly(0)"
        terms = [f"{c!r}*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return "UniPoly(" + " + ".join(terms) + ")"


# ---------------------------------------------------------------------------
# resultants / discriminants


def _bareiss_det(m):
    """Fraction-free Bareiss determinant; entries must support exact division
    (field elements, Fractions, or ints)."""
    n = len(m)
    if n == 0:
        return 1
    m = [row[:] for row in m]
    sign = 1
    prev = None
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return m[0][0] * 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                if prev is None:
                    m[i][j] = num
                elif isinstance(num, int):
                    m[i][j] = num // prev
                elif isinstance(num, BiPoly):
                    m[i][j] = num.exact_div(prev)
                else:
                    m[i][j] = num / prev
            m[i][k] = m[i][k] * 0
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def resultant(f: UniPoly, g: UniPoly):
    """Sylvester-matrix resultant (Bareiss elimination, exact)."""
    if f.is_zero() and g.is_zero():
        raise PolynomialError("resultant of two zero polynomials")
    if f.is_zero() or g.is_zero():
        return f.field.of(0)
    m, n = f.degree, g.degree
    if m == 0:
        return f.coeffs[0] ** n
    if n == 0:
        return g.coeffs[0] ** m
    size = m + n
    F = f.field
    rows = []
    fc = [f[m - i] for i in range(m + 1)]  # descending
    gc = [g[n - i] for i in range(n + 1)]
    for i in range(n):
        rows.append([F.of(0)] * i + fc + [F.of(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([F.of(0)] * i + gc + [F.of(0)] * (size - n - 1 - i))
    return _bareiss_det(rows)


def discriminant(f: UniPoly):
    """disc(f) = (-1)^(d(d-1)/2) res(f, f') / lc(f); 0 iff repeated root."""
    d = f.degree
    if d < 1:
        raise PolynomialError("discriminant needs degree >= 1")
    r = resultant(f, f.derivative())
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return f.field.of(sign) * r / f.lead()


# ---------------------------------------------------------------------------
# sparse bivariate polynomials


class BiPoly:
    """Sparse bivariate polynomial: {(i, j): coeff}, zero coeffs dropped.

    Coefficients are plain ints unless constructed otherwise; arithmetic
    is exact either way.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for (i, j), c in (terms.items() if isinstance(terms, dict) else terms):
                if c:
                    key = (int(i), int(j))
                    nc = t.get(key, 0) + c
                    if nc:
                        t[key] = nc
                    elif key in t:
                        del t[key]
        self.terms = t

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.const(other)
        return isinstance(other, BiPoly) and other.terms == self.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            return other
        return BiPoly.const(other)

    def __add__(self, other):
        o = self._coerce(other)
        t = dict(self.terms)
        for k, c in o.terms.items():
            nc = t.get(k, 0) + c
            if nc:
                t[k] = nc
            elif k in t:
                del t[k]
        out = BiPoly()
        out.terms = t
        return out

    __radd__ = __add__

    def __neg__(self):
        out = BiPoly()
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._coerce(other)
        t = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in o.terms.items():
                k = (i1 + i2, j1 + j2)
                nc = t.get(k, 0) + c1 * c2
                if nc:
                    t[k] = nc
                elif k in t:
                    del t[k]
        out = BiPoly()
        out.terms = t
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise PolynomialError("negative polynomial power")
        result = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def degree_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def degree_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def __call__(self, x, y):
        """Exact evaluation; x, y field elements (ints coerced via x's ring)."""
        acc = x * 0
        for (i, j), c in self.terms.items():
            acc = acc + c * x**i * y**j
        return acc

    def eval_x(self, x, field) -> UniPoly:
        """Specialize the first variable, returning a UniPoly in the second."""
        by_j = {}
        for (i, j), c in self.terms.items():
            by_j[j] = by_j.get(j, field.of(0)) + field.of(1) * c * x**i
        if not by_j:
            return UniPoly.zero(field)
        out = [field.of(0)] * (max(by_j) + 1)
        for j, c in by_j.items():
            out[j] = c
        return UniPoly(out, field)

    def swap(self) -> "BiPoly":
        out = BiPoly()
        out.terms = {(j, i): c for (i, j), c in self.terms.items()}
        return out

    def is_symmetric(self) -> bool:
        return self.swap() == self

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, c)
        return g

    def primitive_part(self) -> "BiPoly":
        g = self.content()
        if g <= 1:
            return self
        out = BiPoly()
        out.terms = {k: c // g for k, c in self.terms.items()}
        return out

    def strip_monomial(self) -> "BiPoly":
        """Divide out the largest common monomial x^a y^b."""
        if not self.terms:
            return self
        a = min(i for i, _ in self.terms)
        b = min(j for _, j in self.terms)
        if a == 0 and b == 0:
            return self
        out = BiPoly()
        out.terms = {(i - a, j - b): c for (i, j), c in self.terms.items()}
        return out

    def map_coeffs(self, fn) -> "BiPoly":
        return BiPoly({k: fn(c) for k, c in self.terms.items()})

    def reduce_mod(self, n: int) -> "BiPoly":
        return BiPoly({k: c % n for k, c in self.terms.items()})

    # -- division --------------------------------------------------------

    def as_y_coeffs(self):
        """Coefficients in y: dict {j: BiPoly in x only}."""
        out = {}
        for (i, j), c in self.terms.items():
            out.setdefault(j, {})[(i, 0)] = c
        return {j: BiPoly(t) for j, t in out.items()}

    def divmod_y(self, other: "BiPoly"):
        """Division viewing both as polynomials in y over Q[x]; exact steps
        enforced (raises if a coefficient division is not exact over Z[x])."""
        if other.is_zero():
            raise ZeroDivisionError("BiPoly division by zero")
        dy = other.degree_y()
        lead = BiPoly(
            {(i, 0): c for (i, j), c in other.terms.items() if j == dy}
        )
        q = BiPoly.zero()
        r = self
        while not r.is_zero() and r.degree_y() >= dy:
            ry = r.degree_y()
            rlead = BiPoly({(i, 0): c for (i, j), c in r.terms.items() if j == ry})
            qc = _xpoly_exact_div(rlead, lead)
            if qc is None:
                return None, None
            term = qc * BiPoly({(0, ry - dy): 1})
            q = q + term
            r = r - term * other
        return q, r

    def exact_div(self, other: "BiPoly") -> "BiPoly":
        if isinstance(other, int):
            other = BiPoly.const(other)
        q, r = self.divmod_y(other)
        if q is None or (r is not None and not r.is_zero()):
            raise PolynomialError("BiPoly division is not exact")
        return q

    def divides(self, other: "BiPoly") -> bool:
        try:
            other.exact_div(self)
            return True
        except PolynomialError:
            return False

    def __repr__(self):
        if not self.terms:
            return "BiPoly(0)"
        parts = [
            f"{c}*x^{i}*y^{j}"
            for (i, j), c in sorted(self.terms.items(), reverse=True)
        ]
        head = " + ".join(parts[:8])
        if len(parts) > 8:
            head += f" + ... ({len(parts)} terms)"
        return f"BiPoly({head})"


def _xpoly_exact_div(num: BiPoly, den: BiPoly):
    """Exact division of polynomials in x alone; None if not exact."""
    if den.is_zero():
        raise ZeroDivisionError
    dn = den.degree_x()
    dlead = den.terms.get((dn, 0), 0)
    q = {}
    r = dict(num.terms)
    while r:
        rd = max(i for i, _ in r)
        rc = r.get((rd, 0), 0)
        if rd < dn:
            return None
        if isinstance(rc, int) and isinstance(dlead, int):
            if rc % dlead != 0:
                return None
            qc = rc // dlead
        else:
            qc = rc / dlead
        q[(rd - dn, 0)] = qc
        for (i, _), c in den.terms.items():
            k = (i + rd - dn, 0)
            nc = r.get(k, 0) - qc * c
            if nc:
                r[k] = nc
            elif k in r:
                del r[k]
    return BiPoly(q)


def resultant_bivar_y(F: BiPoly, G: BiPoly) -> BiPoly:
    """Resultant of F, G eliminating y; integer-coefficient inputs."""
    fy, gy = F.as_y_coeffs(), G.as_y_coeffs()
    m = F.degree_y()
    n = G.degree_y()
    if m < 0 and n < 0:
        raise PolynomialError("resultant of two zero polynomials")
    if m <= 0 or n <= 0:
        raise PolynomialError("resultant needs positive y-degree on both sides")
    size = m + n
    zero = BiPoly.zero()
    fc = [fy.get(m - i, zero) for i in range(m + 1)]
    gc = [gy.get(n - i, zero) for i in range(n + 1)]
    rows = []
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    det = _bareiss_det(rows)
    return det if isinstance(det, BiPoly) else BiPoly.const(det)
