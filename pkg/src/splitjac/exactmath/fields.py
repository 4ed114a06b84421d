"""Exact field arithmetic: rationals, prime fields, quadratic extensions.

Every value is immutable.  Rationals are plain ``fractions.Fraction``
(always reduced, positive denominator); prime-field and extension
elements are small wrapper classes that overload the usual operators so
the polynomial layer can stay generic.  No floating point anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction


class FieldError(Exception):
    """Invalid field construction or operation."""


class NonSquareError(FieldError):
    """Square root of a non-square; carries the Euler-criterion witness."""

    def __init__(self, element, witness=None):
        self.element = element
        self.witness = witness
        super().__init__(f"{element!r} is not a square (witness: {witness!r})")


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field Q.  Elements are ``fractions.Fraction``."""

    char = 0

    def __call__(self, a, b=None):
        return Fraction(a) if b is None else Fraction(a, b)

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def of(self, n: int):
        return Fraction(n)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class FpElem:
    """Residue in [0, p) of the prime field F_p."""

    __slots__ = ("field", "val")

    def __init__(self, field: "PrimeField", val: int):
        self.field = field
        self.val = val % field.p

    def _coerce(self, other):
        if isinstance(other, FpElem):
            if other.field.p != self.field.p:
                raise FieldError("mixed prime fields")
            return other
        if isinstance(other, int):
            return FpElem(self.field, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElem(self.field, self.val + o.val)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElem(self.field, self.val - o.val)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElem(self.field, self.val * o.val)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.val == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return FpElem(self.field, pow(self.val, n, self.field.p))

    def __neg__(self):
        return FpElem(self.field, -self.val)

    def inverse(self):
        if self.val == 0:
            raise ZeroDivisionError("inverse of zero in F_p")
        return FpElem(self.field, pow(self.val, -1, self.field.p))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.val == other % self.field.p
        return (
            isinstance(other, FpElem)
            and other.field.p == self.field.p
            and other.val == self.val
        )

    def __hash__(self):
        return hash((self.field.p, self.val))

    def __bool__(self):
        return self.val != 0

    def __int__(self):
        return self.val

    def __repr__(self):
        return f"{self.val} (mod {self.field.p})"


class PrimeField:
    """F_p for an odd prime p."""

    char_positive = True

    def __init__(self, p: int):
        if p < 3 or p % 2 == 0 or not _is_probable_prime(p):
            raise FieldError(f"modulus must be an odd prime, got {p}")
        self.p = p
        self.char = p

    def __call__(self, a):
        if isinstance(a, FpElem):
            if a.field.p != self.p:
                raise FieldError("mixed prime fields")
            return a
        if isinstance(a, Fraction):
            return FpElem(self, a.numerator) / FpElem(self, a.denominator)
        return FpElem(self, a)

    def zero(self):
        return FpElem(self, 0)

    def one(self):
        return FpElem(self, 1)

    def of(self, n: int):
        return FpElem(self, n)

    def elements(self):
        for v in range(self.p):
            yield FpElem(self, v)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class QuadExtElem:
    """a + b*w in F_p(w) with w^2 = d (d = -1 in the i-extension)."""

    __slots__ = ("field", "re", "im")

    def __init__(self, field: "QuadExtField", re, im):
        self.field = field
        self.re = field.base(re)
        self.im = field.base(im)

    def _coerce(self, other):
        if isinstance(other, QuadExtElem):
            if other.field != self.field:
                raise FieldError("mixed extension fields")
            return other
        if isinstance(other, (int, FpElem)):
            return QuadExtElem(self.field, other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExtElem(self.field, self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExtElem(self.field, self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self.field.d
        return QuadExtElem(
            self.field,
            self.re * o.re + d * (self.im * o.im),
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __neg__(self):
        return QuadExtElem(self.field, -self.re, -self.im)

    def conjugate(self):
        return QuadExtElem(self.field, self.re, -self.im)

    def norm(self) -> FpElem:
        # N(a + bw) = a^2 - d b^2, an element of F_p
        return self.re * self.re - self.field.d * (self.im * self.im)

    def inverse(self):
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero in F_p^2")
        ninv = n.inverse()
        return QuadExtElem(self.field, self.re * ninv, -self.im * ninv)

    def __eq__(self, other):
        if isinstance(other, (int, FpElem)):
            return self.im.val == 0 and self.re == other
        return (
            isinstance(other, QuadExtElem)
            and other.field == self.field
            and other.re == self.re
            and other.im == self.im
        )

    def __hash__(self):
        return hash((self.field.p, self.field.d.val, self.re.val, self.im.val))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"({self.re.val} + {self.im.val}*w) (mod {self.field.p})"


class QuadExtField:
    """F_{p^2} = F_p(w), w^2 = d with d a non-residue mod p.

    ``QuadExtField(p)`` builds the i-extension (d = -1) and requires
    p = 3 mod 4; pass an explicit non-residue d for other primes.
    """

    def __init__(self, p: int, d: int | None = None):
        self.base = PrimeField(p)
        self.p = p
        if d is None:
            if p % 4 != 3:
                raise FieldError(
                    f"F_p(i) needs p = 3 mod 4 (got p = {p}); pass an explicit non-residue"
                )
            d = -1
        dd = self.base(d)
        if not dd or pow(dd.val, (p - 1) // 2, p) != p - 1:
            raise FieldError(f"{d} is not a non-residue mod {p}")
        self.d = dd
        self.char = p

    def __call__(self, re, im=0):
        if isinstance(re, QuadExtElem):
            if re.field != self:
                raise FieldError("mixed extension fields")
            return re
        return QuadExtElem(self, re, im)

    def zero(self):
        return QuadExtElem(self, 0, 0)

    def one(self):
        return QuadExtElem(self, 1, 0)

    def of(self, n: int):
        return QuadExtElem(self, n, 0)

    def order(self) -> int:
        return self.p * self.p

    def elements(self):
        for a in range(self.p):
            for b in range(self.p):
                yield QuadExtElem(self, a, b)

    def __eq__(self, other):
        return (
            isinstance(other, QuadExtField)
            and other.p == self.p
            and other.d == self.d
        )

    def __hash__(self):
        return hash(("Fp2", self.p, self.d.val))

    def __repr__(self):
        return f"GF({self.p}^2, w^2={self.d.val})"


def quad_ext(p: int) -> QuadExtField:
    """F_{p^2} for any odd p: F_p(i) when p = 3 mod 4, else smallest non-residue."""
    if p % 4 == 3:
        return QuadExtField(p)
    for d in range(2, p):
        if pow(d, (p - 1) // 2, p) == p - 1:
            return QuadExtField(p, d)
    raise FieldError(f"no quadratic non-residue mod {p}")  # pragma: no cover


# ---------------------------------------------------------------------------
# squares and square roots


def is_square(a) -> bool:
    """Exact square test over Q, F_p, or F_{p^2}."""
    if isinstance(a, (int, Fraction)):
        a = Fraction(a)
        if a < 0:
            return False
        n, d = a.numerator, a.denominator
        return math.isqrt(n) ** 2 == n and math.isqrt(d) ** 2 == d
    if isinstance(a, FpElem):
        if a.val == 0:
            return True
        return pow(a.val, (a.field.p - 1) // 2, a.field.p) == 1
    if isinstance(a, QuadExtElem):
        if not a:
            return True
        # a is a square iff a^((p^2-1)/2) = 1, iff its norm is a square in F_p
        p = a.field.p
        return (a ** ((p * p - 1) // 2)) == 1
    raise TypeError(f"unsupported element {a!r}")


def _sqrt_mod_p(a: FpElem) -> FpElem:
    p = a.field.p
    if a.val == 0:
        return a
    euler = pow(a.val, (p - 1) // 2, p)
    if euler != 1:
        raise NonSquareError(a, witness=euler)
    if p % 4 == 3:
        return FpElem(a.field, pow(a.val, (p + 1) // 4, p))
    # Tonelli-Shanks for p = 1 mod 4
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c = s, pow(z, q, p)
    t, r = pow(a.val, q, p), pow(a.val, (q + 1) // 2, p)
    while t != 1:
        t2, i = t * t % p, 1
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        r, t = r * b % p, t * b * b % p
    return FpElem(a.field, r)


def sqrt(a):
    """Square root where one exists; raises NonSquareError otherwise."""
    if isinstance(a, (int, Fraction)):
        a = Fraction(a)
        if not is_square(a):
            raise NonSquareError(a)
        return Fraction(math.isqrt(a.numerator), math.isqrt(a.denominator))
    if isinstance(a, FpElem):
        return _sqrt_mod_p(a)
    if isinstance(a, QuadExtElem):
        return _sqrt_quad_ext(a)
    raise TypeError(f"unsupported element {a!r}")


def _sqrt_quad_ext(a: QuadExtElem) -> QuadExtElem:
    """Norm-then-lift square root in F_{p^2}."""
    F = a.field
    if not a:
        return a
    if not is_square(a):
        raise NonSquareError(a)
    if not a.im:
        # sqrt of a base-field element: either in F_p or purely imaginary
        if is_square(a.re):
            return QuadExtElem(F, _sqrt_mod_p(a.re), 0)
        # a.re = d * (a.re/d) with a.re/d a square
        s = _sqrt_mod_p(a.re / F.d)
        return QuadExtElem(F, 0, s)
    # x = u + vw with u = (re + sqrt(norm-of-candidate)) / 2 style lift:
    # solve u^2 = (re + n)/2 where n^2 = re^2 - d*im^2 = N(a)
    n = _sqrt_mod_p(a.norm())
    two_inv = F.base(2).inverse()
    for cand_n in (n, -n):
        u2 = (a.re + cand_n) * two_inv
        if is_square(u2):
            u = _sqrt_mod_p(u2)
            if u:
                v = a.im * two_inv / u
                root = QuadExtElem(F, u, v)
                if root * root == a:
                    return root
    raise NonSquareError(a)  # pragma: no cover


def cube_roots(a):
    """All cube roots of a in its field (list; may be empty over Q/F_p)."""
    if isinstance(a, (int, Fraction)):
        a = Fraction(a)
        sign = -1 if a < 0 else 1
        n, d = abs(a.numerator), a.denominator
        rn, rd = _icbrt(n), _icbrt(d)
        if rn**3 == n and rd**3 == d:
            return [Fraction(sign * rn, rd)]
        return []
    if isinstance(a, FpElem):
        p = a.field.p
        if a.val == 0:
            return [a]
        if p % 3 == 2:
            # cubing is a bijection
            return [a ** ((2 * p - 1) // 3)]
        if pow(a.val, (p - 1) // 3, p) != 1:
            return []
        # p = 1 mod 3: find one root by search (desk-scale p), then multiply
        # by the cube roots of unity
        root = None
        for x in range(1, p):
            if pow(x, 3, p) == a.val:
                root = FpElem(a.field, x)
                break
        if root is None:  # pragma: no cover
            return []
        omega = None
        for x in range(2, p):
            if pow(x, 3, p) == 1 and x != 1:
                omega = FpElem(a.field, x)
                break
        return [root, root * omega, root * omega * omega]
    raise TypeError(f"unsupported element {a!r}")


def _icbrt(n: int) -> int:
    if n == 0:
        return 0
    x = int(round(n ** (1 / 3))) + 2
    while x**3 > n:
        x -= 1
    return x
