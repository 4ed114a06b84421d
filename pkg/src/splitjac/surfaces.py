"""Shioda-Inose quartics, the Kummer affine pencil, and the Inose pencil.

The Shioda-Inose surface of a genus-2 Jacobian is a quartic in P^3 whose
four parameters (alpha, beta, gamma, delta) are polynomial expressions in
the Igusa-Clebsch invariants.  For the two split families those
parameters also have closed forms directly in the family invariants
(u, v) and (chi, psi).
"""

from .genus2core.invariants import IgusaClebsch, weighted_match


class SurfaceError(Exception):
    pass


class ShiodaInoseParams:
    """The (alpha, beta, gamma, delta) parameters of the quartic model.

    Under rescaling of the underlying sextic the tuple scales with
    weights (4, 6, 10, 12), so only weight-0 combinations are
    model-independent.
    """

    weights = (4, 6, 10, 12)

    def __init__(self, alpha, beta, gamma, delta):
        self.alpha, self.beta = alpha, beta
        self.gamma, self.delta = gamma, delta

    def astuple(self):
        return (self.alpha, self.beta, self.gamma, self.delta)

    def __eq__(self, other):
        return self.astuple() == other.astuple()

    def __repr__(self):
        return "ShiodaInoseParams%r" % (self.astuple(),)


def si_weighted_match(a, b):
    """True iff the two parameter tuples agree up to weighted scaling."""
    return weighted_match(a.astuple(), b.astuple(), ShiodaInoseParams.weights)


def si_from_igusa_clebsch(ic):
    """(alpha, beta, gamma, delta) = (I4/4, I2 I4/8 - 3 I6/8,
    -243 I10/4, 243 I2 I10/32)."""
    if isinstance(ic, IgusaClebsch):
        i2, i4, i6, i10 = ic.astuple()
    else:
        i2, i4, i6, i10 = ic
    if not i10:
        raise SurfaceError("singular curve: I10 = 0")
    one = i10 / i10
    q = lambda a, b: one * a / b
    return ShiodaInoseParams(
        i4 * q(1, 4),
        i2 * i4 * q(1, 8) - i6 * q(3, 8),
        i10 * q(-243, 4),
        i2 * i10 * q(243, 32),
    )


def si_from_uv(u, v):
    """Closed-form parameters on the (2,2)-split family in the dihedral
    invariants (u, v)."""
    one = u * 0 + 1
    u, v = u * one, v * one
    alpha = u * u - u * 126 + v * 12 + one * 405
    beta = (-u ** 3 - u * u * 729 + u * v * 36 - u * 4131
            + v * 1404 + one * 3645)
    core = u * u + u * 18 - v * 4 - 27
    gamma = core * core * (-3888)
    delta = (u + 15) * core * core * 7776
    return ShiodaInoseParams(alpha, beta, gamma, delta)


def si_from_chipsi(chi, psi):
    """Closed-form parameters on the (3,3)-split family in (chi, psi)."""
    one = chi * 0 + 1
    chi, psi = chi * one, psi * one
    if not chi or not psi:
        raise SurfaceError("pole: chi*psi = 0")
    q = lambda a, b: one * a / (one * b)
    blk = (chi ** 5 + chi ** 4 * psi * 192 + chi ** 3 * psi ** 2 * 13824
           + chi ** 2 * psi ** 3 * 442368 + chi * psi ** 4 * 5308416
           + chi * psi ** 3 * 786432 + psi ** 4 * 9437184)
    quad = chi * chi + chi * psi * 96 - psi * psi * 1152
    alpha = chi * blk * q(1, 256)
    beta = chi * chi * quad * blk * q(1, 512)
    gsum = (chi ** 8 * 3 + chi ** 7 * psi * 864 + chi ** 6 * psi ** 2 * 94464
            + chi ** 5 * psi ** 3 * 4866048
            + chi ** 4 * psi ** 4 * 111476736
            + chi ** 3 * psi ** 5 * 509607936
            - chi ** 2 * psi ** 6 * 12230590464
            + chi ** 4 * psi ** 3 * 1310720
            + chi ** 3 * psi ** 4 * 155713536
            - chi ** 2 * psi ** 5 * 1358954496
            - chi * psi ** 6 * 18119393280
            + psi ** 6 * 4831838208)
    gamma = chi * gsum * q(-3, 4096)
    delta = chi ** 4 * quad * psi ** 9 * (-(2 ** 25) * 3 ** 5)
    return ShiodaInoseParams(alpha, beta, gamma, delta)


def si_from_chipsi_corrected(chi, psi):
    """Oracle-backed parameters on the (3,3)-split family: built from
    the corrected Igusa block (the printed closed forms above do not
    weighted-match the sextic invariants at any tested point)."""
    from .genus2core.invariants import j_to_ic
    from .split3 import igusa_chipsi_surface
    return si_from_igusa_clebsch(j_to_ic(igusa_chipsi_surface(chi, psi)))


def si_quartic(params):
    """The quartic Y^2 Z W - 4 X^3 Z + 3a X Z W^2 + b Z W^3 + g X Z^2 W
    - (d Z^2 W^2 + W^4)/2 as {(e_W, e_X, e_Y, e_Z): coefficient}.

    Every monomial has total degree 4.
    """
    a, b, g, d = params.astuple()
    one = a * 0 + 1
    half = one / (one * 2)
    quartic = {
        (1, 0, 2, 1): one,
        (0, 3, 0, 1): -one * 4,
        (2, 1, 0, 1): a * 3,
        (3, 0, 0, 1): b * one,
        (1, 1, 0, 2): g * one,
        (2, 0, 0, 2): -d * half,
        (4, 0, 0, 0): -half,
    }
    return {k: c for k, c in quartic.items() if c}


def elliptic_disc(a, b):
    """Discriminant -16(4a^3 + 27b^2) of y^2 = x^3 + ax + b."""
    return (a ** 3 * 4 + b * b * 27) * (-16)


def kummer_affine(a, b, c, d):
    """Affine singular Kummer model x2^3 + c x2 + d - t2^2 (x1^3 + a x1 + b)
    as {(e_x1, e_x2, e_t2): coefficient}."""
    one = a * 0 + 1
    terms = {
        (0, 3, 0): one,
        (0, 1, 0): c * one,
        (0, 0, 0): d * one,
        (3, 0, 2): -one,
        (1, 0, 2): -a * one,
        (0, 0, 2): -b * one,
    }
    return {k: v for k, v in terms.items() if v}


class InosePencil:
    """The elliptic pencil Y^2 = X^3 - 3ac X + (D1 t^s + 864 bd + D2/t^s)/64
    attached to y^2 = x^3 + ax + b and y^2 = x^3 + cx + d.

    A K3 surface for s in {1, ..., 6} only.
    """

    def __init__(self, a, b, c, d, s):
        if s not in (1, 2, 3, 4, 5, 6):
            raise SurfaceError("s must be in 1..6 (K3 range), got %s" % (s,))
        one = a * 0 + 1
        self.a, self.b = a * one, b * one
        self.c, self.d = c * one, d * one
        self.s = s
        self.disc1 = elliptic_disc(self.a, self.b)
        self.disc2 = elliptic_disc(self.c, self.d)
        if not self.disc1 or not self.disc2:
            raise SurfaceError("singular elliptic input (discriminant zero)")

    def fiber(self, t0):
        """Short Weierstrass coefficients (A, B) of the fiber at t = t0."""
        one = self.a * 0 + 1
        t0 = t0 * one
        if not t0:
            raise SurfaceError("t = 0 is not in the affine chart")
        ts = t0 ** self.s
        A = -self.a * self.c * 3
        B = (self.disc1 * ts + self.b * self.d * 864 + self.disc2 / ts) \
            / (one * 64)
        return A, B

    def fiber_is_smooth(self, t0):
        A, B = self.fiber(t0)
        return bool(A ** 3 * 4 + B * B * 27)

    def record(self):
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d,
                "s": self.s, "disc1": self.disc1, "disc2": self.disc2}


def inose_pencil(a, b, c, d, s):
    return InosePencil(a, b, c, d, s)
