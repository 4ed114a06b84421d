"""Classical modular polynomials from integer q-expansions.

The level-N modular polynomial is the minimal polynomial of j(N*tau) over
C(j(tau)).  Everything here is exact integer arithmetic on truncated
q-series, so the output coefficients are provably correct once the series
precision covers every pole order that appears.

Outline for prime N:
  * the conjugates of j(N*tau) are j(N*tau) and j((tau+i)/N), i = 0..N-1
  * power sums of the conjugates are q-series with integer coefficients
    (summing over i kills every exponent not divisible by N)
  * Newton's identities turn power sums into elementary symmetric
    functions e_k, each a polynomial in j(tau) found by pole matching
"""

from .. import exactmath as _em  # noqa: F401  (re-exported field types for callers)
from ..exactmath import BiPoly


def _mul_trunc(a, b, n):
    """Product of integer coefficient lists a, b truncated to length n."""
    out = [0] * n
    for i, ai in enumerate(a):
        if ai == 0 or i >= n:
            continue
        top = min(len(b), n - i)
        for j in range(top):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def _sigma3_table(n):
    sig = [0] * n
    for d in range(1, n):
        d3 = d * d * d
        for m in range(d, n, d):
            sig[m] += d3
    return sig


def j_series(prec):
    """Coefficients c_{-1}..c_{prec-2} of j(q) = 1/q + 744 + 196884 q + ...

    Returns a plain list L with L[k] the coefficient of q^(k-1).
    """
    n = prec + 1
    sig = _sigma3_table(n)
    e4 = [240 * s for s in sig]
    e4[0] = 1
    e4cubed = _mul_trunc(_mul_trunc(e4, e4, n), e4, n)
    # Delta/q = prod (1-q^k)^24; invert the Euler product via eta^24
    dq = [0] * n
    dq[0] = 1
    for k in range(1, n):
        term = [0] * n
        # multiply dq by (1 - q^k)^24 using binomial expansion
        binom = 1
        for t in range(0, 25):
            e = k * t
            if e >= n:
                break
            term2 = binom if t % 2 == 0 else -binom
            for idx in range(0, n - e):
                term[idx + e] += dq[idx] * term2
            binom = binom * (24 - t) // (t + 1)
        dq = term
    # invert dq as a power series
    inv = [0] * n
    inv[0] = 1
    for k in range(1, n):
        acc = 0
        for i in range(1, k + 1):
            acc += dq[i] * inv[k - i]
        inv[k] = -acc
    jq = _mul_trunc(e4cubed, inv, n)  # this is q*j(q)
    return jq[:prec]


class _Laurent:
    """Truncated integer Laurent series: coeff of q^(off+i) is c[i]."""

    __slots__ = ("off", "c")

    def __init__(self, off, c):
        self.off = off
        self.c = list(c)

    def mul(self, other, keep):
        """Product keeping coefficients of q^e for e < keep."""
        off = self.off + other.off
        n = keep - off
        if n <= 0:
            return _Laurent(off, [])
        return _Laurent(off, _mul_trunc(self.c, other.c, n))

    def coeff(self, e):
        i = e - self.off
        if 0 <= i < len(self.c):
            return self.c[i]
        return 0

    def add_scaled(self, other, scalar):
        off = min(self.off, other.off)
        end = max(self.off + len(self.c), other.off + len(other.c))
        c = [0] * (end - off)
        for i, x in enumerate(self.c):
            c[self.off - off + i] += x
        for i, x in enumerate(other.c):
            c[other.off - off + i] += scalar * x
        return _Laurent(off, c)

    def min_exp(self):
        for i, x in enumerate(self.c):
            if x:
                return self.off + i
        return None


def compute_phi(N, prec=None):
    """Modular polynomial phi_N(x, y) as an integer BiPoly, N prime or 2.

    prec is the number of q-coefficients of j to carry; the default covers
    the pole orders that occur for N <= 7 with a safety margin.
    """
    if prec is None:
        prec = N * (N + 2) + 24
    # series in w = q^(1/N) needs N times the q-precision
    wbase = j_series(N * prec)  # j coefficients, enough for the w-variable view
    base = wbase[:prec]

    keep_q = prec - 2  # guaranteed correct q-exponents < keep_q
    keep_w = N * keep_q

    # j(N tau) in q: exponents stretched by N
    jn = [0] * (N * (prec - 1) + 1)
    for k, ck in enumerate(base):
        jn[N * k] = ck
    JNq = _Laurent(-N, jn)
    # j((tau+i)/N) lives at w = zeta^i q^(1/N): plain series in w
    Jw = _Laurent(-1, wbase)
    Jq = _Laurent(-1, list(base))  # j(tau) in q

    # power sums p_k in q: p_k = j(N tau)^k + N * [w-exponents divisible by N
    # in J(w)^k, reindexed as q-exponents]  (summing zeta^i kills the rest)
    deg = N + 1
    psums = []
    jn_pow = _Laurent(0, [1])
    jw_pow = _Laurent(0, [1])
    for k in range(1, deg + 1):
        jn_pow = jn_pow.mul(JNq, keep_q)
        jw_pow = jw_pow.mul(Jw, keep_w)
        lo = jw_pow.off // N  # q-exponent floor for divisible w-exponents
        c = [N * jw_pow.coeff(N * m) for m in range(lo, keep_q)]
        pk = jn_pow.add_scaled(_Laurent(lo, c), 1)
        psums.append(pk)

    # Newton's identities: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i.
    # Coefficients of e_k are only trustworthy below valid_k: every product
    # with a pole-order-N factor chops N exponents off the exact range.
    es = [_Laurent(0, [1])]
    for k in range(1, deg + 1):
        valid_k = keep_q - N * k
        if valid_k <= N + 4:
            raise ArithmeticError("insufficient q-precision")
        acc = _Laurent(0, [])
        for i in range(1, k + 1):
            term = es[k - i].mul(psums[i - 1], keep_q)
            acc = acc.add_scaled(term, 1 if i % 2 == 1 else -1)
        c = []
        for idx, x in enumerate(acc.c):
            if acc.off + idx >= valid_k:
                break
            if x % k != 0:
                raise ArithmeticError("Newton identity division failed; raise precision")
            c.append(x // k)
        es.append(_Laurent(acc.off, c))

    # express each e_k as an integer polynomial in j by pole matching
    jpows = [_Laurent(0, [1])]
    for _ in range(deg + 1):
        jpows.append(jpows[-1].mul(Jq, keep_q))

    phi = BiPoly({(deg, 0): 1})
    for k in range(1, deg + 1):
        valid_k = keep_q - N * k
        rem = es[k]
        poly = {}
        while True:
            m = rem.min_exp()
            if m is None or m >= valid_k - 1:
                break
            if m > 0:
                raise ArithmeticError("nonzero positive-exponent remainder; raise precision")
            d = -m
            coeff = rem.coeff(m)
            poly[d] = poly.get(d, 0) + coeff
            rem = rem.add_scaled(jpows[d], -coeff)
            rem = _Laurent(rem.off, rem.c[:max(0, valid_k - 1 - rem.off)])
        sign = 1 if k % 2 == 0 else -1
        for d, cf in poly.items():
            if cf:
                phi = phi + BiPoly({(deg - k, d): sign * cf})
    return phi


def symmetric_reduce(poly):
    """Rewrite a symmetric integer BiPoly P(x,y) in terms of s=x+y, t=xy.

    Returns a BiPoly Q with Q(x+y, xy) = P(x, y).  Raises if P is not
    symmetric.
    """
    if not poly.is_symmetric():
        raise ValueError("polynomial is not symmetric in (x, y)")
    rem = poly
    out = {}
    s_pows = {0: BiPoly({(0, 0): 1})}
    t_pows = {0: BiPoly({(0, 0): 1})}
    s_poly = BiPoly({(1, 0): 1, (0, 1): 1})
    t_poly = BiPoly({(1, 1): 1})

    def spow(n):
        while n not in s_pows:
            k = max(s_pows)
            s_pows[k + 1] = s_pows[k] * s_poly
        return s_pows[n]

    def tpow(n):
        while n not in t_pows:
            k = max(t_pows)
            t_pows[k + 1] = t_pows[k] * t_poly
        return t_pows[n]

    while rem.terms:
        (a, b) = max(rem.terms)  # lex-leading exponent pair, a >= b by symmetry
        if a < b:
            a, b = b, a
        c = rem.terms.get((a, b)) or rem.terms.get((b, a))
        out[(a - b, b)] = out.get((a - b, b), 0) + c
        rem = rem + (spow(a - b) * tpow(b)) * (-c)
    return BiPoly({k: v for k, v in out.items() if v})
