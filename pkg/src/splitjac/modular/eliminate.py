"""Denominator-clearing elimination of isogeny loci.

Given the level-N modular polynomial in (s, t) = (j1+j2, j1*j2) form and
s, t as rational functions of two family parameters, substituting and
clearing denominators yields the polynomial locus of parameters whose
elliptic components are N-isogenous.
"""

import hashlib
import os

from ..exactmath import BiPoly
from .phi import phi

DEFAULT_BUDGET = 40000  # maximum number of monomials allowed to accumulate


class DegreeBudgetError(Exception):
    """Elimination would exceed the configured size budget."""


def eliminate_locus(N, s_num, t_num, den, t_den_power=2, budget=DEFAULT_BUDGET):
    """Locus polynomial in the family parameters for level N.

    s = s_num/den, t = t_num/den**t_den_power as BiPoly rational functions.
    Clears denominators of phi_N(s, t), strips integer and monomial content,
    and divides out every remaining power of den.
    """
    st = phi(N).st_form
    weight = {ab: ab[0] + t_den_power * ab[1] for ab in st.terms}
    m = max(weight.values())

    # crude pre-flight size estimate: worst-case dense term count
    dmax = 0
    for (a, b) in st.terms:
        d = (a * s_num.total_degree() + b * t_num.total_degree()
             + (m - weight[(a, b)]) * den.total_degree())
        dmax = max(dmax, d)
    if (dmax + 1) * (dmax + 2) // 2 > budget:
        raise DegreeBudgetError(
            "locus degree %d exceeds budget (raise budget to force)" % dmax)

    spow = {0: BiPoly({(0, 0): 1})}
    tpow = {0: BiPoly({(0, 0): 1})}
    dpow = {0: BiPoly({(0, 0): 1})}

    def _pow(table, base, n):
        while n not in table:
            k = max(table)
            table[k + 1] = table[k] * base
        return table[n]

    acc = BiPoly({})
    for (a, b), c in sorted(st.terms.items()):
        term = _pow(spow, s_num, a) * _pow(tpow, t_num, b)
        term = term * _pow(dpow, den, m - weight[(a, b)])
        acc = acc + term * c
        if len(acc.terms) > budget:
            raise DegreeBudgetError("monomial count exceeded budget")
    acc = acc.primitive_part().strip_monomial()
    while not acc.is_zero() and den.divides(acc):
        acc = acc.exact_div(den).primitive_part()
    return acc.strip_monomial().primitive_part()


def eliminate_locus_general(N, s_num, s_den, t_num, t_den,
                            budget=DEFAULT_BUDGET):
    """Locus polynomial for level N with independent s and t denominators.

    s = s_num/s_den, t = t_num/t_den; multiplies phi_N(s, t) by
    s_den^A t_den^B (A, B the maximal s- and t-exponents), strips
    content, and divides out remaining powers of both denominators.
    """
    st = phi(N).st_form
    amax = max(a for (a, b) in st.terms)
    bmax = max(b for (a, b) in st.terms)

    dmax = 0
    for (a, b) in st.terms:
        d = (a * s_num.total_degree() + (amax - a) * s_den.total_degree()
             + b * t_num.total_degree() + (bmax - b) * t_den.total_degree())
        dmax = max(dmax, d)
    if (dmax + 1) * (dmax + 2) // 2 > budget:
        raise DegreeBudgetError(
            "locus degree %d exceeds budget (raise budget to force)" % dmax)

    tables = {}

    def _pow(base_key, base, n):
        table = tables.setdefault(base_key, {0: BiPoly({(0, 0): 1})})
        while n not in table:
            k = max(table)
            table[k + 1] = table[k] * base
        return table[n]

    acc = BiPoly({})
    for (a, b), c in sorted(st.terms.items()):
        term = (_pow("sn", s_num, a) * _pow("sd", s_den, amax - a)
                * _pow("tn", t_num, b) * _pow("td", t_den, bmax - b))
        acc = acc + term * c
        if len(acc.terms) > budget:
            raise DegreeBudgetError("monomial count exceeded budget")
    acc = acc.primitive_part().strip_monomial()
    changed = True
    while changed and not acc.is_zero():
        changed = False
        for den in (s_den, t_den):
            if den.total_degree() > 0 and den.divides(acc):
                acc = acc.exact_div(den).primitive_part()
                changed = True
    return acc.strip_monomial().primitive_part()


def _body_lines(poly):
    return ["%d %d %d" % (i, j, c) for (i, j), c in sorted(poly.terms.items())]


def _body_hash(lines):
    return hashlib.sha256(("\n".join(lines) + "\n").encode()).hexdigest()


def save_locus_file(poly, case, N, path):
    lines = _body_lines(poly)
    with open(path, "w") as fh:
        fh.write("LOCUS n=%s N=%d terms=%d sha256=%s\n"
                 % (case, N, len(lines), _body_hash(lines)))
        fh.write("\n".join(lines) + "\n")


def load_locus_file(path):
    from .phi import IntegrityError
    with open(path) as fh:
        header = fh.readline().split()
        body = [ln.strip() for ln in fh if ln.strip()]
    fields = dict(part.split("=", 1) for part in header[1:])
    if header[0] != "LOCUS" or len(body) != int(fields["terms"]):
        raise IntegrityError("malformed locus file %s" % path)
    if _body_hash(body) != fields["sha256"]:
        raise IntegrityError("hash mismatch in %s" % path)
    terms = {}
    for ln in body:
        i, j, c = ln.split()
        terms[(int(i), int(j))] = int(c)
    return fields["n"], int(fields["N"]), BiPoly(terms)


def cache_dirs():
    """Lookup order: bundled package data, then the user cache directory."""
    bundled = os.path.join(os.path.dirname(__file__), "data", "loci")
    user = os.environ.get("SPLITJAC_CACHE_DIR")
    dirs = [bundled]
    if user:
        dirs.append(user)
    return dirs


def cached_locus(case, N, compute):
    """Load the (case, N) locus from cache, computing and caching on miss."""
    fname = "locus_%s_N%d.txt" % (case, N)
    for d in cache_dirs():
        path = os.path.join(d, fname)
        if os.path.exists(path):
            got_case, got_n, poly = load_locus_file(path)
            if got_case == case and got_n == N:
                return poly
    poly = compute()
    target_dirs = cache_dirs()
    writable = target_dirs[-1]
    os.makedirs(writable, exist_ok=True)
    save_locus_file(poly, case, N, os.path.join(writable, fname))
    return poly
