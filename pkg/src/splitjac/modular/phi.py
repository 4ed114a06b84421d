"""Modular polynomials phi_N for N in {2, 3, 5, 7} and the isogeny test."""

import hashlib
import os

from ..exactmath import BiPoly
from .qexp import compute_phi, symmetric_reduce

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")

SUPPORTED_LEVELS = (2, 3, 5, 7)


class IntegrityError(Exception):
    """A bundled data file does not match its recorded hash."""


class UnsupportedLevelError(ValueError):
    pass


# phi_2 and phi_3 as displayed in the source text, verified to match the
# q-expansion computation exactly (see tests).
_PHI2_XY = {
    (3, 0): 1, (0, 3): 1, (2, 2): -1,
    (2, 1): 1488, (1, 2): 1488,
    (1, 1): 40773375,
    (2, 0): -162000, (0, 2): -162000,
    (1, 0): 8748000000, (0, 1): 8748000000,
    (0, 0): -157464000000000,
}

_PHI2_ST = {
    (3, 0): 1, (2, 0): -162000, (1, 1): 1485, (0, 2): -1,
    (1, 0): 8748000000, (0, 1): 41097375, (0, 0): -157464000000000,
}

_PHI3_XY = {
    (3, 3): -1, (3, 2): 2232, (2, 3): 2232, (4, 0): 1, (0, 4): 1,
    (3, 1): -1069956, (1, 3): -1069956, (2, 2): 2587918086,
    (3, 0): 36864000, (0, 3): 36864000,
    (2, 1): 8900222976000, (1, 2): 8900222976000,
    (2, 0): 452984832000000, (0, 2): 452984832000000,
    (1, 1): -770845966336000000,
    (1, 0): 1855425871872000000000, (0, 1): 1855425871872000000000,
}

_PHI3_ST = {
    (4, 0): 1, (3, 0): 36864000, (2, 1): -1069960, (1, 2): 2232, (0, 3): -1,
    (2, 0): 452984832000000, (1, 1): 8900112384000, (0, 2): 2590058000,
    (1, 0): 1855425871872000000000, (0, 1): -771751936000000000,
}


def _body_lines(poly):
    return ["%d %d %d" % (i, j, c) for (i, j), c in sorted(poly.terms.items())]


def _body_hash(lines):
    return hashlib.sha256(("\n".join(lines) + "\n").encode()).hexdigest()


def save_phi_file(poly, n, path):
    lines = _body_lines(poly)
    with open(path, "w") as fh:
        fh.write("PHI N=%d terms=%d sha256=%s\n" % (n, len(lines), _body_hash(lines)))
        fh.write("\n".join(lines) + "\n")


def load_phi_file(path):
    """Read a sparse-polynomial data file, verifying its content hash."""
    with open(path) as fh:
        header = fh.readline().split()
        body = [ln.strip() for ln in fh if ln.strip()]
    fields = dict(part.split("=", 1) for part in header[1:])
    if header[0] != "PHI" or len(body) != int(fields["terms"]):
        raise IntegrityError("malformed data file %s" % path)
    if _body_hash(body) != fields["sha256"]:
        raise IntegrityError("hash mismatch in %s" % path)
    terms = {}
    for ln in body:
        i, j, c = ln.split()
        terms[(int(i), int(j))] = int(c)
    return int(fields["N"]), BiPoly(terms)


class ModularPolynomial:
    """Level-N classical modular polynomial in (x,y) and (s,t) coordinates."""

    def __init__(self, level, xy_form, st_form=None):
        if not xy_form.is_symmetric():
            raise ValueError("modular polynomial must be symmetric")
        self.level = level
        self.xy_form = xy_form
        self.st_form = st_form if st_form is not None else symmetric_reduce(xy_form)

    def __call__(self, j1, j2):
        return self.xy_form(j1, j2)

    def kronecker_holds(self):
        """phi_N(x,y) = (x^N - y)(x - y^N) mod N, for prime N."""
        n = self.level
        lhs = self.xy_form.reduce_mod(n)
        rhs = (BiPoly({(n, 0): 1, (0, 1): -1})
               * BiPoly({(1, 0): 1, (0, n): -1})).reduce_mod(n)
        return lhs == rhs


_cache = {}


def phi(N):
    """The level-N modular polynomial; N in {2, 3, 5, 7}."""
    if N not in SUPPORTED_LEVELS:
        raise UnsupportedLevelError("no modular polynomial bundled for N=%s" % (N,))
    if N not in _cache:
        if N == 2:
            _cache[N] = ModularPolynomial(2, BiPoly(_PHI2_XY), BiPoly(_PHI2_ST))
        elif N == 3:
            _cache[N] = ModularPolynomial(3, BiPoly(_PHI3_XY), BiPoly(_PHI3_ST))
        else:
            path = os.path.join(DATA_DIR, "phi%d.txt" % N)
            if os.path.exists(path):
                level, poly = load_phi_file(path)
                if level != N:
                    raise IntegrityError("level mismatch in %s" % path)
            else:
                poly = compute_phi(N)
            _cache[N] = ModularPolynomial(N, poly)
    return _cache[N]


def are_isogenous(j1, j2, N):
    """Exact test phi_N(j1, j2) == 0 for j-invariants in a common field."""
    value = phi(N)(j1, j2)
    return value == value * 0
