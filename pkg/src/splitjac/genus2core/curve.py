"""Genus-2 curve model y^2 = f(x) with deg f in {5, 6}."""

from fractions import Fraction

from ..exactmath import QQ, PrimeField, QuadExtField, UniPoly, discriminant, quad_ext


class InvalidCurveError(Exception):
    pass


def _encode_elem(x):
    if isinstance(x, Fraction):
        return str(x)
    if hasattr(x, "im"):  # quadratic extension element
        return "%d+%d*w" % (x.re, x.im)
    return str(x.val)


def _decode_elem(s, field):
    s = s.strip()
    if field is QQ:
        return Fraction(s)
    if "*w" in s:
        re_part, im_part = s.split("+", 1)
        return field(int(re_part), int(im_part.replace("*w", "")))
    return field.of(int(s))


def _field_tag(field):
    if field is QQ:
        return "Q"
    if isinstance(field, QuadExtField):
        return {"p2": field.p}
    if isinstance(field, PrimeField):
        return {"p": field.p}
    raise InvalidCurveError("unsupported base field %r" % (field,))


def field_from_tag(tag):
    if tag == "Q":
        return QQ
    if "p2" in tag:
        return quad_ext(int(tag["p2"]))
    return PrimeField(int(tag["p"]))


class Genus2Curve:
    """y^2 = f(x) = a6 x^6 + ... + a0, deg f in {5, 6}, squarefree f."""

    def __init__(self, coeffs, field=QQ):
        cs = [field(c) if isinstance(c, (int, Fraction)) else c for c in coeffs]
        while len(cs) < 7:
            cs.append(field.of(0))
        if len(cs) > 7:
            raise InvalidCurveError("more than 7 coefficients")
        self.field = field
        self.coeffs = tuple(cs)
        f = UniPoly(cs, field)
        if f.degree not in (5, 6):
            raise InvalidCurveError("defining polynomial must have degree 5 or 6")
        if discriminant(f) == field.of(0):
            raise InvalidCurveError("singular model: repeated root in f")
        self.f = f

    @property
    def degree(self):
        return self.f.degree

    def __eq__(self, other):
        return (isinstance(other, Genus2Curve)
                and self.field == other.field and self.coeffs == other.coeffs)

    def __repr__(self):
        return "Genus2Curve(%r)" % (list(self.coeffs),)

    def to_json(self):
        return {"field": _field_tag(self.field),
                "coeffs": [_encode_elem(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj):
        field = field_from_tag(obj["field"])
        coeffs = [_decode_elem(s, field) for s in obj["coeffs"]]
        return cls(coeffs, field)
