"""FastAPI service exposing the full library surface.

Every endpoint is a POST taking a pydantic model and returning JSON in
which all numbers are decimal strings, so responses are exact and
byte-stable for identical inputs.
"""

from fractions import Fraction

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import ffcrypto, split2, split3, surfaces
from ..exactmath import (
    QQ,
    FieldError,
    NonSquareError,
    PolynomialError,
    PrimeField,
    UniPoly,
    is_square,
    quad_ext,
    sqrt,
)
from ..genus2core import (
    Genus2Curve,
    InvalidCurveError,
    InvalidDivisorError,
    MumfordDivisor,
    ResourceLimitError,
    cantor_add,
    lpoly,
    scalar_mul,
)
from ..genus2core.curve import _decode_elem, _encode_elem
from ..modular import DegreeBudgetError, UnsupportedLevelError, are_isogenous
from ..split3 import DegeneratePairError
from ..surfaces import SurfaceError
from ..validation import run_validation
from .models import (
    CurveModel,
    DivisorModel,
    IsogenyRequest,
    JacRequest,
    LpolyRequest,
    ScanRequest,
    ScanResponse,
    Split2Request,
    Split3Request,
    SurfaceRequest,
    ValidateRequest,
    ValidateResponse,
)

app = FastAPI(title="splitjac", description=__doc__)

USAGE_ERRORS = (
    ValueError, KeyError, TypeError, ZeroDivisionError,
    FieldError, NonSquareError, PolynomialError,
    InvalidCurveError, InvalidDivisorError,
    DegeneratePairError, SurfaceError, UnsupportedLevelError,
    ffcrypto.LiftDegenerateError,
)
RESOURCE_ERRORS = (ResourceLimitError, DegreeBudgetError)


for _cls in USAGE_ERRORS:
    app.add_exception_handler(
        _cls, lambda request, exc: JSONResponse(
            status_code=422, content={"error": "%s: %s" % (type(exc).__name__, exc)}))
for _cls in RESOURCE_ERRORS:
    app.add_exception_handler(
        _cls, lambda request, exc: JSONResponse(
            status_code=429, content={"error": "%s: %s" % (type(exc).__name__, exc)}))


def field_from_spec(spec):
    """"Q" -> rationals, "101" -> F_101, "103^2" -> F_103(w)."""
    if spec in ("Q", "q", "", None):
        return QQ
    s = str(spec)
    if s.endswith("^2"):
        return quad_ext(int(s[:-2]))
    return PrimeField(int(s))


def elem(s, field):
    if field is QQ:
        return Fraction(s)
    return _decode_elem(s, field)


def encode(x):
    """Recursive decimal-string serialization (bools stay bools)."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, (list, tuple)):
        return [encode(v) for v in x]
    if isinstance(x, dict):
        return {str(k): encode(v) for k, v in x.items()}
    if isinstance(x, int):
        return str(x)
    return _encode_elem(x)


def _quadratic_roots(s, t):
    """Roots of j^2 - s j + t, or None when irrational."""
    disc = s * s - t * 4
    if not is_square(disc):
        return None
    r = sqrt(disc)
    half = (s * 0 + 1) / 2
    return ((s + r) * half, (s - r) * half)


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/split2")
def post_split2(req: Split2Request):
    fld = field_from_spec(req.field)
    if req.s1 is not None and req.s2 is not None:
        rec = split2.split2_record(elem(req.s1, fld), elem(req.s2, fld))
        return encode(rec)
    if req.u is None or req.v is None:
        raise ValueError("provide s1,s2 or u,v")
    u, v = elem(req.u, fld), elem(req.v, fld)
    s, t = split2.j_quadratic(u, v)
    s2q = split2.s2_surface(u, v)
    rec = {
        "u": u, "v": v, "Delta": split2.delta_uv(u, v), "S2": s2q,
        "stratum": split2.aut_stratum(u, v),
        "split": is_square(s2q),
        "quadratic": {"s": s, "t": t},
    }
    roots = _quadratic_roots(s, t)
    if roots:
        rec["j1"], rec["j2"] = roots
    return encode(rec)


@app.post("/split3")
def post_split3(req: Split3Request):
    fld = field_from_spec(req.field)
    if req.fu is not None and req.fv is not None:
        fu, fv = elem(req.fu, fld), elem(req.fv, fld)
        if fld is not QQ:
            # split3_record recomputes over the curve's own field
            one = fld.one()
            fu, fv = fu * one, fv * one
        rec = split3.split3_record(fu, fv)
        rec["split"] = is_square(rec["S3"])
        return encode(rec)
    if req.chi is None or req.psi is None:
        raise ValueError("provide fu,fv or chi,psi")
    chi, psi = elem(req.chi, fld), elem(req.psi, fld)
    s, t = split3.st_surface(chi, psi)
    s3q = split3.s3_surface(chi, psi)
    rec = {
        "chi": chi, "psi": psi, "S3": s3q, "split": is_square(s3q),
        "st": {"s": s, "t": t},
    }
    roots = _quadratic_roots(s, t)
    if roots:
        rec["j1"], rec["j2"] = roots
    return encode(rec)


@app.post("/isogeny")
def post_isogeny(req: IsogenyRequest):
    fld = field_from_spec(req.field)
    x, y = elem(req.x, fld), elem(req.y, fld)
    if req.n == "2":
        factors = split2.isogeny_locus_eval(req.N, x, y)
        member = any(not f for f in factors)
        st = split2.j_quadratic(x, y)
    elif req.n == "3":
        factors = split3.isogeny_locus3_eval(req.N, x, y)
        # only the last (eliminated) factor is authoritative for n=3
        member = not factors[-1]
        st = split3.st_surface(x, y)
    else:
        raise ValueError("n must be '2' or '3'")
    roots = _quadratic_roots(*st)
    verdict = None
    if roots:
        verdict = are_isogenous(roots[0], roots[1], req.N)
    return encode({
        "n": req.n, "N": req.N, "x": x, "y": y,
        "factors": factors, "member": member,
        "isogenous": verdict,
    })


def _decode_divisor(curve, model: DivisorModel):
    fld = curve.field
    u = UniPoly([_decode_elem(s, fld) if fld is not QQ else Fraction(s)
                 for s in model.u] or [fld.of(0)], fld)
    v = UniPoly([_decode_elem(s, fld) if fld is not QQ else Fraction(s)
                 for s in model.v] or [fld.of(0)], fld)
    return MumfordDivisor(curve, u, v)


def _encode_divisor(d: MumfordDivisor):
    return {
        "u": [_encode_elem(d.u[i]) for i in range(d.u.degree + 1)],
        "v": [_encode_elem(d.v[i]) for i in range(d.v.degree + 1)],
    }


@app.post("/jac")
def post_jac(req: JacRequest):
    curve = Genus2Curve.from_json(req.curve.model_dump())
    d1 = _decode_divisor(curve, req.div1)
    if req.op == "add":
        if req.div2 is None:
            raise ValueError("op=add needs div2")
        out = cantor_add(d1, _decode_divisor(curve, req.div2))
        return {"result": _encode_divisor(out)}
    if req.op == "mul":
        if req.k is None:
            raise ValueError("op=mul needs k")
        return {"result": _encode_divisor(scalar_mul(d1, req.k))}
    if req.op == "order":
        return {"order": str(d1.order(bound=req.bound))}
    raise ValueError("op must be add, mul or order")


@app.post("/lpoly")
def post_lpoly(req: LpolyRequest):
    from ..genus2core.counting import _field_order
    curve = Genus2Curve.from_json(req.curve.model_dump())
    if curve.field is QQ:
        raise ValueError("L-polynomials need a finite base field")
    q = _field_order(curve.field)
    if req.q is not None and req.q != q:
        raise ValueError("q=%d does not match the curve's field order %d"
                         % (req.q, q))
    coeffs = lpoly(curve)
    order = coeffs[0] + coeffs[1] + coeffs[2] + coeffs[3] + coeffs[4]
    return encode({"q": q, "lpoly": coeffs, "jacobian_order": order})


@app.post("/surface")
def post_surface(req: SurfaceRequest):
    fld = field_from_spec(req.field)
    vals = [elem(s, fld) for s in req.values]
    if req.source == "ic":
        if len(vals) != 4:
            raise ValueError("source=ic needs 4 values (I2, I4, I6, I10)")
        params = surfaces.si_from_igusa_clebsch(tuple(vals))
    elif req.source == "uv":
        if len(vals) != 2:
            raise ValueError("source=uv needs 2 values (u, v)")
        params = surfaces.si_from_uv(*vals)
    elif req.source == "chipsi":
        if len(vals) != 2:
            raise ValueError("source=chipsi needs 2 values (chi, psi)")
        params = surfaces.si_from_chipsi_corrected(*vals)
    else:
        raise ValueError("source must be ic, uv or chipsi")
    quartic = surfaces.si_quartic(params)
    return encode({
        "source": req.source,
        "params": {"alpha": params.alpha, "beta": params.beta,
                   "gamma": params.gamma, "delta": params.delta},
        "quartic": {"%d,%d,%d,%d" % k: c for k, c in quartic.items()},
    })


@app.post("/ss-scan", response_model=ScanResponse)
def post_ss_scan(req: ScanRequest):
    if req.p > 200:
        raise ResourceLimitError("p > 200: scan cost grows as p^4")
    rows = ffcrypto.ss_scan(req.p, limit=req.limit, workers=req.workers)
    return ScanResponse(p=req.p, rows=len(rows),
                        csv=ffcrypto.scan_to_csv(rows))


@app.post("/validate", response_model=ValidateResponse)
def post_validate(req: ValidateRequest):
    report = run_validation(seed=req.seed, points=req.points)
    return ValidateResponse(summary=report.summary(),
                            unresolved=len(report.unresolved),
                            report=report.asdict())
