"""Pydantic request/response models for the HTTP service.

All field, curve and divisor values travel as decimal strings
("a/b" for rationals, "r+s*w" for quadratic-extension elements) so
arbitrary-precision numbers survive JSON.
"""

from typing import Dict, List, Optional, Union

from pydantic import BaseModel

FieldSpec = Union[str, Dict[str, int]]


class Split2Request(BaseModel):
    s1: Optional[str] = None
    s2: Optional[str] = None
    u: Optional[str] = None
    v: Optional[str] = None
    field: str = "Q"


class Split3Request(BaseModel):
    fu: Optional[str] = None
    fv: Optional[str] = None
    chi: Optional[str] = None
    psi: Optional[str] = None
    field: str = "Q"


class IsogenyRequest(BaseModel):
    n: str  # "2" or "3": which split family
    N: int  # isogeny level: 2, 3, 5 or 7
    x: str  # u (n=2) or chi (n=3)
    y: str  # v (n=2) or psi (n=3)
    field: str = "Q"


class CurveModel(BaseModel):
    field: FieldSpec
    coeffs: List[str]


class DivisorModel(BaseModel):
    u: List[str]
    v: List[str]


class JacRequest(BaseModel):
    curve: CurveModel
    op: str  # "add", "mul" or "order"
    div1: DivisorModel
    div2: Optional[DivisorModel] = None
    k: Optional[int] = None
    bound: Optional[int] = None


class LpolyRequest(BaseModel):
    curve: CurveModel
    q: Optional[int] = None  # cross-checked against the curve's field


class SurfaceRequest(BaseModel):
    source: str  # "ic", "uv" or "chipsi"
    values: List[str]
    field: str = "Q"


class ScanRequest(BaseModel):
    p: int
    limit: Optional[int] = None
    workers: int = 1


class ValidateRequest(BaseModel):
    seed: int = 0
    points: int = 50


class ScanResponse(BaseModel):
    p: int
    rows: int
    csv: str


class ValidateResponse(BaseModel):
    summary: str
    unresolved: int
    report: dict
