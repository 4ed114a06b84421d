"""Exact-arithmetic toolkit for split genus-2 Jacobians.

Subpackages
-----------
exactmath   : rationals, prime fields, quadratic extensions, polynomials
genus2core  : curves, invariants, Mumford arithmetic, point counting
modular     : classical modular polynomials and eliminated isogeny loci
split2      : the (2,2)-reducible family and its invariants
split3      : the (3,3)-reducible family, covers and (chi, psi) surface
surfaces    : Shioda-Inose quartics, Kummer model, Inose pencil
ffcrypto    : supersingular Montgomery curves and their genus-2 lifts
validation  : trust-but-verify registry for every shipped closed form
service/cli : FastAPI service and its command-line client
"""

__version__ = "0.1.0"

from .genus2core import Genus2Curve, MumfordDivisor  # noqa: F401
from .validation import ValidationReport, run_validation  # noqa: F401
