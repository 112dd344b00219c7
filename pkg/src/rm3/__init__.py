"""Genus-3 curves with real multiplication by the real cubic subfield of Q(zeta_7).

Exact symbolic construction of the family, ramification and genus checks,
point counting over finite fields and factorisation of zeta numerators over
the ring of integers O_K = Z[t]/(t^3 + t^2 - 2t - 1).
"""

from .curves import PlaneCurve, default_quartic, load_curve, load_table
from .errors import (AmbiguityError, CountingError, DegenerateError, InputError,
                     PreconditionError, RM3Error, RMFailure, StructureError, VerificationError)
from .exact import MultiPoly, RatFunc, format_poly, parse_poly
from .finitefield import FieldCtx, make_field
from .geometry import (GenusCertificate, RamificationProfile, fiber_profile,
                       quartic_smooth_mod_p, riemann_hurwitz)
from .rmfield import OKElem, RMFactor, rm_factor
from .zeta import ZetaNumerator, count_points, newton_assemble, zeta_numerator

__version__ = "0.1.0"

__all__ = [
    "AmbiguityError", "CountingError", "DegenerateError", "FieldCtx", "GenusCertificate",
    "InputError", "MultiPoly", "OKElem", "PlaneCurve", "PreconditionError", "RM3Error",
    "RMFactor", "RMFailure", "RamificationProfile", "RatFunc", "StructureError",
    "VerificationError", "ZetaNumerator", "count_points", "default_quartic", "fiber_profile",
    "format_poly", "load_curve", "load_table", "make_field", "newton_assemble", "parse_poly",
    "quartic_smooth_mod_p", "riemann_hurwitz", "rm_factor", "zeta_numerator",
]
