"""Tools for a-points of derivatives of the Riemann zeta function.

An a-point of zeta^(k) is a solution of zeta^(k)(s) = a.  The package
evaluates zeta and its derivatives across the complex plane, certifies
a-point locations with argument-principle winding numbers, and compares
the resulting statistics (counts, exponential sums, band censuses,
Littlewood balances) against their closed-form main terms.
"""

from .errors import ZapError
from .zeta import (
    DEFAULT_CONFIG,
    EvalConfig,
    GrowthEnvelope,
    chi,
    left_asymptotic,
    loggamma,
    zeta,
    zeta_deriv,
    zeta_deriv_many,
    zeta_derivs,
    zeta_many,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CONFIG",
    "EvalConfig",
    "GrowthEnvelope",
    "ZapError",
    "chi",
    "left_asymptotic",
    "loggamma",
    "zeta",
    "zeta_deriv",
    "zeta_deriv_many",
    "zeta_derivs",
    "zeta_many",
    "__version__",
]
