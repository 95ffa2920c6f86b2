"""Closed-form main terms for a-point statistics.

Everything here is elementary arithmetic in double precision: counting main
terms of Riemann-von Mangoldt type, windowed versions, exponential-sum main
terms (T/2pi times a coefficient from :mod:`zapoints.coeffs`), the census
band half-width and the weighted sum-of-real-parts main term.  All logs are
natural.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .coeffs import alpha, alpha_zero
from .errors import DomainTooSmall

TWO_PI = 2.0 * math.pi
E_E = math.exp(math.e)          # domain floor for the band half-width


@dataclass
class MainTermReport:
    """Observed-vs-predicted comparison with a normalized remainder."""

    observed: complex
    predicted: complex
    normalizer: float

    @property
    def remainder(self) -> complex:
        return self.observed - self.predicted

    @property
    def ratio(self) -> float:
        return abs(self.remainder) / self.normalizer


def count_main(k: int, a: complex, t_height: float) -> float:
    """Main term of the number of a-points with 1 < gamma < T.

    (T/2pi) log(T/2pi) - T/2pi for a != 0; the zero case replaces the log
    argument by T/4pi (the first Dirichlet-series index of zeta^(k) is 2,
    not 1, which shifts the counting density by log 2 / 2pi).
    """
    if t_height <= 1.0:
        raise ValueError("T must exceed 1")
    x = t_height / TWO_PI
    if a == 0:
        return x * math.log(x / 2.0) - x
    return x * math.log(x) - x


def window_count_main(k: int, a: complex, t_height: float, u: float) -> float:
    """count_main over (T, T+U] in closed form; equals the difference of the
    two count_main evaluations up to rounding."""
    if u < 0:
        raise ValueError("U must be non-negative")
    if u == 0:
        return 0.0
    tp = (t_height + u) / TWO_PI
    tl = t_height / TWO_PI
    shift = math.log(2.0) if a == 0 else 0.0
    return (tp * (math.log(tp) - shift) - tl * (math.log(tl) - shift)
            - u / TWO_PI)


def expsum_main(k: int, a: complex, x, t_height: float) -> complex:
    """(T/2pi) * alpha for the exponential sum sum x^rho over 1<gamma<T.

    Zero whenever the coefficient is (non-integer x for a != 0, non-dyadic
    x for a = 0).
    """
    if not x > 1:
        raise ValueError("x must exceed 1")
    if t_height == 0:
        return 0j
    coef = alpha_zero(k, x) if a == 0 else alpha(k, a, x)
    return (t_height / TWO_PI) * coef


def band_halfwidth(t_height: float) -> float:
    """(log log T)^2 / log T, the census band half-width around Re s = 1/2."""
    if t_height <= E_E:
        raise DomainTooSmall(f"T must exceed e^e ~= {E_E:.4f}")
    return math.log(math.log(t_height)) ** 2 / math.log(t_height)


def beta_sum_main(k: int, a: complex, b: float, t_height: float,
                  u: float) -> float:
    """Predicted sum of (beta + b) over a-points with T < gamma < T+U.

    The 2pi-scaled main term is

        (1/2+b) {(T+U) log((T+U)/2pi) - T log(T/2pi) - U}
        + k {(T+U) loglog(T+U) - T loglog T} - U log|a|         (a != 0)

    with the a = 0 variant dropping the -U inside the first brace and
    subtracting U (1/2 + b + b log 2 + k log log 2) instead.  The returned
    value is divided by 2pi so it predicts the plain sum.
    """
    if u < 0:
        raise ValueError("U must be non-negative")
    if u == 0:
        return 0.0
    if t_height <= math.e:
        raise ValueError("T must exceed e")
    tp, tl = t_height + u, t_height
    first = tp * math.log(tp / TWO_PI) - tl * math.log(tl / TWO_PI)
    loglog = tp * math.log(math.log(tp)) - tl * math.log(math.log(tl))
    if a == 0:
        total = ((0.5 + b) * first + k * loglog
                 - u * (0.5 + b + b * math.log(2.0)
                        + k * math.log(math.log(2.0))))
    else:
        total = ((0.5 + b) * (first - u) + k * loglog
                 - u * math.log(abs(complex(a))))
    return total / TWO_PI
