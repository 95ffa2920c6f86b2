"""Aggregate located a-points into the statistics the theory predicts.

Inputs are certified point lists from :mod:`zapoints.scan`; outputs are
small report records comparing an observed quantity with its closed-form
main term: window counts, the three-band census around the critical line,
exponential sums sum x^rho, the Littlewood-lemma balance between the
sum of (beta - 1/2) and a log-modulus integral along the critical line,
and the weighted sum of (beta + b).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import QuadratureStall
from .mainterms import (
    MainTermReport,
    band_halfwidth,
    beta_sum_main,
    expsum_main,
    window_count_main,
)
from .scan import APoint
from .zeta import DEFAULT_CONFIG, EvalConfig, zeta_deriv_many, zeta_derivs

TWO_PI = 2.0 * math.pi

BAND_EDGE_EPS = 1.0e-12       # boundary hits are classified into the band
SINGULARITY_EPS = 1.0e-6      # |a - zeta^(k)| below this triggers excision
EXCISION_HALF = 0.5e-4        # half-width of the analytically integrated gap
MAX_QUAD_DEPTH = 40


@dataclass
class CensusReport:
    """Band census of a window (T, T+U): n1 above, n3 inside, n2 below."""

    k: int
    a: complex
    t_height: float
    u: float
    n1: int
    n2: int
    n3: int
    halfwidth: float
    main_total: float
    boundary_hits: list[APoint] = field(default_factory=list)

    @property
    def total(self) -> int:
        return self.n1 + self.n2 + self.n3

    @property
    def remainder_ratio(self) -> float:
        return abs(self.total - self.main_total) / math.log(self.t_height)


@dataclass
class ExpSumReport:
    k: int
    a: complex
    x: float
    t_height: float
    observed: complex
    predicted: complex

    @property
    def remainder_ratio(self) -> float:
        return abs(self.observed - self.predicted) / math.log(self.t_height)


def _window_points(points: list[APoint], t_lo: float, t_hi: float
                   ) -> list[APoint]:
    return [p for p in points if t_lo < p.gamma < t_hi]


def census(k: int, a: complex, t_height: float, u: float,
           points: list[APoint]) -> CensusReport:
    """Classify points of (T, T+U) against the band 1/2 +- halfwidth(T).

    The central band is closed; points within BAND_EDGE_EPS of an edge are
    counted inside and reported in ``boundary_hits``.
    """
    hw = band_halfwidth(t_height)
    lo_edge = 0.5 - hw
    hi_edge = 0.5 + hw
    n1 = n2 = n3 = 0
    boundary = []
    for p in _window_points(points, t_height, t_height + u):
        if abs(p.beta - lo_edge) <= BAND_EDGE_EPS \
                or abs(p.beta - hi_edge) <= BAND_EDGE_EPS:
            boundary.append(p)
            n3 += p.multiplicity
        elif p.beta > hi_edge:
            n1 += p.multiplicity
        elif p.beta < lo_edge:
            n2 += p.multiplicity
        else:
            n3 += p.multiplicity
    return CensusReport(k=k, a=complex(a), t_height=t_height, u=u,
                        n1=n1, n2=n2, n3=n3, halfwidth=hw,
                        main_total=window_count_main(k, a, t_height, u),
                        boundary_hits=boundary)


def expsum(k: int, a: complex, x: float, t_height: float,
           points: list[APoint]) -> ExpSumReport:
    """Observed sum of x^rho over 1 < gamma < T against (T/2pi) alpha(x)."""
    if not x > 1:
        raise ValueError("x must exceed 1")
    lx = math.log(x)
    obs = 0j
    for p in _window_points(points, 1.0, t_height):
        obs += p.multiplicity * np.exp(complex(p.beta, p.gamma) * lx)
    return ExpSumReport(k=k, a=complex(a), x=x, t_height=t_height,
                        observed=obs,
                        predicted=expsum_main(k, a, x, t_height))


def beta_half_sum(points: list[APoint], t_lo: float, t_hi: float) -> float:
    """sum of (beta - 1/2) over points right of the critical line."""
    return sum((p.beta - 0.5) * p.multiplicity
               for p in _window_points(points, t_lo, t_hi) if p.beta > 0.5)


# --------------------------------------------------------------------------
# adaptive quadrature of log|a - zeta^(k)(1/2 + it)|
# --------------------------------------------------------------------------

def log_distance_integral(k: int, a: complex, t_lo: float, t_hi: float,
                          cfg: EvalConfig = DEFAULT_CONFIG,
                          tol: float = 1.0e-4) -> float:
    """Integral of log|a - zeta^(k)(1/2 + it)| over [t_lo, t_hi].

    Adaptive Simpson with batched evaluation; where the integrand has an
    (integrable) logarithmic dip because an a-point sits numerically on the
    critical line, a symmetric interval of width 2*EXCISION_HALF is removed
    and integrated analytically assuming a simple linear zero crossing.
    """
    coarse = cfg.coarse()
    log_dip = math.log(SINGULARITY_EPS)

    def f(ts: np.ndarray) -> np.ndarray:
        vals = np.abs(a - zeta_deriv_many(k, 0.5 + 1j * ts, coarse))
        return np.log(np.maximum(vals, 1e-300))

    span = t_hi - t_lo
    total = 0.0
    # seed segments about 0.05 high so the oscillation is resolved up front
    n0 = max(8, int(span / 0.05))
    edges = np.linspace(t_lo, t_hi, n0 + 1)
    xs = np.sort(np.concatenate([edges, 0.5 * (edges[:-1] + edges[1:])]))
    fx = f(xs)
    seg = [(xs[2 * i], xs[2 * i + 1], xs[2 * i + 2],
            fx[2 * i], fx[2 * i + 1], fx[2 * i + 2], 0)
           for i in range(n0)]
    while seg:
        x0s = np.array([s[0] for s in seg])
        x2s = np.array([s[2] for s in seg])
        q1 = 0.25 * (3.0 * x0s + x2s)
        q3 = 0.25 * (x0s + 3.0 * x2s)
        fq = f(np.concatenate([q1, q3]))
        fq1, fq3 = fq[:len(seg)], fq[len(seg):]
        nxt = []
        for i, (x0, x1, x2, f0, f1, f2, depth) in enumerate(seg):
            h = x2 - x0
            if min(f0, f1, f2, fq1[i], fq3[i]) < log_dip and h <= 1.0e-3:
                total += _excised_model(k, a, x0, x2, coarse)
                continue
            whole = h / 6.0 * (f0 + 4.0 * f1 + f2)
            left = h / 12.0 * (f0 + 4.0 * fq1[i] + f1)
            right = h / 12.0 * (f1 + 4.0 * fq3[i] + f2)
            err = (left + right - whole) / 15.0
            if abs(err) <= tol * (h / span):
                total += left + right + err
                continue
            if depth >= MAX_QUAD_DEPTH:
                raise QuadratureStall(
                    f"refinement depth exhausted on [{x0}, {x2}]")
            nxt.append((x0, float(q1[i]), x1, f0, float(fq1[i]), f1,
                        depth + 1))
            nxt.append((x1, float(q3[i]), x2, f1, float(fq3[i]), f2,
                        depth + 1))
        seg = nxt
    return total


def _excised_model(k: int, a: complex, x0: float, x2: float,
                   cfg: EvalConfig) -> float:
    """Analytic integral of the linear-crossing model over one tiny segment.

    Near an on-line a-point t* the integrand is log(|c| |t - t*|) with
    c = zeta^(k+1)(1/2 + i t*); its antiderivative x (log|c x| - 1) covers
    the excised gap and the shoulders in one stroke.
    """
    ts = np.linspace(x0, x2, 65)
    for _ in range(3):
        vals = np.abs(a - zeta_deriv_many(k, 0.5 + 1j * ts, cfg))
        j = int(np.argmin(vals))
        lo = ts[max(0, j - 1)]
        hi = ts[min(len(ts) - 1, j + 1)]
        ts = np.linspace(lo, hi, 65)
    t_star = float(ts[64 // 2])
    c = max(abs(zeta_derivs([k + 1], 0.5 + 1j * t_star, cfg)[k + 1]), 1e-300)

    def anti(x: float) -> float:
        if x == 0.0:
            return 0.0
        return x * (math.log(abs(c * x)) - 1.0)

    return anti(x2 - t_star) - anti(x0 - t_star)


def littlewood_balance(k: int, a: complex, t_height: float, u: float,
                       points: list[APoint],
                       cfg: EvalConfig = DEFAULT_CONFIG) -> MainTermReport:
    """Balance 2pi sum_{beta>1/2}(beta-1/2) against the log-modulus integral.

    predicted = int_T^(T+U) log|a - zeta^(k)(1/2+it)| dt - U log|a|;
    the report normalizes the remainder by log T.
    """
    if a == 0:
        raise ValueError("the balance requires a != 0")
    observed = TWO_PI * beta_half_sum(points, t_height, t_height + u)
    integral = log_distance_integral(k, a, t_height, t_height + u, cfg)
    predicted = integral - u * math.log(abs(complex(a)))
    return MainTermReport(observed=observed, predicted=predicted,
                          normalizer=math.log(t_height))


def beta_sum_check(k: int, a: complex, b: float, t_height: float, u: float,
                   points: list[APoint]) -> MainTermReport:
    """Observed sum of (beta + b) against the closed-form main term,
    normalized by U / log T."""
    if a == 0:
        raise ValueError("beta_sum_check requires a != 0")
    observed = sum((p.beta + b) * p.multiplicity
                   for p in _window_points(points, t_height, t_height + u))
    predicted = beta_sum_main(k, a, b, t_height, u)
    return MainTermReport(observed=observed, predicted=predicted,
                          normalizer=u / math.log(t_height))
