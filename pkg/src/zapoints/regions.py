"""A-point-free abscissas and the trivial a-points near the real axis.

Right of ``e2`` the Dirichlet-series majorant sum_{n>=2} (log n)^k n^-sigma
drops below |a| (for a = 0, below the leading (log 2)^k 2^-sigma term), so
zeta^(k)(s) = a has no solutions there; this bound is rigorous up to the
integral tail estimate.  Left of ``e1`` the modulus grows like |Gamma|, but
the certificate is empirical: a probe grid combining direct evaluation at
low height with the left-half-plane main term (and a relative-error
allowance for its unquantified correction factor) witnesses
|zeta^(k)| > 2|a| on the line.

Near the negative real axis the a-points become regular: for n past some
threshold the box (-2n-1, -2n+1) x (-1, 1) holds exactly one, approaching
s = -2n.  ``trivial_apoint`` certifies that box by winding number and
refines the root by Newton iteration from -2n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import NewtonDiverged, WindingNotOne
from .scan import CERT_HALF, NEWTON_TOL, RESIDUAL_MAX, APoint, winding
from .zeta import (
    DEFAULT_CONFIG,
    LOG_2PI,
    EvalConfig,
    _log_cos_many,
    loggamma_many,
    zeta,
    zeta_deriv_many,
    zeta_derivs,
)

# box side shrink before winding, keeps roots off the contour
BOX_SHRINK = 1.0e-3
# empirical allowance constant for the left main term's 1 + O(1/log s) factor
LEFT_ALLOWANCE = 3.0
# probe grid: direct evaluation below this height, main-term bound above
DIRECT_T_MAX = 60.0
PROBE_STEP = 0.1


@dataclass(frozen=True)
class RegionBounds:
    """Free abscissas for one (k, a): no a-points right of e2, and none
    left of e1 with |t| >= 1.  The strict variants carry the extra margin
    used when building scan contours."""

    k: int
    a: complex
    e1: float
    e2: float
    e1_strict: float
    e2_strict: float
    t_max: float

    def __post_init__(self):
        if not (self.e1_strict <= self.e1 <= 0.0):
            raise ValueError("need e1_strict <= e1 <= 0")
        if not (1.0 <= self.e2 <= self.e2_strict):
            raise ValueError("need 1 <= e2 <= e2_strict")

    @property
    def scan_sigma_lo(self) -> float:
        return self.e1_strict - 0.25

    @property
    def scan_sigma_hi(self) -> float:
        return self.e2_strict + 0.25


@dataclass
class TrivialBox:
    """One box (-2n-1, -2n+1) x (-1, 1) and its certified a-point."""

    n: int
    box: tuple[float, float, float, float]
    winding: int
    root: APoint | None
    n_min: int | None = None


def majorant(k: int, sigma: float, n_terms: int = 4096) -> float:
    """Upper bound for |zeta^(k)(s)| on Re s >= sigma.

    Partial sum of (log n)^k n^-sigma plus the exact integral tail
    int_N^inf (log x)^k x^-sigma dx (the summand is decreasing there).
    """
    if sigma <= 1.0:
        return math.inf
    n = np.arange(2, n_terms)
    total = float(np.sum(np.log(n) ** k * n ** (-float(sigma))))
    u = sigma - 1.0
    ln = math.log(n_terms)
    tail = 0.0
    coef = 1.0
    for i in range(k + 1):
        tail += coef * ln ** (k - i) / u ** (i + 1)
        coef *= (k - i)
    return total + n_terms ** (1.0 - sigma) * tail


def _majorant_rest(k: int, sigma: float) -> float:
    """Majorant of sum_{n>=3} (log n)^k n^-sigma (the a = 0 comparison)."""
    return majorant(k, sigma) - math.log(2.0) ** k * 2.0 ** (-sigma)


def find_e2(k: int, a: complex) -> float:
    """Smallest half-integer abscissa with no a-points to its right.

    For a != 0 this is where the majorant drops below |a|; for a = 0 it is
    where the n = 2 term dominates the rest of the series, which also keeps
    zeta^(k) away from zero.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    sigma = 1.5
    while True:
        if a == 0:
            ok = _majorant_rest(k, sigma) < math.log(2.0) ** k * 2.0 ** (-sigma)
        else:
            ok = majorant(k, sigma) < abs(complex(a))
        if ok:
            return sigma
        sigma += 0.5


def _log_main_lower(k: int, sigma: float, t: np.ndarray) -> np.ndarray:
    """log of a lower bound for |zeta^(k)(sigma + i t)|, sigma <= -1, t >= 1.

    Based on the left-half-plane main term
    2 (2pi)^-s Gamma(s) (log s)^k cos(pi s/2) zeta(s) at s = 1 - sigma - i t,
    shrunk by (1 - LEFT_ALLOWANCE/|log s|)^k for its unquantified relative
    correction; entries where the allowance is vacuous come out as -inf.
    """
    s = (1.0 - sigma) - 1j * t
    log_mod = (math.log(2.0) - s.real * LOG_2PI
               + np.real(loggamma_many(s))
               + k * np.log(np.abs(np.log(s)))
               + np.real(_log_cos_many(0.5 * math.pi * s)))
    # |zeta(Re s - i t)| >= 2 - zeta(Re s) on the real-part line
    log_mod += math.log(max(2.0 - zeta(complex(1.0 - sigma)).real, 1e-12))
    allow = 1.0 - LEFT_ALLOWANCE / np.abs(np.log(s))
    with np.errstate(divide="ignore"):
        log_mod += k * np.where(allow > 0.0, np.log(np.maximum(allow, 1e-12)),
                                -np.inf)
    return log_mod


def find_e1(k: int, a: complex, t_max: float = 2100.0,
            cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Half-integer abscissa sigma* <= -1 with |zeta^(k)| > 2|a| certified
    on the probe grid {sigma*, 1 <= t <= t_max}.

    Empirical (grid) certificate: direct evaluation up to t = 60 where the
    asymptotic allowance is weak, the main-term lower bound beyond.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    threshold = 2.0 * abs(complex(a)) + 0.5
    sigma = -1.0
    while sigma > -30.0:
        t_direct = np.arange(1.0, DIRECT_T_MAX + PROBE_STEP, PROBE_STEP)
        direct = np.abs(zeta_deriv_many(
            k, sigma + 1j * t_direct, cfg.coarse()))
        if float(direct.min()) > threshold:
            t_far = np.arange(DIRECT_T_MAX, t_max + PROBE_STEP, PROBE_STEP)
            lower = _log_main_lower(k, sigma, t_far)
            if float(lower.min()) > math.log(threshold):
                return sigma
        sigma -= 0.5
    raise RuntimeError("no certified left abscissa found above sigma = -30")


@lru_cache(maxsize=64)
def region_bounds(k: int, a: complex, t_max: float = 2100.0) -> RegionBounds:
    """Free-region bounds for (k, a); cached, immutable, shareable."""
    a = complex(a)
    e2 = find_e2(k, a)
    e1 = find_e1(k, a, t_max)
    return RegionBounds(k=k, a=a, e1=e1, e2=e2,
                        e1_strict=e1 - 0.5, e2_strict=e2 + 0.5,
                        t_max=t_max)


def trivial_box_rect(n: int) -> tuple[float, float, float, float]:
    return (-2.0 * n - 1.0, -1.0, -2.0 * n + 1.0, 1.0)


def _strictly_inside(s: complex, rect) -> bool:
    return rect[0] < s.real < rect[2] and rect[1] < s.imag < rect[3]


def _newton_near_axis(k: int, a: complex, start: complex, rect, cfg
                      ) -> tuple[complex | None, float]:
    sl, tl, sr, th = rect
    s = start
    for _ in range(80):
        d = zeta_derivs([k, k + 1], s, cfg)
        f = d[k] - a
        if d[k + 1] == 0:
            return None, math.inf
        step = f / d[k + 1]
        if abs(f) <= NEWTON_TOL or abs(step) <= 1e-13 * (1.0 + abs(s)):
            return s, min(abs(step), abs(f))
        s = s - step
        if not (sl - 0.5 <= s.real <= sr + 0.5 and abs(s.imag) <= 1.5):
            return None, math.inf
    return None, math.inf


def _shrink_to_root(k: int, a: complex, rect, cfg, diam: float = 0.05
                    ) -> tuple[float, float, float, float] | None:
    """Keep bisecting towards the winding-1 child until the box is small."""
    sl, tl, sr, th = rect
    for _ in range(64):
        if max(sr - sl, th - tl) <= diam:
            return (sl, tl, sr, th)
        if sr - sl >= th - tl:
            for m in range(8):
                cut = 0.5 * (sl + sr) + m * 1e-4
                try:
                    w = winding(k, a, (sl, tl, cut, th), cfg)
                except Exception:
                    continue
                if w == 1:
                    sr = cut
                else:
                    sl = cut
                break
            else:
                return None
        else:
            for m in range(8):
                cut = 0.5 * (tl + th) + m * 1e-4
                try:
                    w = winding(k, a, (sl, tl, sr, cut), cfg)
                except Exception:
                    continue
                if w == 1:
                    th = cut
                else:
                    tl = cut
                break
            else:
                return None
    return None


def trivial_apoint(k: int, a: complex, n: int,
                   cfg: EvalConfig = DEFAULT_CONFIG,
                   n_min: int | None = None) -> TrivialBox:
    """Certify the single a-point in the box around s = -2n.

    Computes the winding of the (slightly shrunk) box boundary; on winding
    one, Newton iteration from s0 = -2n refines the root and a small
    winding-1 square certifies it.  Any other winding raises WindingNotOne.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    sl, tl, sr, th = trivial_box_rect(n)
    rect = (sl + BOX_SHRINK, tl + BOX_SHRINK, sr - BOX_SHRINK, th - BOX_SHRINK)
    w = winding(k, a, rect, cfg)
    if w != 1:
        raise WindingNotOne(n, w)
    # Newton with a step-based stop: |zeta^(k+1)| grows factorially out
    # here, so |zeta^(k) - a| cannot reach an absolute tolerance -- the
    # meaningful residual is the last Newton step (distance-to-root scale).
    root, residual = _newton_near_axis(k, a, complex(-2.0 * n, 0.0),
                                       rect, cfg)
    if root is not None and not _strictly_inside(root, rect):
        root = None          # converged to a neighboring box's root
    if root is None:
        # winding-guided bisection towards the root, then retry Newton
        small = _shrink_to_root(k, a, rect, cfg)
        if small is not None:
            center = complex(0.5 * (small[0] + small[2]),
                             0.5 * (small[1] + small[3]))
            root, residual = _newton_near_axis(k, a, center, small, cfg)
    if root is None:
        raise NewtonDiverged(f"refinement failed in box n={n}")
    if not _strictly_inside(root, rect):
        raise NewtonDiverged(f"refined root {root} left box n={n}")
    cert = (root.real - CERT_HALF, root.imag - CERT_HALF,
            root.real + CERT_HALF, root.imag + CERT_HALF)
    if winding(k, a, cert, cfg) != 1:
        raise WindingNotOne(n, w)
    if residual > RESIDUAL_MAX:
        raise NewtonDiverged(f"residual {residual:.2e} above contract")
    point = APoint(k=k, a=complex(a), beta=root.real, gamma=root.imag,
                   residual=residual, cert_box=cert,
                   window_id=f"trivial-n{n}")
    return TrivialBox(n=n, box=rect, winding=w, root=point, n_min=n_min)


def find_n_min(k: int, a: complex, cfg: EvalConfig = DEFAULT_CONFIG,
               start: int = 30) -> int:
    """Downward search for the first box index below which winding != 1."""
    for n in range(start, 1, -1):
        try:
            rect_ok = trivial_apoint(k, a, n, cfg)
        except (WindingNotOne, NewtonDiverged):
            return n + 1
        if rect_ok.winding != 1:
            return n + 1
    return 2
