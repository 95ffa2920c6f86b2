"""Argument-principle location of a-points in rectangles.

A rectangle's winding number (1/2pi) Delta arg(zeta^(k)(s) - a) is tracked
along each boundary segment with adaptive bisection: a segment is split
until every sampled phase step is below ``phase_step_cap``, which keeps the
unwrapped argument unambiguous with a comfortable safety margin.  Windows
are then subdivided -- horizontal cuts first, sigma cuts once a strip is
thin -- until each sub-box holds exactly one a-point, which Newton
refinement (step (zeta^(k)-a)/zeta^(k+1)) polishes to residual <= 1e-11 and
a winding-1 certification box of diameter <= 1e-3 encloses.

Cut placement is a pure function of (k, a, sigma-range, nominal height,
cfg): when a sample lands on an a-point the cut is re-tried at deterministic
irrational offsets, so adjacent windows -- possibly scanned by different
worker processes -- always agree about shared boundaries and the merged
output is reproducible byte for byte.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BoundaryRoot,
    MultiplicityUnresolved,
    NearRoot,
    NewtonDiverged,
    Unresolved,
)
from .zeta import DEFAULT_CONFIG, EvalConfig, zeta_deriv_many, zeta_derivs

TWO_PI = 2.0 * math.pi

# deterministic cut perturbation: irrational multiples of ~1e-6
PERTURB = 1.0e-6 / math.sqrt(2.0)
MAX_CUT_TRIES = 64

NEWTON_TOL = 1.0e-11          # stop threshold for |zeta^(k) - a|
RESIDUAL_MAX = 1.0e-9         # certified-point contract
CERT_HALF = 3.5e-4            # half-side of certification square (diam <= 1e-3)
LEAF_T = 0.35                 # strip height at which sigma localization starts
LEAF_SIGMA = 0.7              # box width handed to Newton


@dataclass(frozen=True)
class APoint:
    """A certified root of zeta^(k)(s) = a.

    ``residual`` is |zeta^(k)(rho) - a| for scanned points; trivial-box
    roots near the negative real axis store the final Newton-step length
    instead, because the factorially large local derivative there puts any
    absolute value tolerance below the double-precision floor.
    """

    k: int
    a: complex
    beta: float
    gamma: float
    residual: float
    cert_box: tuple[float, float, float, float]   # sigma_lo, t_lo, sigma_hi, t_hi
    window_id: str = ""
    multiplicity: int = 1

    @property
    def s(self) -> complex:
        return complex(self.beta, self.gamma)


@dataclass(frozen=True)
class ScanWindow:
    """Height range and sigma bounds handed to the subdivision driver."""

    t_lo: float
    t_hi: float
    sigma_lo: float
    sigma_hi: float
    max_depth: int = 40
    phase_step_cap: float = math.pi / 3.0

    def __post_init__(self):
        if not (self.t_hi >= self.t_lo >= 1.0):
            raise ValueError("need t_hi >= t_lo >= 1")
        if not (self.sigma_lo < 0.5 < self.sigma_hi):
            raise ValueError("sigma range must straddle the critical line")
        if not 0.0 < self.phase_step_cap <= math.pi / 2.0:
            raise ValueError("phase_step_cap must lie in (0, pi/2]")


@dataclass
class UnresolvedBox:
    """Maximally subdivided box that still holds winding >= 2."""

    rect: tuple[float, float, float, float]
    winding: int


@dataclass
class LocateResult:
    points: list[APoint] = field(default_factory=list)
    unresolved: list[UnresolvedBox] = field(default_factory=list)
    window_winding: int = 0


# --------------------------------------------------------------------------
# adaptive phase tracking along straight segments
# --------------------------------------------------------------------------

class PhaseChain:
    """Cached adaptive samples of f along a parametrized straight line.

    Parameters are real coordinates (a height t or an abscissa sigma); the
    chain inserts midpoints until successive phase steps fall below the cap,
    and remembers every sample so overlapping queries stay cheap.
    """

    __slots__ = ("point_of", "evaluate", "cap", "boundary_eps", "min_dx",
                 "params", "vals")

    def __init__(self, point_of, evaluate, cap, boundary_eps, min_dx):
        self.point_of = point_of          # vectorized param -> complex point
        self.evaluate = evaluate          # vectorized points -> f values
        self.cap = cap
        self.boundary_eps = boundary_eps
        self.min_dx = min_dx
        self.params = np.empty(0)
        self.vals = np.empty(0, dtype=complex)

    def _insert(self, xs: np.ndarray):
        pts = self.point_of(xs)
        vals = self.evaluate(pts)
        small = np.abs(vals) < self.boundary_eps
        if np.any(small):
            i = int(np.nonzero(small)[0][0])
            raise BoundaryRoot(complex(pts[i]), complex(vals[i]))
        params = np.concatenate([self.params, xs])
        vals = np.concatenate([self.vals, vals])
        order = np.argsort(params, kind="stable")
        self.params = params[order]
        self.vals = vals[order]

    def ensure(self, x: float):
        i = np.searchsorted(self.params, x)
        if i < len(self.params) and self.params[i] == x:
            return
        self._insert(np.array([x]))

    def phase_between(self, x0: float, x1: float, *, initial_step: float) -> float:
        """Unwrapped phase change of f from x0 to x1 (x0 < x1)."""
        if x1 <= x0:
            if x1 == x0:
                return 0.0
            return -self.phase_between(x1, x0, initial_step=initial_step)
        self.ensure(x0)
        self.ensure(x1)
        n0 = int((x1 - x0) / initial_step) + 1
        known = self.params[(self.params > x0) & (self.params < x1)]
        if n0 > 1 and known.size < n0 - 1:
            seeds = x0 + (x1 - x0) * np.arange(1, n0) / n0
            fresh = seeds[~np.isin(seeds, known)]
            if fresh.size:
                self._insert(fresh)
        while True:
            lo = np.searchsorted(self.params, x0)
            hi = np.searchsorted(self.params, x1, side="right")
            p = self.params[lo:hi]
            v = self.vals[lo:hi]
            dphi = np.angle(v[1:] / v[:-1])
            bad = np.abs(dphi) >= self.cap
            if not np.any(bad):
                return float(dphi.sum())
            widths = p[1:] - p[:-1]
            if np.all(widths[bad] <= self.min_dx):
                raise Unresolved(
                    f"phase step stuck above cap near param {p[:-1][bad][0]}")
            refinable = bad & (widths > self.min_dx)
            mids = 0.5 * (p[:-1][refinable] + p[1:][refinable])
            self._insert(mids)


def _initial_step(t_scale: float, k: int, cap: float) -> float:
    """Sampling step sized to the expected phase rate ~ log(t/2pi)."""
    rate = max(2.0, math.log(max(t_scale, 20.0) / TWO_PI) + 0.5 * k + 2.0)
    return min(0.25, 0.9 * cap / rate)


def _boundary_eps(a: complex) -> float:
    return 1.0e-8 * (1.0 + abs(a))


def winding(k: int, a: complex,
            rect: tuple[float, float, float, float],
            cfg: EvalConfig = DEFAULT_CONFIG,
            *, phase_step_cap: float = math.pi / 3.0,
            max_depth: int = 40) -> int:
    """Winding number of zeta^(k) - a around the rectangle boundary.

    rect is (sigma_lo, t_lo, sigma_hi, t_hi).  Raises BoundaryRoot when an
    a-point sits on the contour (the caller perturbs the rectangle) and
    Unresolved when adaptive bisection cannot settle the phase.
    """
    sl, tl, sr, th = rect
    if not (sr > sl and th > tl):
        raise ValueError("degenerate rectangle")
    eps = _boundary_eps(a)
    step = _initial_step(max(abs(tl), abs(th)), k, phase_step_cap)

    def ev(pts):
        return zeta_deriv_many(k, pts, cfg) - a

    min_dx = max((sr - sl), (th - tl)) * 2.0 ** (-max_depth)
    total = 0.0
    # counterclockwise: bottom, right, top (reversed), left (reversed)
    bottom = PhaseChain(lambda x: x + 1j * tl, ev, phase_step_cap, eps, min_dx)
    total += bottom.phase_between(sl, sr, initial_step=step)
    right = PhaseChain(lambda x: sr + 1j * x, ev, phase_step_cap, eps, min_dx)
    total += right.phase_between(tl, th, initial_step=step)
    top = PhaseChain(lambda x: x + 1j * th, ev, phase_step_cap, eps, min_dx)
    total -= top.phase_between(sl, sr, initial_step=step)
    left = PhaseChain(lambda x: sl + 1j * x, ev, phase_step_cap, eps, min_dx)
    total -= left.phase_between(tl, th, initial_step=step)

    w = total / TWO_PI
    nearest = round(w)
    if abs(w - nearest) > 0.25:
        raise Unresolved(f"winding {w:.3f} not within 0.25 of an integer")
    return int(nearest)


# --------------------------------------------------------------------------
# subdivision driver
# --------------------------------------------------------------------------

class _WindowScanner:
    """Shared-chain subdivision of one window; see module docstring."""

    def __init__(self, k: int, a: complex, window: ScanWindow,
                 cfg: EvalConfig, window_id: str = ""):
        self.k = k
        self.a = complex(a)
        self.win = window
        self.cfg = cfg
        self.coarse = cfg.coarse()
        self.window_id = window_id
        self.eps = _boundary_eps(a)
        self.cap = window.phase_step_cap
        self.min_dx = max(window.t_hi - window.t_lo, 1.0) \
            * 2.0 ** (-window.max_depth)
        self.hstep = _initial_step(window.t_hi, k, self.cap)
        self.sstep = min(0.33, self.hstep * 2.0)
        self.hchains: dict[float, PhaseChain] = {}
        self.vchains: dict[float, PhaseChain] = {}
        self.result = LocateResult()

    # -- chain plumbing ----------------------------------------------------

    def _ev(self, pts):
        return zeta_deriv_many(self.k, pts, self.coarse) - self.a

    def _hchain(self, t: float) -> PhaseChain:
        ch = self.hchains.get(t)
        if ch is None:
            ch = PhaseChain(lambda x, t=t: x + 1j * t, self._ev,
                            self.cap, self.eps, self.min_dx)
            self.hchains[t] = ch
        return ch

    def _vchain(self, sigma: float) -> PhaseChain:
        ch = self.vchains.get(sigma)
        if ch is None:
            ch = PhaseChain(lambda x, s=sigma: s + 1j * x, self._ev,
                            self.cap, self.eps, self.min_dx)
            self.vchains[sigma] = ch
        return ch

    def rect_winding(self, sl: float, sr: float, ta: float, tb: float) -> int:
        total = self._hchain(ta).phase_between(sl, sr, initial_step=self.sstep)
        total += self._vchain(sr).phase_between(ta, tb, initial_step=self.hstep)
        total -= self._hchain(tb).phase_between(sl, sr, initial_step=self.sstep)
        total -= self._vchain(sl).phase_between(ta, tb, initial_step=self.hstep)
        w = total / TWO_PI
        nearest = round(w)
        if abs(w - nearest) > 0.25:
            raise Unresolved(f"winding {w:.3f} not within 0.25 of an integer")
        return int(nearest)

    def resolve_hcut(self, nominal: float) -> float:
        """Height for a horizontal cut, nudged off any boundary a-point.

        Pure function of (k, a, sigma range, nominal, cfg): adjacent windows
        recompute identical cuts for shared edges.
        """
        for m in range(MAX_CUT_TRIES):
            t = nominal + m * PERTURB
            try:
                self._hchain(t).phase_between(
                    self.win.sigma_lo, self.win.sigma_hi,
                    initial_step=self.sstep)
                return t
            except BoundaryRoot:
                self.hchains.pop(t, None)
        raise Unresolved(f"could not place a clear cut near t = {nominal}")

    def resolve_vcut(self, nominal: float, ta: float, tb: float) -> float:
        for m in range(MAX_CUT_TRIES):
            sig = nominal + m * PERTURB
            try:
                self._vchain(sig).phase_between(ta, tb,
                                                initial_step=self.hstep)
                return sig
            except BoundaryRoot:
                self.vchains.pop(sig, None)
        raise Unresolved(f"could not place a clear cut near sigma = {nominal}")

    # -- driver --------------------------------------------------------------

    def run(self) -> LocateResult:
        win = self.win
        if win.t_hi <= win.t_lo:
            return self.result
        ta = self.resolve_hcut(win.t_lo)
        tb = self.resolve_hcut(win.t_hi)
        sl, sr = win.sigma_lo, win.sigma_hi
        w = self.rect_winding(sl, sr, ta, tb)
        self.result.window_winding = w
        self._split(sl, sr, ta, tb, w)
        self.result.points.sort(key=lambda p: (p.gamma, p.beta))
        self._check_separation()
        return self.result

    def _split(self, sl: float, sr: float, ta: float, tb: float, w: int):
        stack = [(sl, sr, ta, tb, w)]
        while stack:
            sl, sr, ta, tb, w = stack.pop()
            if w == 0:
                continue
            height = tb - ta
            width = sr - sl
            if w == 1 and height <= LEAF_T and width <= LEAF_SIGMA:
                self._capture(sl, sr, ta, tb)
                continue
            if height <= self.min_dx and width <= self.min_dx:
                self.result.unresolved.append(
                    UnresolvedBox((sl, ta, sr, tb), w))
                continue
            # cut the dimension that is still larger relative to leaf size
            if height / LEAF_T >= width / LEAF_SIGMA:
                tc = self.resolve_hcut(0.5 * (ta + tb))
                if not ta < tc < tb:
                    tc = self.resolve_hcut(ta + 0.25 * (tb - ta))
                w_low = self.rect_winding(sl, sr, ta, tc)
                if not 0 <= w_low <= w:
                    raise Unresolved(
                        f"child winding {w_low} outside parent {w}")
                stack.append((sl, sr, tc, tb, w - w_low))
                stack.append((sl, sr, ta, tc, w_low))
            else:
                sc = self.resolve_vcut(0.5 * (sl + sr), ta, tb)
                if not sl < sc < sr:
                    sc = self.resolve_vcut(sl + 0.25 * (sr - sl), ta, tb)
                w_left = self.rect_winding(sl, sc, ta, tb)
                if not 0 <= w_left <= w:
                    raise Unresolved(
                        f"child winding {w_left} outside parent {w}")
                stack.append((sc, sr, ta, tb, w - w_left))
                stack.append((sl, sc, ta, tb, w_left))

    # -- refinement ----------------------------------------------------------

    def _newton(self, start: complex, box, tol_escape: float = 1.5
                ) -> complex | None:
        s = start
        for it in range(30):
            d = zeta_derivs([self.k, self.k + 1], s, self.coarse)
            f = d[self.k] - self.a
            if abs(f) < 1.0e-6:
                break
            fp = d[self.k + 1]
            if fp == 0:
                return None
            s = s - f / fp
            if not self._near_box(s, box, tol_escape):
                return None
        # finish in full precision; the step floor covers points where the
        # representation quantum of s already moves f by more than the tol
        for _ in range(20):
            d = zeta_derivs([self.k, self.k + 1], s, self.cfg)
            f = d[self.k] - self.a
            fp = d[self.k + 1]
            if fp == 0:
                return None
            step = f / fp
            if abs(f) <= NEWTON_TOL or abs(step) <= 5e-14 * (1.0 + abs(s)):
                return s
            s = s - step
            if not self._near_box(s, box, tol_escape):
                return None
        return None

    @staticmethod
    def _near_box(s: complex, box, margin: float) -> bool:
        sl, ta, sr, tb = box
        pad_s = margin * (sr - sl) + 0.2
        pad_t = margin * (tb - ta) + 0.2
        return (sl - pad_s <= s.real <= sr + pad_s
                and ta - pad_t <= s.imag <= tb + pad_t)

    def _capture(self, sl: float, sr: float, ta: float, tb: float):
        box = (sl, ta, sr, tb)
        center = complex(0.5 * (sl + sr), 0.5 * (ta + tb))
        root = self._newton(center, box)
        if root is None or not self._inside(root, box, 1e-6):
            root = self._bisect_then_newton(sl, sr, ta, tb)
            if root is None:
                self.result.unresolved.append(
                    UnresolvedBox((sl, ta, sr, tb), 1))
                return
        self._certify(root, box)

    def _inside(self, s: complex, box, slack: float) -> bool:
        sl, ta, sr, tb = box
        return (sl - slack <= s.real <= sr + slack
                and ta - slack <= s.imag <= tb + slack)

    def _bisect_then_newton(self, sl, sr, ta, tb) -> complex | None:
        """Grid-refinement fallback when Newton from the center strays."""
        for _ in range(64):
            if max(sr - sl, tb - ta) <= 2.0e-3:
                break
            if sr - sl >= tb - ta:
                sc = self.resolve_vcut(0.5 * (sl + sr), ta, tb)
                if self.rect_winding(sl, sc, ta, tb) == 1:
                    sr = sc
                else:
                    sl = sc
            else:
                tc = self.resolve_hcut(0.5 * (ta + tb))
                if self.rect_winding(sl, sr, ta, tc) == 1:
                    tb = tc
                else:
                    ta = tc
        center = complex(0.5 * (sl + sr), 0.5 * (ta + tb))
        root = self._newton(center, (sl, ta, sr, tb), tol_escape=50.0)
        if root is not None and self._inside(root, (sl, ta, sr, tb), 1e-3):
            return root
        return None

    def _certify(self, root: complex, box):
        """Winding-1 certification square around the refined root."""
        for m in range(8):
            c = root + m * PERTURB * (1 + 1j)
            cert = (c.real - CERT_HALF, c.imag - CERT_HALF,
                    c.real + CERT_HALF, c.imag + CERT_HALF)
            try:
                w = winding(self.k, self.a, cert, self.cfg,
                            phase_step_cap=self.cap)
            except BoundaryRoot:
                continue
            if w == 1:
                d = zeta_derivs([self.k], root, self.cfg)
                residual = abs(d[self.k] - self.a)
                if residual > RESIDUAL_MAX:
                    raise NewtonDiverged(
                        f"residual {residual:.2e} above contract at {root}")
                self.result.points.append(APoint(
                    k=self.k, a=self.a, beta=root.real, gamma=root.imag,
                    residual=residual, cert_box=cert,
                    window_id=self.window_id))
                return
            if w >= 2:
                self.result.unresolved.append(UnresolvedBox(cert, w))
                return
            break  # w == 0: refined root slid away; re-localize
        sl, ta, sr, tb = box
        root2 = self._bisect_then_newton(sl, sr, ta, tb)
        if root2 is not None and abs(root2 - root) > 1e-8:
            self._certify(root2, box)
        else:
            self.result.unresolved.append(UnresolvedBox(box, 1))

    def _check_separation(self):
        pts = self.result.points
        for i in range(1, len(pts)):
            if abs(pts[i].s - pts[i - 1].s) < 1.0e-4:
                raise MultiplicityUnresolved(
                    f"points {pts[i - 1].s} and {pts[i].s} closer than 1e-4")


def locate(k: int, a: complex, window: ScanWindow,
           cfg: EvalConfig = DEFAULT_CONFIG,
           window_id: str = "") -> list[APoint]:
    """All a-points of zeta^(k) in the window, certified and sorted.

    Sorted by gamma ascending (ties by beta); every point carries a
    winding-1 certification box of diameter <= 1e-3 and a residual at most
    1e-9.  Boxes that cannot be resolved are reported through
    ``locate_result`` and raise here only by omission in the count.
    """
    return locate_result(k, a, window, cfg, window_id).points


def locate_result(k: int, a: complex, window: ScanWindow,
                  cfg: EvalConfig = DEFAULT_CONFIG,
                  window_id: str = "") -> LocateResult:
    return _WindowScanner(k, a, window, cfg, window_id).run()


# --------------------------------------------------------------------------
# diagnostics built on locate
# --------------------------------------------------------------------------

@dataclass
class StripReport:
    k: int
    a: complex
    t_height: float
    count: int
    log_ratio: float


def strip_count_check(k: int, a: complex, t_height: float,
                      sigma_lo: float, sigma_hi: float,
                      cfg: EvalConfig = DEFAULT_CONFIG) -> StripReport:
    """Count of a-points with T <= gamma < T+1 and its ratio to log T."""
    if t_height < 2.0:
        raise ValueError("T must be at least 2")
    window = ScanWindow(t_lo=t_height, t_hi=t_height + 1.0,
                        sigma_lo=sigma_lo, sigma_hi=sigma_hi)
    pts = locate(k, a, window, cfg)
    return StripReport(k=k, a=complex(a), t_height=t_height, count=len(pts),
                       log_ratio=len(pts) / math.log(t_height))


def local_expansion_residual(k: int, a: complex, s: complex,
                             sigma_lo: float, sigma_hi: float,
                             cfg: EvalConfig = DEFAULT_CONFIG,
                             points: list[APoint] | None = None) -> complex:
    """Log-derivative minus the sum over a-points within unit height.

    Returns zeta^(k+1)(s)/(zeta^(k)(s) - a) - sum_{|gamma - t| < 1} 1/(s-rho)
    using located points; |result| should stay O(log t) away from roots.
    """
    t = s.imag
    if t < 10.0:
        raise ValueError("t must be at least 10")
    if points is None:
        window = ScanWindow(t_lo=t - 1.0, t_hi=t + 1.0,
                            sigma_lo=sigma_lo, sigma_hi=sigma_hi)
        points = locate(k, a, window, cfg)
    near = [p for p in points if abs(p.gamma - t) < 1.0]
    for p in near:
        if abs(s - p.s) < 1.0e-3:
            raise NearRoot(f"s within 1e-3 of a-point at {p.s}")
    d = zeta_derivs([k, k + 1], s, cfg)
    val = d[k + 1] / (d[k] - a)
    for p in near:
        val -= 1.0 / (s - p.s)
    return val
