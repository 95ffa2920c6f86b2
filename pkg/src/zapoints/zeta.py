"""Numerical kernel: zeta(s), chi(s), log-gamma and derivatives zeta^(k)(s).

Evaluation strategy
-------------------
* ``Re s >= 1/2``: Euler-Maclaurin summation,

      zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
                + sum_{j>=1} B_2j/(2j)! * s(s+1)...(s+2j-2) * N^(1-s-2j),

  with N = max(20, ceil(1.3*|t|/2pi)) and as many Bernoulli corrections as
  the target tolerance requires (at least ``em_terms``, at most 60 -- the
  correction terms shrink geometrically at this N).
* ``Re s < 1/2``: reflection zeta(s) = chi(s) * zeta(1-s) with
  chi(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s), computed through logarithms
  so that nothing overflows before the final exponential.
* Derivatives: Cauchy circle quadrature

      zeta^(k)(s) = k!/(2 pi i) * integral of zeta(z)/(z-s)^(k+1) dz

  over |z-s| = r with an equispaced trapezoid rule (exact geometric decay of
  the quadrature error in the node count), or, far to the right, the
  directly summed series zeta^(k)(s) = sum_{n>=2} (-log n)^k n^-s with an
  integral tail correction.

All functions are pure: results depend only on the arguments and the
``EvalConfig``, never on batch composition, so concurrent and partitioned
evaluation is reproducible bit for bit.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CircleHitsPole,
    EvaluatorOverflow,
    OutOfRegion,
    PoleAtOne,
    PrecisionLoss,
)

TWO_PI = 2.0 * math.pi
LOG_2PI = math.log(TWO_PI)

# |t| beyond this is untested territory for the double-precision kernel.
T_MAX_SUPPORTED = 1.0e5

# Smallest sigma at which the tail-corrected Dirichlet series for
# zeta^(k) is both cheap and at full double accuracy; below it the circle
# quadrature is used.  (The plain series converges far too slowly near
# sigma = 2 to certify 1e-12, see the tail bound in _deriv_series_n.)
SERIES_SIGMA_MIN = 4.0

_MAX_BERNOULLI_TERMS = 60


def _bernoulli_over_factorial(jmax: int) -> np.ndarray:
    """B_{2j}/(2j)! for j = 0..jmax, computed exactly then rounded once."""
    nmax = 2 * jmax
    b = [Fraction(1)]
    for n in range(1, nmax + 1):
        acc = Fraction(0)
        for k in range(n):
            acc += math.comb(n + 1, k) * b[k]
        b.append(-acc / (n + 1))
    out = np.zeros(jmax + 1)
    out[0] = 1.0
    for j in range(1, jmax + 1):
        out[j] = float(b[2 * j] / math.factorial(2 * j))
    return out


_BOF = _bernoulli_over_factorial(_MAX_BERNOULLI_TERMS + 2)
# plain B_{2j} for the Stirling series (small j only)
_B2J = np.array([_BOF[j] * math.factorial(2 * j) for j in range(16)])


@dataclass(frozen=True)
class EvalConfig:
    """Evaluation-precision contract shared by every numerical routine.

    circle_radius None means the adaptive default min(0.5, |s-1|/2).
    circle_nodes must be a power of two >= 16 so node-doubling convergence
    checks line up with the existing grid.
    """

    precision_mode: str = "standard"          # or "compensated"
    em_terms: int = 12                        # minimum Bernoulli corrections
    circle_radius: float | None = None
    circle_nodes: int = 64
    target_rel_err: float = 1.0e-10

    def __post_init__(self):
        if self.precision_mode not in ("standard", "compensated"):
            raise ValueError(f"unknown precision_mode {self.precision_mode!r}")
        if self.em_terms < 1:
            raise ValueError("em_terms must be positive")
        q = self.circle_nodes
        if q < 16 or (q & (q - 1)) != 0:
            raise ValueError("circle_nodes must be a power of two >= 16")
        if self.circle_radius is not None and self.circle_radius <= 0:
            raise ValueError("circle_radius must be positive")
        if not 0 < self.target_rel_err < 1e-2:
            raise ValueError("target_rel_err out of range")

    @classmethod
    def from_env(cls, **overrides) -> "EvalConfig":
        """Config with precision_mode taken from ZAP_PRECISION if set."""
        mode = os.environ.get("ZAP_PRECISION", "standard")
        return cls(precision_mode=mode, **overrides)

    def coarse(self) -> "EvalConfig":
        """Cheaper variant for phase tracking (32-node circles, 1e-7)."""
        return replace(
            self,
            circle_nodes=max(32, self.circle_nodes // 2),
            target_rel_err=max(self.target_rel_err, 1.0e-7),
        )


DEFAULT_CONFIG = EvalConfig()


@dataclass(frozen=True)
class GrowthEnvelope:
    """Piecewise-linear exponent bound mu(sigma) for |zeta^(k)(sigma+it)|.

    mu is 0 for sigma >= 1, (1-sigma)/2 on (0, 1) and 1/2 - sigma below 0;
    continuous and non-increasing.  ``slack`` absorbs the log^k t factor a
    derivative picks up over zeta itself when the bound is used as an
    empirical witness.
    """

    slack: float = 0.1

    def exponent(self, sigma: float) -> float:
        if sigma >= 1.0:
            base = 0.0
        elif sigma > 0.0:
            base = 0.5 - sigma / 2.0
        else:
            base = 0.5 - sigma
        return base + self.slack


# --------------------------------------------------------------------------
# compensated (double-double style) accumulation
# --------------------------------------------------------------------------

def _neumaier_sum_cols(mat: np.ndarray) -> np.ndarray:
    """Column-at-a-time Neumaier sum along axis 1 of a complex matrix.

    Uses the error-free two-sum transform on the real and imaginary parts,
    so cancellation inside long Dirichlet sums cannot silently lose bits.
    """
    parts = []
    for comp in (mat.real, mat.imag):
        s = np.zeros(mat.shape[0])
        c = np.zeros(mat.shape[0])
        for col in range(mat.shape[1]):
            x = comp[:, col]
            t = s + x
            big = np.abs(s) >= np.abs(x)
            c += np.where(big, (s - t) + x, (x - t) + s)
            s = t
        parts.append(s + c)
    return parts[0] + 1j * parts[1]


def _row_sum(mat: np.ndarray, compensated: bool) -> np.ndarray:
    if compensated:
        return _neumaier_sum_cols(mat)
    return mat.sum(axis=1)


# --------------------------------------------------------------------------
# log-gamma via Stirling with recurrence lift
# --------------------------------------------------------------------------

_STIRLING_LIFT_RE = 10.0
_STIRLING_TERMS = 14


def _loggamma_stirling(z: np.ndarray) -> np.ndarray:
    """Stirling series; caller guarantees Re z >= _STIRLING_LIFT_RE."""
    lz = np.log(z)
    out = (z - 0.5) * lz - z + 0.5 * LOG_2PI
    zinv2 = 1.0 / (z * z)
    pw = 1.0 / z
    for j in range(1, _STIRLING_TERMS + 1):
        out = out + (_B2J[j] / ((2 * j) * (2 * j - 1))) * pw
        pw = pw * zinv2
    return out


def loggamma_many(z: Sequence[complex] | np.ndarray) -> np.ndarray:
    """log Gamma, principal branch on the real axis, continuous off it.

    Arguments with Re z < 10 are lifted with Gamma(z+1) = z Gamma(z) until
    the Stirling series applies; the lower half plane goes through the
    conjugate so the reflection never crosses the branch cut on (-inf, 0].
    """
    z = np.asarray(z, dtype=complex)
    flat = z.ravel().copy()
    neg = flat.imag < 0.0
    flat[neg] = np.conj(flat[neg])

    shift = np.zeros_like(flat)
    need = np.maximum(0, np.ceil(_STIRLING_LIFT_RE - flat.real)).astype(int)
    if np.any((np.abs(flat.imag) < 1e-300) & (flat.real <= 0.0)
              & (flat.real == np.round(flat.real))):
        raise ValueError("log-gamma pole at a non-positive integer")
    work = flat.copy()
    for step in range(int(need.max()) if need.size else 0):
        m = need > step
        shift[m] += np.log(work[m])
        work[m] += 1.0
    out = _loggamma_stirling(work) - shift
    out[neg] = np.conj(out[neg])
    return out.reshape(z.shape)


def loggamma(z: complex) -> complex:
    return complex(loggamma_many(np.array([z]))[0])


# --------------------------------------------------------------------------
# log sin / log cos, overflow-safe for large |Im|
# --------------------------------------------------------------------------

_TRIG_DIRECT_IM = 20.0


def _log_sin_many(w: np.ndarray) -> np.ndarray:
    """log(sin w) up to a multiple of 2*pi*i (it is only ever exponentiated)."""
    out = np.empty_like(w)
    big = np.abs(w.imag) > _TRIG_DIRECT_IM
    small = ~big
    if np.any(small):
        out[small] = np.log(np.sin(w[small]))
    if np.any(big):
        wb = w[big]
        flip = wb.imag < 0.0
        wb = np.where(flip, np.conj(wb), wb)
        # sin w = e^{-iw}/(2i) * (e^{2iw} - 1), |e^{2iw}| tiny for Im w large
        val = -1j * wb + (0.5j * math.pi - math.log(2.0)) \
            + np.log1p(-np.exp(2j * wb))
        out[big] = np.where(flip, np.conj(val), val)
    return out


def _log_cos_many(w: np.ndarray) -> np.ndarray:
    out = np.empty_like(w)
    big = np.abs(w.imag) > _TRIG_DIRECT_IM
    small = ~big
    if np.any(small):
        out[small] = np.log(np.cos(w[small]))
    if np.any(big):
        wb = w[big]
        flip = wb.imag < 0.0
        wb = np.where(flip, np.conj(wb), wb)
        val = -1j * wb - math.log(2.0) + np.log1p(np.exp(2j * wb))
        out[big] = np.where(flip, np.conj(val), val)
    return out


def log_chi_many(s: np.ndarray) -> np.ndarray:
    """log of chi(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s), branch-agnostic."""
    s = np.asarray(s, dtype=complex)
    return (s * math.log(2.0) + (s - 1.0) * math.log(math.pi)
            + _log_sin_many(0.5 * math.pi * s) + loggamma_many(1.0 - s))


def chi(s: complex) -> complex:
    """Functional-equation factor with zeta(s) = chi(s) zeta(1-s)."""
    out = complex(np.exp(log_chi_many(np.array([s], dtype=complex)))[0])
    if not (math.isfinite(out.real) and math.isfinite(out.imag)):
        raise EvaluatorOverflow(f"chi({s}) overflows double range")
    return out


# --------------------------------------------------------------------------
# Euler-Maclaurin zeta on Re s >= 1/2, vectorized and grouped by N
# --------------------------------------------------------------------------

def _em_truncation(t: float) -> int:
    return max(20, math.ceil(1.3 * abs(t) / TWO_PI))


def _em_correction_terms(t: float, n_trunc: int, cfg: EvalConfig) -> int:
    """Bernoulli-term count needed for the requested tolerance.

    Successive corrections shrink roughly by ((|t|+2M)/(2 pi N))^2; solve
    that geometric envelope for the target and clamp to [em_terms, 60].
    """
    r = max(abs(t) + 50.0, 51.0) / (TWO_PI * n_trunc)
    r = min(r, 0.95)
    need = math.ceil(math.log(cfg.target_rel_err * 1e-2) / (2.0 * math.log(r)))
    return int(min(max(cfg.em_terms, need), _MAX_BERNOULLI_TERMS))


def _em_zeta_group(s: np.ndarray, n_trunc: int, m_terms: np.ndarray,
                   cfg: EvalConfig) -> np.ndarray:
    """EM zeta for points sharing the truncation N; per-point term counts."""
    n = np.arange(1, n_trunc)
    logn = np.log(n)
    # (P, N-1) power matrix; chunk rows if enormous (memory guard)
    front = _row_sum(np.exp(-s[:, None] * logn[None, :]),
                     cfg.precision_mode == "compensated")
    log_n_trunc = math.log(n_trunc)
    n_pow = np.exp(-s * log_n_trunc)          # N^-s
    val = front + n_trunc * n_pow / (s - 1.0) + 0.5 * n_pow

    m_max = int(m_terms.max())
    term = _BOF[1] * s * n_pow / n_trunc      # j = 1 correction
    corr = np.where(m_terms >= 1, term, 0.0)
    inv_n2 = 1.0 / (n_trunc * n_trunc)
    for j in range(1, m_max):
        term = term * (_BOF[j + 1] / _BOF[j]) \
            * (s + (2 * j - 1)) * (s + 2 * j) * inv_n2
        corr = corr + np.where(m_terms > j, term, 0.0)
    return val + corr


_EM_CHUNK = 512


def _zeta_em_many(s: np.ndarray, cfg: EvalConfig) -> np.ndarray:
    """zeta on Re s >= 1/2 (the direct Euler-Maclaurin branch)."""
    out = np.empty_like(s)
    t_abs = np.abs(s.imag)
    n_arr = np.maximum(20, np.ceil(1.3 * t_abs / TWO_PI)).astype(np.int64)
    m_arr = np.array([
        _em_correction_terms(t, n, cfg) for t, n in zip(t_abs, n_arr)
    ], dtype=np.int64)
    for n_trunc in np.unique(n_arr):
        idx = np.nonzero(n_arr == n_trunc)[0]
        for lo in range(0, len(idx), _EM_CHUNK):
            sub = idx[lo:lo + _EM_CHUNK]
            out[sub] = _em_zeta_group(s[sub], int(n_trunc), m_arr[sub], cfg)
    return out


def zeta_many(s: Sequence[complex] | np.ndarray,
              cfg: EvalConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Vectorized zeta(s) over the tested range |t| <= 1e5.

    Points with Re s < 1/2 go through the chi reflection; results are a pure
    function of each point alone, independent of batch composition.
    """
    s = np.asarray(s, dtype=complex)
    flat = s.ravel()
    if np.any(np.abs(flat.imag) > T_MAX_SUPPORTED):
        raise OutOfRegion(f"|t| beyond supported ceiling {T_MAX_SUPPORTED:g}")
    if np.any(np.abs(flat - 1.0) < 10 * np.finfo(float).eps):
        raise PoleAtOne("zeta evaluated at its pole s = 1")
    out = np.empty_like(flat)
    # s ~ 0 reflects onto the pole; the direct branch is exact there
    # (the Bernoulli corrections all carry a factor s)
    right = (flat.real >= 0.5) | (np.abs(flat) < 1e-9)
    if np.any(right):
        out[right] = _zeta_em_many(flat[right], cfg)
    left = ~right
    if np.any(left):
        sl = flat[left]
        out[left] = np.exp(log_chi_many(sl)) * _zeta_em_many(1.0 - sl, cfg)
    if not np.all(np.isfinite(out.real) & np.isfinite(out.imag)):
        raise EvaluatorOverflow("zeta overflowed double range")
    return out.reshape(s.shape)


def zeta(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """zeta(s) for s != 1; see module docstring for the method split."""
    return complex(zeta_many(np.array([s], dtype=complex), cfg)[0])


# --------------------------------------------------------------------------
# derivatives
# --------------------------------------------------------------------------

def _circle_radius(s: complex, cfg: EvalConfig) -> float:
    d_pole = abs(s - 1.0)
    if cfg.circle_radius is not None:
        r = cfg.circle_radius
        if d_pole <= r * (1.0 + 1e-12):
            raise CircleHitsPole(
                f"radius {r} circle around {s} touches the pole at 1")
        return r
    return min(0.5, 0.5 * d_pole)


def _deriv_series_n(k: int, sigma: float, target_abs: float) -> int | None:
    """Smallest power-of-two N whose tail correction is safely below target.

    The correction integral int_N^inf (log x)^k x^-sigma dx leaves a
    residual about (log N)^k N^-sigma (the half-term), which must be < target.
    """
    for p in range(6, 21):
        n = 1 << p
        resid = 0.5 * math.log(n) ** k * n ** (-sigma)
        if resid < 0.1 * target_abs:
            return n
    return None


def _deriv_series_tail(k: int, sigma: float, n: int) -> float:
    """Exact integral int_N^inf (log x)^k x^-sigma dx (repeated by parts)."""
    u = sigma - 1.0
    ln = math.log(n)
    acc = 0.0
    coef = 1.0
    for i in range(k + 1):
        acc += coef * ln ** (k - i) / u ** (i + 1)
        coef *= (k - i)
    return n ** (1.0 - sigma) * acc


def _zeta_deriv_series_many(k: int, s: np.ndarray,
                            cfg: EvalConfig) -> np.ndarray:
    """Tail-corrected sum of (-log n)^k n^-s; caller guarantees large sigma."""
    out = np.empty_like(s)
    sig_min = float(s.real.min())
    scale = math.log(2.0) ** k * 2.0 ** (-sig_min)
    n_terms = _deriv_series_n(k, sig_min, cfg.target_rel_err * scale)
    if n_terms is None:
        raise PrecisionLoss("series truncation would exceed the term cap")
    n = np.arange(2, n_terms)
    w = (-np.log(n)) ** k
    mat = w[None, :] * np.exp(-s[:, None] * np.log(n)[None, :])
    out = _row_sum(mat, cfg.precision_mode == "compensated")
    # Euler-Maclaurin style tail: integral + half-term at N
    lnN = math.log(n_terms)
    n_pow = np.exp(-s * lnN)
    u = s - 1.0
    acc = np.zeros_like(s)
    coef = 1.0
    for i in range(k + 1):
        acc += coef * lnN ** (k - i) / u ** (i + 1)
        coef *= (k - i)
    tail = (-1.0) ** k * (n_terms * n_pow * acc + 0.5 * lnN ** k * n_pow)
    return out + tail


def _circle_nodes(s: complex, r: float, q: int) -> np.ndarray:
    theta = TWO_PI * np.arange(q) / q
    return s + r * np.exp(1j * theta)


def _derivs_from_circle(vals: np.ndarray, ks: Sequence[int], r: float
                        ) -> dict[int, complex]:
    """Extract several derivative orders from one ring of zeta values."""
    q = vals.shape[0]
    theta = TWO_PI * np.arange(q) / q
    out = {}
    for k in ks:
        contracted = np.sum(vals * np.exp(-1j * k * theta)) / q
        out[k] = complex(math.factorial(k) * contracted / r ** k)
    return out


def zeta_derivs(ks: Sequence[int], s: complex,
                cfg: EvalConfig = DEFAULT_CONFIG) -> dict[int, complex]:
    """Several derivative orders of zeta at one point from a shared circle.

    Orders must satisfy max(ks) < circle_nodes/2 to stay clear of trapezoid
    aliasing.
    """
    ks = sorted(set(int(k) for k in ks))
    if ks and ks[0] < 0:
        raise ValueError("derivative order must be non-negative")
    if ks and ks[-1] >= cfg.circle_nodes // 2:
        raise ValueError("derivative order too high for circle_nodes")
    out: dict[int, complex] = {}
    if not ks:
        return out
    pos = [k for k in ks if k > 0]
    if 0 in ks:
        out[0] = zeta(s, cfg)
    if pos:
        if s.real >= SERIES_SIGMA_MIN:
            arr = np.array([s], dtype=complex)
            for k in pos:
                out[k] = complex(_zeta_deriv_series_many(k, arr, cfg)[0])
        else:
            r = _circle_radius(s, cfg)
            vals = zeta_many(_circle_nodes(s, r, cfg.circle_nodes), cfg)
            out.update(_derivs_from_circle(vals, pos, r))
    return out


def zeta_deriv(k: int, s: complex, cfg: EvalConfig = DEFAULT_CONFIG,
               *, verify: bool = False) -> complex:
    """k-th derivative of zeta at s (k = 0 falls back to zeta itself).

    With ``verify=True`` the circle result is recomputed at doubled node
    count (and, for sigma >= 2, checked against the tail-corrected series);
    disagreement beyond target_rel_err raises PrecisionLoss.
    """
    if k < 0:
        raise ValueError("derivative order must be non-negative")
    if k == 0:
        return zeta(s, cfg)
    if abs(s - 1.0) < 10 * np.finfo(float).eps:
        raise PoleAtOne("zeta derivative at the pole s = 1")

    if s.real >= SERIES_SIGMA_MIN:
        val = complex(
            _zeta_deriv_series_many(k, np.array([s], dtype=complex), cfg)[0])
        if verify:
            r = _circle_radius(s, cfg)
            ring = zeta_many(_circle_nodes(s, r, cfg.circle_nodes), cfg)
            other = _derivs_from_circle(ring, [k], r)[k]
            _check_agreement(val, other, cfg, "series vs circle")
        return val

    r = _circle_radius(s, cfg)
    ring = zeta_many(_circle_nodes(s, r, cfg.circle_nodes), cfg)
    val = _derivs_from_circle(ring, [k], r)[k]
    if verify:
        ring2 = zeta_many(_circle_nodes(s, r, 2 * cfg.circle_nodes), cfg)
        val2 = _derivs_from_circle(ring2, [k], r)[k]
        _check_agreement(val, val2, cfg, "node doubling")
        if s.real >= 2.0:
            # direct series cross-check in its convergence half-plane
            ser = complex(_zeta_deriv_series_many(
                k, np.array([s], dtype=complex),
                replace(cfg, target_rel_err=max(cfg.target_rel_err, 1e-9)))[0])
            _check_agreement(val, ser, cfg, "circle vs series")
    if not (math.isfinite(val.real) and math.isfinite(val.imag)):
        raise EvaluatorOverflow("zeta derivative overflowed double range")
    return val


def _check_agreement(a: complex, b: complex, cfg: EvalConfig, what: str):
    scale = max(abs(a), abs(b), 1e-300)
    if abs(a - b) / scale > max(cfg.target_rel_err, 1e-11) * 50:
        raise PrecisionLoss(
            f"{what} disagreement {abs(a - b) / scale:.2e} at target "
            f"{cfg.target_rel_err:.1e}")


def zeta_deriv_many(k: int, s: Sequence[complex] | np.ndarray,
                    cfg: EvalConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Vectorized zeta^(k); same per-point semantics as zeta_deriv."""
    s = np.asarray(s, dtype=complex)
    flat = s.ravel()
    if k == 0:
        return zeta_many(s, cfg)
    out = np.empty_like(flat)
    ser = flat.real >= SERIES_SIGMA_MIN
    if np.any(ser):
        out[ser] = _zeta_deriv_series_many(k, flat[ser], cfg)
    rest = np.nonzero(~ser)[0]
    if rest.size:
        pts = flat[rest]
        radii = np.array([_circle_radius(p, cfg) for p in pts])
        q = cfg.circle_nodes
        theta = TWO_PI * np.arange(q) / q
        nodes = pts[:, None] + radii[:, None] * np.exp(1j * theta)[None, :]
        ring = zeta_many(nodes.ravel(), cfg).reshape(nodes.shape)
        phase = np.exp(-1j * k * theta)
        contracted = (ring * phase[None, :]).sum(axis=1) / q
        out[rest] = math.factorial(k) * contracted / radii ** k
    if not np.all(np.isfinite(out.real) & np.isfinite(out.imag)):
        raise EvaluatorOverflow("zeta derivative overflowed double range")
    return out.reshape(s.shape)


# --------------------------------------------------------------------------
# left-half-plane asymptotic main term
# --------------------------------------------------------------------------

def log_left_asymptotic(k: int, s: complex) -> complex:
    """log of the main term approximating zeta^(k)(1-s); Re part is exact
    enough for modulus comparisons even when the value itself overflows."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if s.real <= 1.1 or abs(s.imag) < 1.0:
        raise OutOfRegion(
            "main term valid only for Re s > 1.1 and |Im s| >= 1")
    sa = np.array([s], dtype=complex)
    lg = complex(loggamma_many(sa)[0])
    lcos = complex(_log_cos_many(0.5 * math.pi * sa)[0])
    lz = complex(np.log(zeta_many(sa)[0]))
    log_log_s = complex(np.log(np.log(complex(s))))
    val = math.log(2.0) - s * LOG_2PI + lg + k * log_log_s + lcos + lz
    if k % 2 == 1:
        val += 1j * math.pi   # the (-1)^k sign folded into the log
    return val


def left_asymptotic(k: int, s: complex) -> complex:
    """Main term (-1)^k 2 (2pi)^-s Gamma(s) (log s)^k cos(pi s/2) zeta(s).

    Cross-check quantity for zeta^(k)(1-s) deep in the left half plane;
    never used as the primary evaluator.
    """
    val = complex(np.exp(log_left_asymptotic(k, s)))
    if not (math.isfinite(val.real) and math.isfinite(val.imag)):
        raise EvaluatorOverflow("left asymptotic overflows; use the log form")
    return val
