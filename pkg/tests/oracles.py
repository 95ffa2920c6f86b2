"""Independent oracles used by the tests.

These deliberately avoid the adaptive machinery they check: the winding
oracle samples the rectangle boundary at a fixed dense step and unwraps
the argument by brute force; the series oracles sum terms directly with
integral tail bounds.  Frozen constants in the tests were produced by
these oracles (or by a 200-bit mpmath evaluation, where noted).
"""

from __future__ import annotations

import math

import numpy as np

from zapoints.zeta import DEFAULT_CONFIG, zeta_deriv_many

TWO_PI = 2.0 * math.pi


def dense_winding(k: int, a: complex, rect, step: float = 1e-3,
                  cfg=DEFAULT_CONFIG) -> int:
    """Brute-force winding number by fixed-step boundary sampling."""
    sl, tl, sr, th = rect
    corners = [complex(sl, tl), complex(sr, tl), complex(sr, th),
               complex(sl, th), complex(sl, tl)]
    total = 0.0
    for z0, z1 in zip(corners[:-1], corners[1:]):
        n = max(8, int(abs(z1 - z0) / step))
        pts = z0 + (z1 - z0) * np.arange(n + 1) / n
        vals = zeta_deriv_many(k, pts, cfg) - a
        dphi = np.angle(vals[1:] / vals[:-1])
        if np.any(np.abs(dphi) > 0.5 * math.pi):
            raise RuntimeError("oracle step too coarse for this contour")
        total += float(dphi.sum())
    w = total / TWO_PI
    assert abs(w - round(w)) < 0.2, f"oracle winding {w} far from integer"
    return round(w)


def deriv_series(k: int, sigma: float, t: float, n_terms: int = 200000
                 ) -> complex:
    """Partial sum of sum (-log n)^k n^-s for sigma comfortably > 1."""
    n = np.arange(2, n_terms)
    s = complex(sigma, t)
    return complex(np.sum((-np.log(n)) ** k * np.exp(-s * np.log(n))))


def deriv_series_tail_bound(k: int, sigma: float, n_terms: int) -> float:
    """Integral bound for the dropped tail of deriv_series."""
    u = sigma - 1.0
    ln = math.log(n_terms)
    acc, coef = 0.0, 1.0
    for i in range(k + 1):
        acc += coef * ln ** (k - i) / u ** (i + 1)
        coef *= (k - i)
    return n_terms ** (1.0 - sigma) * acc


def ordered_factorizations(x: int, min_factor: int = 2):
    """All ordered tuples (n0, ..., nl) with product x, factors >= min."""
    if x == 1:
        yield ()
        return
    for d in range(min_factor, x + 1):
        if x % d == 0:
            for rest in ordered_factorizations(x // d, min_factor):
                yield (d,) + rest


def alpha_bruteforce(k: int, a: complex, x: int) -> complex:
    """Direct sum over ordered factorizations (first factor weighted k+1)."""
    acc = 0j
    for tup in ordered_factorizations(x):
        if not tup:
            continue
        l = len(tup) - 1
        term = (-1.0) ** (k * (l + 1)) / complex(a) ** (l + 1)
        term *= math.log(tup[0]) ** (k + 1)
        for n in tup[1:]:
            term *= math.log(n) ** k
        acc += term
    return acc


def alpha_zero_bruteforce(k: int, num: int, l2den: int) -> complex:
    """Direct sum for the a = 0 coefficient at index num / 2^l2den."""
    acc = 0.0
    max_len = 40
    for length in range(0, max_len):
        shift = length + 1 - l2den
        if shift < 0:
            continue
        m = num * (2 ** shift)
        if m < 2:
            continue
        if 2 * 3 ** length > m:
            if length > 0 and 3 ** length > m:
                break
        for tup in ordered_factorizations(m):
            if not tup or len(tup) != length + 1:
                continue
            if any(f < 3 for f in tup[1:]):
                continue
            term = (-1.0 / math.log(2.0) ** k) ** (length + 1)
            term *= math.log(tup[0]) ** (k + 1)
            for n in tup[1:]:
                term *= math.log(n) ** k
            acc += term
    return complex(acc)
