"""Main-term coefficients alpha(d) of the exponential sums over a-points.

The logarithmic derivative zeta^(k+1)(s)/(zeta^(k)(s) - a) expands, far
enough to the right, into a Dirichlet-type series sum_d alpha(d) d^-s.  For
a != 0 the indices d are the integers >= 2 and

    alpha(x) = sum over ordered factorizations x = n0*n1*...*nl (n_i >= 2)
               of (-1)^(k(l+1)) a^-(l+1) (log n0)^(k+1) (log n1...log nl)^k.

For a = 0 the leading denominator term is (log 2)^k 2^-s, so the indices
become dyadic rationals d = n0*...*nl / 2^(l+1) with n0 >= 2 and the later
factors n_i >= 3, weighted by (-1/(log 2)^k)^(l+1) instead of the a-powers.

Two independent routes are implemented: direct enumeration over ordered
divisor chains (``alpha``/``alpha_zero``) and formal long division of the
Dirichlet series (``alpha_oracle``); they are each other's test oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

LOG2 = math.log(2.0)


@dataclass(frozen=True, order=True)
class CoeffIndex:
    """Reduced index d = numerator / 2^log2_denominator.

    numerator is odd whenever log2_denominator > 0.  Integer indices carry
    log2_denominator = 0; the a = 0 table legitimately contains d = 1
    (from n0 = 2, l = 0), which is the only index with numerator < 2.
    """

    numerator: int
    log2_denominator: int = 0

    def __post_init__(self):
        if self.numerator < 1 or self.log2_denominator < 0:
            raise ValueError("index must be a positive dyadic rational")
        if self.log2_denominator > 0 and self.numerator % 2 == 0:
            raise ValueError("index not in reduced form")

    @classmethod
    def from_value(cls, x) -> "CoeffIndex | None":
        """Reduced index for x, or None when x is not dyadic rational.

        Floats are exact binary fractions, so a denominator cap (2^20)
        separates intended dyadics like 1.5 from rounded thirds and the
        like.
        """
        frac = Fraction(x)
        den = frac.denominator
        l2 = den.bit_length() - 1
        if (1 << l2) != den:
            return None
        if isinstance(x, float) and l2 > 20:
            return None
        return cls(frac.numerator, l2)

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.log2_denominator)


@dataclass
class CoefficientTable:
    """All coefficients with reduced numerator <= cutoff for one (k, a)."""

    k: int
    a: complex
    cutoff: int
    entries: dict[CoeffIndex, complex] = field(default_factory=dict)

    def get(self, x) -> complex:
        idx = x if isinstance(x, CoeffIndex) else CoeffIndex.from_value(x)
        if idx is None:
            return 0j
        return self.entries.get(idx, 0j)


def _divisors(m: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def alpha(k: int, a: complex, x) -> complex:
    """Coefficient at integer index x >= 2 for a != 0.

    Non-integer x maps to 0 by contract.  Enumeration runs over ordered
    divisor chains: the first factor carries the (log n0)^(k+1) weight, the
    remaining ordered factors each carry (log n_i)^k and one power of
    (-1)^k / a.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if a == 0:
        raise ValueError("use alpha_zero for a = 0")
    if isinstance(x, float) and not x.is_integer():
        return 0j
    if isinstance(x, Rational) and x.denominator != 1:
        return 0j
    n = int(x)
    if n < 2:
        return 0j
    w = (-1.0) ** k / complex(a)

    @lru_cache(maxsize=None)
    def chain_tail(m: int) -> complex:
        # sum over ordered factorizations of m into parts >= 2 of
        # prod_i w * (log n_i)^k; the empty factorization of 1 gives 1
        if m == 1:
            return 1.0 + 0j
        acc = 0j
        for d in _divisors(m):
            if d >= 2:
                acc += w * math.log(d) ** k * chain_tail(m // d)
        return acc

    acc = 0j
    for d in _divisors(n):
        if d >= 2:
            acc += math.log(d) ** (k + 1) * chain_tail(n // d)
    return w * acc


def alpha_abs_scale(k: int, a: complex, x) -> float:
    """Sum of |term| over the chains of ``alpha`` (its condition scale).

    Relative agreement between the two coefficient routes is only
    meaningful against this: analytically cancelling entries (they exist,
    e.g. some a = 0 integer indices) are computed from terms of this size.
    """
    if isinstance(x, float) and not x.is_integer():
        return 0.0
    # replacing a by (-1)^k |a| makes every chain weight +1/|a|
    return abs(alpha(k, (-1.0) ** k * abs(complex(a)), x))


@lru_cache(maxsize=None)
def _chain_tail_min3(k: int, m: int, parts: int) -> float:
    """Sum of prod (log n_i)^k over ordered tuples of given length with all
    factors >= 3 and product m."""
    if parts == 0:
        return 1.0 if m == 1 else 0.0
    if m < 3 ** parts:
        return 0.0
    acc = 0.0
    for d in _divisors(m):
        if d >= 3:
            acc += math.log(d) ** k * _chain_tail_min3(k, m // d, parts - 1)
    return acc


def _alpha_zero_partials(k: int, idx: CoeffIndex) -> list[tuple[int, float]]:
    """(chain length, non-negative weight sum) pairs for one a = 0 index."""
    u, v = idx.numerator, idx.log2_denominator
    # chain length l is bounded by (3/2)^l <= x
    val = idx.value
    if val < 1:
        l_max = v - 1          # need n0*...*nl = x*2^(l+1) >= 2
    else:
        l_max = int(math.log(float(val)) / math.log(1.5)) + 1
    out = []
    for length in range(max(0, v - 1), l_max + 1):
        m = u << (length + 1 - v) if length + 1 >= v else None
        if m is None or m < 2:
            continue
        s_l = 0.0
        for n0 in _divisors(m):
            if n0 >= 2:
                s_l += math.log(n0) ** (k + 1) \
                    * _chain_tail_min3(k, m // n0, length)
        out.append((length, s_l))
    return out


def alpha_zero(k: int, x) -> complex:
    """Coefficient at dyadic index x for a = 0.

    x must be representable as n0*...*nl / 2^(l+1) with n0 >= 2 and the
    later factors >= 3; anything with no such representation (including
    every x whose denominator is not a power of two) maps to 0.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    idx = x if isinstance(x, CoeffIndex) else CoeffIndex.from_value(x)
    if idx is None:
        return 0j
    acc = 0.0
    for length, s_l in _alpha_zero_partials(k, idx):
        acc += (-1.0 / LOG2 ** k) ** (length + 1) * s_l
    return complex(acc)


def alpha_zero_abs_scale(k: int, x) -> float:
    """Sum of |term| over the chains of ``alpha_zero``; see alpha_abs_scale."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    idx = x if isinstance(x, CoeffIndex) else CoeffIndex.from_value(x)
    if idx is None:
        return 0.0
    return sum((1.0 / LOG2 ** k) ** (length + 1) * s_l
               for length, s_l in _alpha_zero_partials(k, idx))


# --------------------------------------------------------------------------
# formal-division oracle
# --------------------------------------------------------------------------

def _oracle_nonzero(k: int, a: complex, cutoff: int) -> dict[CoeffIndex, complex]:
    """Long division of the two ordinary Dirichlet series.

    numerator   coefficients: (-log n)^(k+1) for n >= 2
    denominator coefficients: -a at n = 1, (-log n)^k for n >= 2
    solved coefficient by coefficient from the convolution identity.
    """
    num = [0j] * (cutoff + 1)
    den = [0j] * (cutoff + 1)
    den[1] = -complex(a)
    for n in range(2, cutoff + 1):
        num[n] = (-math.log(n)) ** (k + 1)
        den[n] = (-math.log(n)) ** k
    out = [0j] * (cutoff + 1)
    for n in range(2, cutoff + 1):
        acc = num[n]
        for d in _divisors(n):
            if d > 1 and out[n // d] != 0:
                acc -= out[n // d] * den[d]
        out[n] = acc / den[1]
    return {
        CoeffIndex(n): out[n] for n in range(2, cutoff + 1) if out[n] != 0
    }


def _series_mul(p: dict[Fraction, float], q: dict[Fraction, float],
                cap: Fraction) -> dict[Fraction, float]:
    out: dict[Fraction, float] = {}
    for xi, ci in p.items():
        for xj, cj in q.items():
            xk = xi * xj
            if xk <= cap:
                out[xk] = out.get(xk, 0.0) + ci * cj
    return out


def _oracle_zero(k: int, cutoff: int) -> dict[CoeffIndex, complex]:
    """Generalized Dirichlet long division for a = 0.

    Factor (−1)^k (log 2)^k 2^-s out of the denominator; what remains is
    1 + G with G supported on indices n/2 (n >= 3), inverted by the
    geometric series (finitely many powers matter below the cutoff because
    every G index is >= 3/2).
    """
    cap = Fraction(cutoff)
    g: dict[Fraction, float] = {}
    n = 3
    while Fraction(n, 2) <= cap:
        g[Fraction(n, 2)] = (math.log(n) / LOG2) ** k
        n += 1
    inv: dict[Fraction, float] = {Fraction(1): 1.0}
    power: dict[Fraction, float] = {Fraction(1): 1.0}
    sign = 1.0
    while True:
        power = _series_mul(power, g, cap)
        sign = -sign
        if not power:
            break
        for xi, ci in power.items():
            inv[xi] = inv.get(xi, 0.0) + sign * ci
    numer: dict[Fraction, float] = {}
    n = 2
    while Fraction(n, 2) <= cap:
        numer[Fraction(n, 2)] = math.log(n) ** (k + 1)
        n += 1
    prod = _series_mul(numer, inv, cap)
    out: dict[CoeffIndex, complex] = {}
    for x, c in prod.items():
        coef = complex(-c / LOG2 ** k)
        if coef != 0:
            out[CoeffIndex(x.numerator, x.denominator.bit_length() - 1)] = coef
    return out


def alpha_oracle(k: int, a: complex, cutoff: int = 512) -> CoefficientTable:
    """Coefficient table computed by formal series division.

    Independent of the chain enumeration in ``alpha``/``alpha_zero``; the
    two are compared term by term in the tests.  For a != 0 the table holds
    integer indices 2..cutoff; for a = 0 it holds every dyadic index of
    value <= cutoff (which covers all reduced numerators <= cutoff).
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if cutoff < 2 or cutoff > 10_000:
        raise ValueError("cutoff must be in [2, 10000]")
    if a == 0:
        entries = _oracle_zero(k, cutoff)
    else:
        entries = _oracle_nonzero(k, complex(a), cutoff)
    return CoefficientTable(k=k, a=complex(a), cutoff=cutoff, entries=entries)
