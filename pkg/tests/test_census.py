"""Census, exponential sums, Littlewood balance, weighted beta sums."""

import cmath
import math

import numpy as np
import pytest

from zapoints import EvalConfig
from zapoints.census import (
    beta_half_sum,
    beta_sum_check,
    census,
    expsum,
    littlewood_balance,
    log_distance_integral,
)
from zapoints.mainterms import band_halfwidth
from zapoints.scan import APoint, ScanWindow, locate
from zapoints.zeta import zeta_deriv_many

CFG = EvalConfig()


def _pt(beta, gamma, k=1, a=1 + 0j, mult=1):
    return APoint(k=k, a=a, beta=beta, gamma=gamma, residual=1e-12,
                  cert_box=(beta - 1e-4, gamma - 1e-4, beta + 1e-4,
                            gamma + 1e-4), multiplicity=mult)


@pytest.fixture(scope="module")
def small_scan():
    win = ScanWindow(t_lo=1.0, t_hi=61.0, sigma_lo=-16.25, sigma_hi=3.25)
    return locate(1, 1, win, CFG)


class TestCensus:
    def test_empty_window(self):
        rep = census(1, 1, 1000.0, 50.0, [])
        assert (rep.n1, rep.n2, rep.n3, rep.total) == (0, 0, 0, 0)

    def test_partition_identity_synthetic(self):
        hw = band_halfwidth(1000.0)
        pts = [_pt(0.5, 1100.0), _pt(0.5 + hw + 0.01, 1200.0),
               _pt(0.5 - hw - 0.01, 1300.0), _pt(0.4, 1400.0)]
        rep = census(1, 1, 1000.0, 500.0, pts)
        assert (rep.n1, rep.n2, rep.n3) == (1, 1, 2)
        assert rep.total == len(pts)

    def test_boundary_hit_goes_central(self):
        hw = band_halfwidth(1000.0)
        pts = [_pt(0.5 + hw, 1100.0)]
        rep = census(1, 1, 1000.0, 500.0, pts)
        assert rep.n3 == 1 and rep.n1 == 0
        assert len(rep.boundary_hits) == 1

    def test_window_filter_is_open(self):
        pts = [_pt(0.5, 1000.0), _pt(0.5, 1100.0), _pt(0.5, 1500.0)]
        rep = census(1, 1, 1000.0, 500.0, pts)
        assert rep.total == 1          # both endpoints excluded

    def test_multiplicity_counted(self):
        pts = [_pt(0.5, 1100.0, mult=3)]
        rep = census(1, 1, 1000.0, 500.0, pts)
        assert rep.n3 == 3


class TestExpsum:
    def test_hand_sum(self):
        pts = [_pt(0.6, 30.0), _pt(0.9, 44.0)]
        rep = expsum(1, 1, 2.0, 50.0, pts)
        expect = sum(cmath.exp(complex(p.beta, p.gamma) * math.log(2.0))
                     for p in pts)
        assert abs(rep.observed - expect) < 1e-12

    def test_window_is_one_to_t(self):
        pts = [_pt(0.5, 0.5), _pt(0.5, 10.0), _pt(0.5, 99.0)]
        rep = expsum(1, 1, 2.0, 50.0, pts)
        # only gamma in (1, 50) contributes
        assert abs(rep.observed
                   - cmath.exp(complex(0.5, 10.0) * math.log(2.0))) < 1e-12

    def test_requires_x_above_one(self):
        with pytest.raises(ValueError):
            expsum(1, 1, 1.0, 50.0, [])

    def test_empty_below_first_point(self):
        rep = expsum(1, 1, 2.0, 5.0, [_pt(0.5, 30.0)])
        assert rep.observed == 0
        assert rep.predicted != 0


class TestQuadrature:
    def test_matches_dense_trapezoid(self):
        val = log_distance_integral(1, 1, 20.0, 22.0, CFG, tol=1e-6)
        ts = np.linspace(20.0, 22.0, 20001)
        f = np.log(np.abs(1 - zeta_deriv_many(1, 0.5 + 1j * ts, CFG)))
        ref = float(np.trapz(f, ts))
        assert abs(val - ref) < 1e-4

    def test_littlewood_balance_small_window(self, small_scan):
        rep = littlewood_balance(1, 1, 20.0, 40.0, small_scan, CFG)
        assert rep.ratio <= 20.0

    def test_littlewood_rejects_zero_target(self):
        with pytest.raises(ValueError):
            littlewood_balance(1, 0, 100.0, 50.0, [], CFG)


class TestBetaSums:
    def test_beta_half_sum(self):
        pts = [_pt(0.7, 10.0), _pt(0.3, 20.0), _pt(0.9, 30.0)]
        assert abs(beta_half_sum(pts, 1.0, 40.0) - (0.2 + 0.4)) < 1e-14

    def test_beta_sum_identity(self):
        # observed side minus b*count equals sum of beta exactly
        pts = [_pt(0.7, 110.0), _pt(0.4, 120.0)]
        rep = beta_sum_check(1, 2, 5.0, 100.0, 50.0, pts)
        assert abs(rep.observed - (5.0 * 2 + 0.7 + 0.4)) < 1e-12

    def test_u_zero(self):
        rep = beta_sum_check(1, 2, 5.0, 100.0, 0.0, [])
        assert rep.observed == 0 and rep.predicted == 0

    def test_small_window_against_main(self, small_scan):
        rep = beta_sum_check(1, 1, 5.0, 20.0, 40.0, small_scan)
        assert rep.ratio <= 50.0
