"""Closed-form main terms: exact identities and frozen arithmetic."""

import math

import pytest

from zapoints.errors import DomainTooSmall
from zapoints.mainterms import (
    band_halfwidth,
    beta_sum_main,
    count_main,
    expsum_main,
    window_count_main,
)

TWO_PI = 2.0 * math.pi


class TestCountMain:
    def test_forced_zeros(self):
        assert abs(count_main(1, 1, TWO_PI * math.e)) < 1e-12
        assert abs(count_main(1, 0, 2 * TWO_PI * math.e)) < 1e-12

    def test_frozen_value(self):
        # (100/2pi) log(100/2pi) - 100/2pi, recomputed independently
        assert abs(count_main(1, 1, 100.0) - 28.12734358732535) < 1e-10

    def test_zero_branch_shift_identity(self):
        for t in (10.0, 100.0, 1234.5):
            diff = count_main(1, 2, t) - count_main(1, 0, t)
            assert abs(diff - t / TWO_PI * math.log(2.0)) < 1e-10 * t

    def test_k_independence(self):
        assert count_main(1, 1j, 300.0) == count_main(2, 1j, 300.0)


class TestWindowCount:
    def test_u_zero(self):
        assert window_count_main(1, 1, 500.0, 0.0) == 0.0

    def test_telescoping(self):
        t, u1, u2 = 200.0, 60.0, 140.0
        whole = window_count_main(1, 1, t, u1 + u2)
        parts = window_count_main(1, 1, t, u1) \
            + window_count_main(1, 1, t + u1, u2)
        assert abs(whole - parts) < 1e-10

    def test_matches_count_difference(self):
        for a in (1, 0):
            t, u = 1000.0, 1000.0
            direct = window_count_main(1, a, t, u)
            diff = count_main(1, a, t + u) - count_main(1, a, t)
            assert abs(direct - diff) < 1e-10 * max(1.0, abs(direct))


class TestExpsumMain:
    def test_non_integer_zero(self):
        assert expsum_main(1, 1, 2.5, 500.0) == 0

    def test_frozen_value(self):
        v = expsum_main(1, 1, 2.0, 500.0)
        assert abs(v - (500.0 / TWO_PI) * (-math.log(2.0) ** 2)) < 1e-12
        assert abs(v - (-38.23323604424047)) < 1e-10

    def test_t_zero(self):
        assert expsum_main(1, 1, 2.0, 0.0) == 0

    def test_requires_x_above_one(self):
        with pytest.raises(ValueError):
            expsum_main(1, 1, 1.0, 100.0)


class TestBandHalfwidth:
    def test_frozen_value(self):
        assert abs(band_halfwidth(1000.0) - 0.54071337456006) < 1e-10

    def test_domain_floor(self):
        with pytest.raises(DomainTooSmall):
            band_halfwidth(math.exp(math.e))
        assert band_halfwidth(20.0) > 0

    def test_decay_on_ladder(self):
        vals = [band_halfwidth(10.0 ** p) for p in (3, 4, 5, 6)]
        assert all(b < a for a, b in zip(vals, vals[1:]))


class TestBetaSumMain:
    def test_u_zero(self):
        assert beta_sum_main(1, 2, 5.0, 500.0, 0.0) == 0.0

    def test_unit_modulus_drops_log_term(self):
        # |a| = 1 must coincide with the formula with the log|a| term removed
        v_unit = beta_sum_main(1, 1j, 5.0, 500.0, 250.0)
        v_one = beta_sum_main(1, 1.0, 5.0, 500.0, 250.0)
        assert abs(v_unit - v_one) < 1e-12

    def test_frozen_regression(self):
        # independent arithmetic: (1/2+b){(T+U)log((T+U)/2pi)-T log(T/2pi)-U}
        # + k{(T+U)loglog(T+U)-T loglog T} - U log 2, over 2pi,
        # at k=1, a=2, b=5, T=U=500
        t, u, b = 500.0, 500.0, 5.0
        first = 5.5 * (1000.0 * math.log(1000.0 / TWO_PI)
                       - 500.0 * math.log(500.0 / TWO_PI) - 500.0)
        second = 1000.0 * math.log(math.log(1000.0)) \
            - 500.0 * math.log(math.log(500.0))
        expect = (first + second - 500.0 * math.log(2.0)) / TWO_PI
        assert abs(beta_sum_main(1, 2, b, t, u) - expect) < 1e-10
        assert abs(expect - 2191.713115036597) < 1e-9

    def test_zero_branch_constant_block(self):
        # a = 0 differs from |a| = 1 by U(1/2 + b log 2 + k loglog 2)/2pi
        # minus the -U(1/2+b) piece present only in the a != 0 branch
        t, u, b, k = 500.0, 250.0, 5.0, 1
        v0 = beta_sum_main(k, 0, b, t, u)
        v1 = beta_sum_main(k, 1.0, b, t, u)
        delta = (u * (0.5 + b) - u * (0.5 + b + b * math.log(2.0)
                                     + k * math.log(math.log(2.0)))) / TWO_PI
        assert abs(v0 - (v1 + delta)) < 1e-10
