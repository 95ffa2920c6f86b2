"""Root scanner tests: winding numbers, located points, diagnostics.

The frozen location list for zeta' zeros below t = 50 was produced by the
dense-step boundary oracle plus Newton refinement and agrees with the
published low zeros of zeta'.
"""

import math

import pytest

from oracles import dense_winding
from zapoints import EvalConfig, zeta_deriv
from zapoints.errors import BoundaryRoot, NearRoot, Unresolved
from zapoints.scan import (
    APoint,
    ScanWindow,
    local_expansion_residual,
    locate,
    locate_result,
    strip_count_check,
    winding,
)

CFG = EvalConfig()

# zeta' zeros with 1 < t < 50 (beta, gamma), oracle-refined
ZETA1_ZEROS_TO_50 = [
    (2.463161869454, 23.298320492763),
    (1.286496822269, 31.708250083089),
    (2.307570063723, 38.489983173079),
    (1.382763605712, 42.290964554597),
    (0.964685622706, 48.847159905068),
]


class TestWinding:
    def test_free_region_is_zero(self):
        assert winding(1, 1, (2.5, 10.0, 5.5, 20.0), CFG) == 0

    def test_regression_rect_against_dense_oracle(self):
        rect = (-1.0, 10.0, 3.0, 30.0)
        w = winding(1, 0, rect, CFG)
        assert w == 1                       # frozen from the dense oracle
        assert w == dense_winding(1, 0, rect, step=5e-3)

    def test_union_additivity(self):
        r_all = (-1.0, 20.0, 3.0, 44.0)
        r_lo = (-1.0, 20.0, 3.0, 33.0)
        r_hi = (-1.0, 33.0, 3.0, 44.0)
        assert winding(1, 0, r_all, CFG) == \
            winding(1, 0, r_lo, CFG) + winding(1, 0, r_hi, CFG)

    def test_boundary_root_raises(self):
        beta, gamma = ZETA1_ZEROS_TO_50[0]
        with pytest.raises(BoundaryRoot):
            winding(1, 0, (beta, gamma, beta + 0.3, gamma + 0.3), CFG)

    def test_unresolved_at_depth_cap(self):
        # a root 1e-6 off the bottom edge (outside the boundary-eps window)
        # forces phase steps that a depth-10 bisection cannot bring under
        # the cap
        beta, gamma = ZETA1_ZEROS_TO_50[0]
        rect = (beta - 2.0, gamma + 1e-6, beta + 2.0, gamma + 5.0)
        with pytest.raises(Unresolved):
            winding(1, 0, rect, CFG, max_depth=10)

    def test_degenerate_rect(self):
        with pytest.raises(ValueError):
            winding(1, 0, (1.0, 10.0, 1.0, 20.0), CFG)


class TestLocate:
    def test_empty_window(self):
        win = ScanWindow(t_lo=30.0, t_hi=30.0, sigma_lo=-3.0, sigma_hi=4.0)
        assert locate(1, 0, win, CFG) == []

    def test_zeta_prime_zeros_to_50(self):
        win = ScanWindow(t_lo=1.0, t_hi=50.0, sigma_lo=-3.0, sigma_hi=4.5)
        res = locate_result(1, 0, win, CFG)
        assert res.window_winding == len(ZETA1_ZEROS_TO_50)
        assert not res.unresolved
        assert len(res.points) == len(ZETA1_ZEROS_TO_50)
        for p, (b, g) in zip(res.points, ZETA1_ZEROS_TO_50):
            assert abs(p.beta - b) < 1e-8
            assert abs(p.gamma - g) < 1e-8
            assert p.residual <= 1e-9
            assert abs(zeta_deriv(1, p.s)) <= 1e-9

    def test_certification_boxes(self):
        win = ScanWindow(t_lo=20.0, t_hi=45.0, sigma_lo=-3.0, sigma_hi=4.5)
        res = locate_result(1, 1, win, CFG)
        assert res.window_winding == len(res.points)
        for p in res.points:
            sl, tl, sr, th = p.cert_box
            assert math.hypot(sr - sl, th - tl) <= 1e-3 + 1e-12
            assert sl < p.beta < sr and tl < p.gamma < th
            assert winding(1, 1, p.cert_box, CFG) == 1

    def test_sorted_by_gamma(self):
        win = ScanWindow(t_lo=1.0, t_hi=45.0, sigma_lo=-16.0, sigma_hi=3.0)
        pts = locate(1, 1, win, CFG)
        gammas = [p.gamma for p in pts]
        assert gammas == sorted(gammas)

    def test_no_duplicates(self):
        win = ScanWindow(t_lo=1.0, t_hi=45.0, sigma_lo=-16.0, sigma_hi=3.0)
        pts = locate(1, 1, win, CFG)
        for p, q in zip(pts, pts[1:]):
            assert abs(p.s - q.s) >= 1e-4

    def test_partition_merge_equals_whole(self):
        whole = ScanWindow(t_lo=10.0, t_hi=40.0, sigma_lo=-3.0, sigma_hi=4.5)
        lo = ScanWindow(t_lo=10.0, t_hi=25.0, sigma_lo=-3.0, sigma_hi=4.5)
        hi = ScanWindow(t_lo=25.0, t_hi=40.0, sigma_lo=-3.0, sigma_hi=4.5)
        key = lambda p: (p.beta, p.gamma, p.residual)
        merged = sorted([key(p) for p in locate(1, 0, lo, CFG)]
                        + [key(p) for p in locate(1, 0, hi, CFG)])
        assert merged == sorted(key(p) for p in locate(1, 0, whole, CFG))

    def test_repeat_run_identical(self):
        win = ScanWindow(t_lo=20.0, t_hi=35.0, sigma_lo=-3.0, sigma_hi=4.5)
        a = locate(1, 1j, win, CFG)
        b = locate(1, 1j, win, CFG)
        assert [(p.beta, p.gamma) for p in a] == \
            [(p.beta, p.gamma) for p in b]

    def test_conjugate_pairing(self):
        # roots of zeta^(k) = conj(a) at positive height are conjugates of
        # a-points at negative height: certify the pairing point by point
        win = ScanWindow(t_lo=10.0, t_hi=40.0, sigma_lo=-3.0, sigma_hi=4.5)
        for p in locate(1, -1j, win, CFG):
            mirrored = zeta_deriv(1, p.s.conjugate())
            assert abs(mirrored - 1j) <= 1e-9

    def test_window_requires_band(self):
        with pytest.raises(ValueError):
            ScanWindow(t_lo=0.0, t_hi=10.0, sigma_lo=-3.0, sigma_hi=4.0)
        with pytest.raises(ValueError):
            ScanWindow(t_lo=1.0, t_hi=10.0, sigma_lo=0.6, sigma_hi=4.0)


class TestStripAndLocal:
    def test_strip_count_ratio(self):
        rep = strip_count_check(1, 1, 100.0, sigma_lo=-16.0, sigma_hi=3.0,
                                cfg=CFG)
        assert rep.count >= 0
        assert rep.log_ratio <= 10.0

    def test_empty_strip(self):
        # no 1-points of zeta' with gamma in (2, 3)
        rep = strip_count_check(1, 1, 2.0, sigma_lo=-16.0, sigma_hi=3.0,
                                cfg=CFG)
        assert rep.count == 0

    def test_local_expansion_bounded(self):
        val = local_expansion_residual(1, 1, 0.5 + 50j, sigma_lo=-16.0,
                                       sigma_hi=3.0, cfg=CFG)
        assert abs(val) <= 20.0 * math.log(50.0)
        val0 = local_expansion_residual(1, 0, 2.0 + 100j, sigma_lo=-16.0,
                                        sigma_hi=4.5, cfg=CFG)
        assert abs(val0) <= 20.0 * math.log(100.0)

    def test_local_expansion_free_region(self):
        # far right of e2 the log-derivative itself is already small and
        # the unit strip holds no points
        val = local_expansion_residual(1, 1, 6.0 + 30j, sigma_lo=-16.0,
                                       sigma_hi=3.0, cfg=CFG)
        assert abs(val) <= 2.0

    def test_near_root_guard(self):
        beta, gamma = ZETA1_ZEROS_TO_50[0]
        with pytest.raises(NearRoot):
            local_expansion_residual(
                1, 0, complex(beta + 1e-5, gamma), sigma_lo=-3.0,
                sigma_hi=4.5, cfg=CFG)
