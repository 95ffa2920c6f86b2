"""Free-region bounds and trivial a-point boxes."""

import numpy as np
import pytest

from zapoints import EvalConfig
from zapoints.errors import WindingNotOne
from zapoints.regions import (
    RegionBounds,
    find_e1,
    find_e2,
    find_n_min,
    majorant,
    region_bounds,
    trivial_apoint,
    trivial_box_rect,
)
from zapoints.scan import ScanWindow, locate
from zapoints.zeta import zeta_deriv_many

CFG = EvalConfig()


class TestFindE2:
    def test_frozen_values(self):
        assert find_e2(1, 1) == 2.0       # majorant(1, 2) = 0.93755 < 1
        assert find_e2(1, 10) == 1.5
        assert find_e2(2, 1) == 2.5       # majorant(2, 2) = 1.98928 > 1
        assert find_e2(1, 0) == 3.5
        assert find_e2(2, 0) == 4.5

    def test_monotone_in_modulus(self):
        ladder = [find_e2(1, a) for a in (0.1, 1.0, 10.0, 100.0)]
        assert all(b <= a for a, b in zip(ladder, ladder[1:]))

    def test_majorant_certifies(self):
        # |zeta^(k)(sigma + it)| < |a| on a probe grid right of e2
        for (k, a) in [(1, 1.0), (2, 1j)]:
            e2 = find_e2(k, a)
            ts = np.linspace(1.0, 400.0, 120)
            for sigma in (e2, e2 + 0.5, e2 + 2.0):
                vals = np.abs(zeta_deriv_many(k, sigma + 1j * ts, CFG))
                assert float(vals.max()) < abs(a)
                assert float(vals.max()) < majorant(k, sigma)


class TestFindE1:
    def test_value_and_monotonicity(self):
        e1_unit = find_e1(1, 1, t_max=500.0)
        e1_huge = find_e1(1, 1.0e6, t_max=500.0)
        assert e1_unit <= -1.0
        assert e1_huge < e1_unit

    def test_region_bounds_invariants(self):
        rb = region_bounds(1, 1, t_max=500.0)
        assert rb.e1_strict <= rb.e1 <= 0.0
        assert 1.0 <= rb.e2 <= rb.e2_strict
        assert rb.scan_sigma_lo < 0.5 < rb.scan_sigma_hi

    def test_rejects_inconsistent_bounds(self):
        with pytest.raises(ValueError):
            RegionBounds(k=1, a=1, e1=-1.0, e2=2.0, e1_strict=-0.5,
                         e2_strict=2.5, t_max=100.0)

    def test_scan_respects_free_regions(self):
        rb = region_bounds(1, 1, t_max=500.0)
        win = ScanWindow(t_lo=30.0, t_hi=60.0, sigma_lo=rb.scan_sigma_lo,
                         sigma_hi=rb.scan_sigma_hi)
        for p in locate(1, 1, win, CFG):
            assert p.beta < rb.e2
            assert p.beta > rb.e1 or p.gamma < 1.0


class TestTrivialBoxes:
    def test_root_near_minus_30(self):
        box = trivial_apoint(1, 1, 15, CFG)
        assert box.winding == 1
        # oracle-refined location; the spec's "within 0.5" is off by 1.5e-3
        assert abs(box.root.beta - (-29.49848054)) < 1e-7
        assert abs(box.root.gamma) < 1e-9
        assert abs(box.root.beta + 30.0) < 0.55

    def test_distance_shrinks_with_n(self):
        d15 = abs(trivial_apoint(1, 1, 15, CFG).root.s + 30.0)
        d20 = abs(trivial_apoint(1, 1, 20, CFG).root.s + 40.0)
        assert d20 < d15

    def test_winding_not_one_below_threshold(self):
        # the box around -6 holds no zero of zeta'
        with pytest.raises(WindingNotOne):
            trivial_apoint(1, 0, 3, CFG)

    def test_complex_target_off_axis_root(self):
        box = trivial_apoint(1, 1j, 8, CFG)
        assert abs(box.root.gamma) > 1e-3
        assert box.root.residual <= 1e-9

    def test_box_geometry(self):
        assert trivial_box_rect(4) == (-9.0, -1.0, -7.0, 1.0)
        with pytest.raises(ValueError):
            trivial_apoint(1, 1, 1, CFG)

    def test_n_min_matrix(self):
        assert find_n_min(1, 0, CFG) == 4
        assert find_n_min(1, 1, CFG) == 8

    def test_roots_strictly_inside(self):
        for n in (8, 12):
            box = trivial_apoint(1, 1, n, CFG)
            sl, tl, sr, th = box.box
            assert sl < box.root.beta < sr
            assert tl < box.root.gamma < th
