"""Acceptance gate: one test per numbered criterion, shared with `zap
selftest`.

Heavy scans are cached per session (and across sessions when
ZAP_SELFTEST_DIR points at a persistent directory); every test prints its
criterion's pass/fail line.
"""

import pytest

from zapoints import selftest


def _report(result):
    mark = "PASS" if result.passed else "FAIL"
    print(f"{mark}  {result.name}: {result.detail}")
    assert result.passed, result.detail


def test_criterion_01_evaluator_exactness(cfg):
    _report(selftest.criterion_evaluator(cfg))


def test_criterion_02_coefficient_oracles():
    _report(selftest.criterion_coefficients())


def test_criterion_03_counting_remainder(scan_cache):
    _report(selftest.criterion_theorem1(scan_cache))


def test_criterion_04_zero_count_remainder(scan_cache):
    _report(selftest.criterion_berndt(scan_cache))


def test_criterion_05_unit_strips(scan_cache):
    _report(selftest.criterion_strips(scan_cache))


def test_criterion_06_exponential_sums(scan_cache):
    _report(selftest.criterion_theorem2(scan_cache))


def test_criterion_07_band_census(scan_cache):
    _report(selftest.criterion_census(scan_cache))


def test_criterion_08_littlewood_balance(scan_cache, cfg):
    _report(selftest.criterion_littlewood(scan_cache, cfg))


def test_criterion_09_trivial_apoints(cfg):
    _report(selftest.criterion_trivial(cfg))


def test_criterion_10_determinism(scan_workdir, cfg):
    _report(selftest.criterion_determinism(scan_workdir, cfg))
