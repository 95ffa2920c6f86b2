"""Acceptance suite: every numbered verification criterion in one place.

Each criterion function returns a :class:`CriterionResult`; the CLI
``selftest`` subcommand and the pytest acceptance module both call these,
so the shipped binary and the test suite cannot drift apart.  Scans are
cached on disk through the normal manifest/resume machinery: re-running the
suite reuses completed windows.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import tunables
from .census import beta_half_sum, census, expsum, littlewood_balance
from .coeffs import (
    CoeffIndex,
    alpha,
    alpha_abs_scale,
    alpha_oracle,
    alpha_zero,
    alpha_zero_abs_scale,
)
from .errors import ZapError
from .mainterms import count_main
from .regions import find_n_min, trivial_apoint
from .runner import build_manifest, load_points, run_scan
from .scan import APoint
from .zeta import DEFAULT_CONFIG, EvalConfig, zeta, zeta_deriv

TWO_PI = 2.0 * math.pi


@dataclass
class CriterionResult:
    name: str
    passed: bool
    detail: str
    seconds: float


class ScanCache:
    """Disk-backed scans shared by the criteria that need points."""

    def __init__(self, workdir: str | Path, jobs: int | None = None,
                 cfg: EvalConfig = DEFAULT_CONFIG):
        self.workdir = Path(workdir)
        self.workdir.mkdir(parents=True, exist_ok=True)
        self.jobs = jobs
        self.cfg = cfg
        self._mem: dict[tuple, list[APoint]] = {}

    def points(self, k: int, a: complex, t1: float) -> list[APoint]:
        key = (k, complex(a), float(t1))
        if key not in self._mem:
            tag = (f"k{k}_a{complex(a).real:g}_{complex(a).imag:g}_t{t1:g}"
                   .replace("-", "m").replace(".", "p"))
            manifest_path = self.workdir / f"scan_{tag}.manifest.json"
            points_path = self.workdir / f"scan_{tag}.jsonl"
            request = build_manifest(k, complex(a), 1.0, float(t1), self.cfg)
            run_scan(manifest_path, points_path, request, jobs=self.jobs)
            self._mem[key] = load_points(points_path)
        return self._mem[key]


def _count(points: list[APoint], t_lo: float, t_hi: float) -> int:
    return sum(p.multiplicity for p in points if t_lo < p.gamma < t_hi)


def _timed(fn):
    t0 = time.perf_counter()
    passed, detail = fn()
    return passed, detail, time.perf_counter() - t0


# --- criterion bodies -------------------------------------------------------

def criterion_evaluator(cfg: EvalConfig = DEFAULT_CONFIG) -> CriterionResult:
    """Closed forms, derivative order zero, finite differences."""
    def body():
        errs = []
        rel1 = abs(zeta(2.0 + 0j, cfg) - math.pi ** 2 / 6) / (math.pi ** 2 / 6)
        rel2 = abs(zeta(-1.0 + 0j, cfg) - (-1.0 / 12.0)) * 12.0
        if rel1 > 1e-12 or rel2 > 1e-12:
            errs.append(f"closed forms off: {rel1:.1e}, {rel2:.1e}")
        rng = np.random.default_rng(11)
        pts = rng.uniform(-3, 3, 20) + 1j * rng.uniform(2, 40, 20)
        worst0 = max(abs(zeta_deriv(0, s, cfg) - zeta(s, cfg))
                     / max(abs(zeta(s, cfg)), 1e-300) for s in pts)
        if worst0 > 1e-12:
            errs.append(f"order-0 mismatch {worst0:.1e}")
        h = 1e-4
        pts = rng.uniform(-3, 3, 50) + 1j * rng.uniform(2, 40, 50)
        worst_fd = 0.0
        for k in (1, 2):
            for s in pts:
                fd = (zeta_deriv(k - 1, s + h, cfg)
                      - zeta_deriv(k - 1, s - h, cfg)) / (2 * h)
                worst_fd = max(worst_fd, abs(fd - zeta_deriv(k, s, cfg)))
        if worst_fd > 1e-5:
            errs.append(f"finite difference off {worst_fd:.1e}")
        detail = (f"closed-form rel {max(rel1, rel2):.1e}; "
                  f"order-0 {worst0:.1e}; fin-diff {worst_fd:.1e}")
        return not errs, detail + ("; " + "; ".join(errs) if errs else "")
    passed, detail, dt = _timed(body)
    return CriterionResult("evaluator exactness", passed, detail, dt)


def criterion_coefficients() -> CriterionResult:
    """Enumeration vs formal division, plus the frozen small values.

    "Relative" is measured against the chain sum of |term|: some entries
    cancel to zero analytically and only carry roundoff of that scale.
    """
    def body():
        worst = 0.0
        for (k, a) in [(1, 1), (1, 1j), (2, 1)]:
            table = alpha_oracle(k, a, 100)
            for x in range(2, 101):
                e = alpha(k, a, x)
                o = table.get(x)
                scale = max(abs(e), abs(o), alpha_abs_scale(k, a, x))
                worst = max(worst, abs(e - o) / scale)
        for k in (1, 2):
            table = alpha_oracle(k, 0, 100)
            for num in range(1, 101):
                for l2 in range(0, 6):
                    if l2 > 0 and num % 2 == 0:
                        continue
                    idx = CoeffIndex(num, l2)
                    e = alpha_zero(k, idx)
                    o = table.get(idx)
                    scale = max(abs(e), abs(o),
                                alpha_zero_abs_scale(k, idx), 1e-30)
                    worst = max(worst, abs(e - o) / scale)
        l2c = math.log(2.0)
        frozen = max(
            abs(alpha(1, 1, 2) - (-(l2c ** 2))),
            abs(alpha(1, 1, 4) - (-4 * l2c ** 2 + l2c ** 3)))
        ok = worst <= 1e-12 and frozen <= 1e-12
        return ok, f"oracle worst rel {worst:.1e}; frozen dev {frozen:.1e}"
    passed, detail, dt = _timed(body)
    return CriterionResult("coefficient oracle equivalence", passed, detail,
                           dt)


def criterion_theorem1(cache: ScanCache) -> CriterionResult:
    """Counting remainders for a != 0 against (T/2pi)log(T/2pi) - T/2pi."""
    def body():
        worst = 0.0
        for k in (1, 2):
            for a in (1, 1j, 2):
                t1 = 2010.0 if (k, a) == (1, 1) else 1001.0
                pts = cache.points(k, a, t1)
                for T in (100.0, 300.0, 1000.0):
                    ratio = abs(_count(pts, 1.0, T) - count_main(k, a, T)) \
                        / math.log(T)
                    worst = max(worst, ratio)
        return worst <= tunables.THEOREM_COUNT_CAP, \
            f"worst |N-main|/logT = {worst:.3f} (cap {tunables.THEOREM_COUNT_CAP})"
    passed, detail, dt = _timed(body)
    return CriterionResult("counting remainder (a != 0)", passed, detail, dt)


def criterion_berndt(cache: ScanCache) -> CriterionResult:
    """Zero-count remainder with the (T/2pi)log(T/4pi) main term."""
    def body():
        pts = cache.points(1, 0, 1001.0)
        worst = 0.0
        for T in (100.0, 300.0, 1000.0):
            ratio = abs(_count(pts, 1.0, T) - count_main(1, 0, T)) \
                / math.log(T)
            worst = max(worst, ratio)
        return worst <= tunables.BERNDT_COUNT_CAP, \
            f"worst |N-main|/logT = {worst:.3f} (cap {tunables.BERNDT_COUNT_CAP})"
    passed, detail, dt = _timed(body)
    return CriterionResult("counting remainder (a = 0)", passed, detail, dt)


def criterion_strips(cache: ScanCache) -> CriterionResult:
    """Unit-strip counts stay O(log T)."""
    def body():
        pts = cache.points(1, 1, 2010.0)
        worst = 0.0
        for T in range(50, 1001, 50):
            ratio = _count(pts, float(T), float(T) + 1.0) / math.log(T)
            worst = max(worst, ratio)
        return worst <= tunables.STRIP_COUNT_CAP, \
            f"worst strip/logT = {worst:.3f} (cap {tunables.STRIP_COUNT_CAP})"
    passed, detail, dt = _timed(body)
    return CriterionResult("unit strip counts", passed, detail, dt)


def criterion_theorem2(cache: ScanCache) -> CriterionResult:
    """Exponential sums against (T/2pi) alpha(x) at T = 500."""
    def body():
        worst = 0.0
        for (k, a, x) in [(1, 1, 2.0), (1, 1, 4.0), (1, 0, 1.5),
                          (1, 1, 2.5)]:
            pts = cache.points(k, a, 2010.0 if a == 1 else 1001.0)
            rep = expsum(k, a, x, 500.0, pts)
            worst = max(worst, rep.remainder_ratio)
        return worst <= tunables.EXPSUM_CAP, \
            f"worst |sum-main|/logT = {worst:.3f} (cap {tunables.EXPSUM_CAP})"
    passed, detail, dt = _timed(body)
    return CriterionResult("exponential sums", passed, detail, dt)


def criterion_census(cache: ScanCache) -> CriterionResult:
    """Band census at T = U = 1000 for k = 1, a = 1."""
    def body():
        pts = cache.points(1, 1, 2010.0)
        rep = census(1, 1, 1000.0, 1000.0, pts)
        identity = rep.total == _count(pts, 1000.0, 2000.0)
        frac = rep.n3 / max(rep.total, 1)
        halfsum = TWO_PI * beta_half_sum(pts, 1000.0, 2000.0)
        cap = tunables.BETA_HALF_SUM_CAP * 1000.0 * math.log(math.log(1000.0))
        ok = identity and frac >= tunables.CENTRAL_BAND_MIN_FRACTION \
            and halfsum <= cap
        return ok, (f"n1+n2+n3={rep.total} (identity {identity}); "
                    f"n3/total={frac:.3f}; 2pi sum(beta-1/2)={halfsum:.1f} "
                    f"<= {cap:.0f}")
    passed, detail, dt = _timed(body)
    return CriterionResult("three-band census", passed, detail, dt)


def criterion_littlewood(cache: ScanCache,
                         cfg: EvalConfig = DEFAULT_CONFIG) -> CriterionResult:
    """Littlewood balance on (100, 200) for (1, 2) and (1, i)."""
    def body():
        worst = 0.0
        for a in (2, 1j):
            pts = cache.points(1, a, 1001.0)
            rep = littlewood_balance(1, a, 100.0, 100.0, pts, cfg)
            worst = max(worst, rep.ratio)
        return worst <= tunables.LITTLEWOOD_CAP, \
            f"worst |obs-pred|/logT = {worst:.3f} (cap {tunables.LITTLEWOOD_CAP})"
    passed, detail, dt = _timed(body)
    return CriterionResult("littlewood balance", passed, detail, dt)


def criterion_trivial(cfg: EvalConfig = DEFAULT_CONFIG) -> CriterionResult:
    """21 consecutive trivial boxes per (k=1, a in {1, 0})."""
    def body():
        msgs = []
        ok = True
        for a in (1, 0):
            n_min = find_n_min(1, a, cfg)
            dists = []
            for n in range(n_min, n_min + 21):
                box = trivial_apoint(1, a, n, cfg)
                if box.winding != 1 or box.root.residual > 1e-9:
                    ok = False
                dists.append(abs(box.root.s - (-2.0 * n)))
            tail = dists[-10:]
            mono = all(tail[i + 1] <= tail[i] + 1e-9
                       for i in range(len(tail) - 1))
            if not mono:
                ok = False
            msgs.append(f"a={a}: n_min={n_min}, last dist {dists[-1]:.4f}, "
                        f"monotone {mono}")
        return ok, "; ".join(msgs)
    passed, detail, dt = _timed(body)
    return CriterionResult("trivial a-points", passed, detail, dt)


def criterion_determinism(workdir: str | Path,
                          cfg: EvalConfig = DEFAULT_CONFIG) -> CriterionResult:
    """Worker count and interruption cannot change the output bytes."""
    def body():
        wd = Path(workdir) / "determinism"
        wd.mkdir(parents=True, exist_ok=True)
        outputs = {}
        for label, jobs, stop in (("j1", 1, None), ("j8", 8, None),
                                  ("resume", 8, 2)):
            man = wd / f"{label}.manifest.json"
            pts = wd / f"{label}.jsonl"
            req = build_manifest(1, 1, 1.0, 61.0, cfg)
            run_scan(man, pts, req, jobs=jobs, stop_after=stop)
            if stop is not None:
                # resume the interrupted run to completion
                run_scan(man, pts, req, jobs=jobs)
            outputs[label] = pts.read_bytes()
        same_jobs = outputs["j1"] == outputs["j8"]
        same_resume = outputs["j1"] == outputs["resume"]
        return same_jobs and same_resume, \
            f"jobs 1 vs 8 identical: {same_jobs}; resumed identical: {same_resume}"
    passed, detail, dt = _timed(body)
    return CriterionResult("determinism and resume", passed, detail, dt)


def run_all(workdir: str | Path, jobs: int | None = None,
            cfg: EvalConfig = DEFAULT_CONFIG) -> list[CriterionResult]:
    cache = ScanCache(workdir, jobs=jobs, cfg=cfg)
    return [
        criterion_evaluator(cfg),
        criterion_coefficients(),
        criterion_theorem1(cache),
        criterion_berndt(cache),
        criterion_strips(cache),
        criterion_theorem2(cache),
        criterion_census(cache),
        criterion_littlewood(cache, cfg),
        criterion_trivial(cfg),
        criterion_determinism(workdir, cfg),
    ]


def render_table(results: list[CriterionResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.name:<{width}}  {mark}  [{r.seconds:7.1f}s]  "
                     f"{r.detail}")
    return "\n".join(lines)
