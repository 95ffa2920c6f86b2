"""Scan orchestration: window grids, checkpointed manifests, worker pools.

A scan is a grid of height windows over (t0, t1).  Each window is an
independent work item; a worker returns the window's certified points,
the coordinator appends them to a journal and marks the window complete in
the manifest.  Finalizing sorts every journal line by (gamma, beta) into
the points file and records its SHA-256, so

* re-running a completed window is a no-op,
* an interrupted run resumed later produces a byte-identical points file,
* worker count never affects the output.

Floats are serialized with 17 significant digits (full double round-trip).
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
import math
import os
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ManifestMismatch, ZapError
from .regions import region_bounds
from .scan import APoint, ScanWindow, locate_result
from .zeta import EvalConfig

SCHEMA_VERSION = 1
DEFAULT_WINDOW_HEIGHT = 10.0


def _g17(x: float) -> str:
    return format(float(x), ".17g")


def point_to_json(p: APoint) -> str:
    """One stable JSONL line per point (fixed key order, 17 digits)."""
    box = ",".join(_g17(v) for v in p.cert_box)
    return (
        '{"schema_version":%d,"k":%d,"a_re":%s,"a_im":%s,"beta":%s,'
        '"gamma":%s,"residual":%s,"box":[%s],"window_id":"%s"}'
        % (SCHEMA_VERSION, p.k, _g17(p.a.real), _g17(p.a.imag),
           _g17(p.beta), _g17(p.gamma), _g17(p.residual), box, p.window_id)
    )


def point_from_json(line: str) -> APoint:
    d = json.loads(line)
    if d.get("schema_version") != SCHEMA_VERSION:
        raise ZapError(f"unsupported points schema {d.get('schema_version')}")
    return APoint(k=d["k"], a=complex(d["a_re"], d["a_im"]), beta=d["beta"],
                  gamma=d["gamma"], residual=d["residual"],
                  cert_box=tuple(d["box"]), window_id=d["window_id"])


def load_points(path: str | Path) -> list[APoint]:
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(point_from_json(line))
    return out


def sha256_file(path: str | Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            h.update(chunk)
    return h.hexdigest()


@dataclass
class RunManifest:
    """Checkpointed description of one scan run."""

    k: int
    a_re: float
    a_im: float
    t0: float
    t1: float
    window_height: float
    sigma_lo: float
    sigma_hi: float
    cfg: dict
    schema_version: int = SCHEMA_VERSION
    completed: list[str] = field(default_factory=list)
    unresolved: dict = field(default_factory=dict)
    points_sha256: str | None = None

    @property
    def a(self) -> complex:
        return complex(self.a_re, self.a_im)

    def window_grid(self) -> list[tuple[str, float, float]]:
        n = max(1, math.ceil((self.t1 - self.t0) / self.window_height))
        grid = []
        for i in range(n):
            lo = self.t0 + i * self.window_height
            hi = min(self.t0 + (i + 1) * self.window_height, self.t1)
            if hi > lo:
                grid.append((f"w{i:05d}", lo, hi))
        return grid

    def request_key(self) -> dict:
        return {
            "schema_version": self.schema_version, "k": self.k,
            "a_re": self.a_re, "a_im": self.a_im, "t0": self.t0,
            "t1": self.t1, "window_height": self.window_height,
            "sigma_lo": self.sigma_lo, "sigma_hi": self.sigma_hi,
            "cfg": self.cfg,
        }

    def save(self, path: str | Path):
        tmp = Path(path).with_suffix(".tmp")
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(dataclasses.asdict(self), fh, indent=1, sort_keys=True)
        os.replace(tmp, path)

    @classmethod
    def load(cls, path: str | Path) -> "RunManifest":
        with open(path, "r", encoding="utf-8") as fh:
            return cls(**json.load(fh))


def build_manifest(k: int, a: complex, t0: float, t1: float,
                   cfg: EvalConfig,
                   window_height: float = DEFAULT_WINDOW_HEIGHT,
                   sigma_lo: float | None = None,
                   sigma_hi: float | None = None) -> RunManifest:
    """Manifest for a fresh scan; sigma bounds default to the free-region
    margins for (k, a)."""
    if sigma_lo is None or sigma_hi is None:
        rb = region_bounds(k, complex(a), t_max=max(t1 + 10.0, 100.0))
        sigma_lo = rb.scan_sigma_lo if sigma_lo is None else sigma_lo
        sigma_hi = rb.scan_sigma_hi if sigma_hi is None else sigma_hi
    return RunManifest(k=k, a_re=complex(a).real, a_im=complex(a).imag,
                       t0=float(t0), t1=float(t1),
                       window_height=float(window_height),
                       sigma_lo=float(sigma_lo), sigma_hi=float(sigma_hi),
                       cfg=dataclasses.asdict(cfg))


def _scan_window_task(args) -> tuple[str, list[str], list]:
    """Worker body: one window -> (id, jsonl lines, unresolved boxes)."""
    (k, a_re, a_im, lo, hi, sigma_lo, sigma_hi, cfg_dict, wid) = args
    cfg = EvalConfig(**cfg_dict)
    window = ScanWindow(t_lo=lo, t_hi=hi, sigma_lo=sigma_lo,
                        sigma_hi=sigma_hi)
    res = locate_result(k, complex(a_re, a_im), window, cfg, window_id=wid)
    lines = [point_to_json(p) for p in res.points]
    unresolved = [[list(u.rect), u.winding] for u in res.unresolved]
    return wid, lines, unresolved


def run_scan(manifest_path: str | Path, points_path: str | Path,
             request: RunManifest | None = None, jobs: int | None = None,
             stop_after: int | None = None) -> RunManifest:
    """Execute (or resume) the scan described by the manifest.

    ``request``, when given, must match an existing manifest exactly
    (ManifestMismatch otherwise) and seeds a fresh one when no manifest
    exists yet.  ``stop_after`` ends the run early after that many windows,
    leaving a resumable checkpoint (used by interruption tests).
    """
    manifest_path = Path(manifest_path)
    points_path = Path(points_path)
    journal_path = points_path.with_suffix(points_path.suffix + ".journal")

    if manifest_path.exists():
        manifest = RunManifest.load(manifest_path)
        if request is not None \
                and manifest.request_key() != request.request_key():
            raise ManifestMismatch(
                f"manifest {manifest_path} does not match the request")
    elif request is not None:
        manifest = request
        manifest.save(manifest_path)
    else:
        raise ManifestMismatch(f"no manifest at {manifest_path}")

    grid = manifest.window_grid()
    done = set(manifest.completed)
    pending = [(wid, lo, hi) for wid, lo, hi in grid if wid not in done]

    if jobs is None:
        jobs = os.cpu_count() or 1
    tasks = [(manifest.k, manifest.a_re, manifest.a_im, lo, hi,
              manifest.sigma_lo, manifest.sigma_hi, manifest.cfg, wid)
             for wid, lo, hi in pending]
    if stop_after is not None:
        tasks = tasks[:stop_after]

    def record(wid: str, lines: list[str], unresolved: list):
        with open(journal_path, "a", encoding="utf-8") as fh:
            for line in lines:
                fh.write(line + "\n")
        manifest.completed.append(wid)
        if unresolved:
            manifest.unresolved[wid] = unresolved
        manifest.save(manifest_path)

    if tasks:
        if jobs <= 1:
            for task in tasks:
                record(*_scan_window_task(task))
        else:
            import multiprocessing as mp
            with mp.get_context("spawn").Pool(processes=jobs) as pool:
                for wid, lines, unresolved in pool.imap(
                        _scan_window_task, tasks):
                    record(wid, lines, unresolved)

    if stop_after is not None and len(manifest.completed) < len(grid):
        return manifest     # intentionally interrupted; resumable

    # finalize: deterministic sort of the journal into the points file
    lines = []
    if journal_path.exists():
        with open(journal_path, "r", encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    seen = set()
    unique = []
    for ln in lines:
        if ln not in seen:
            seen.add(ln)
            unique.append(ln)
    keyed = []
    for ln in unique:
        d = json.loads(ln)
        keyed.append((d["gamma"], d["beta"], ln))
    keyed.sort(key=lambda t: (t[0], t[1]))
    tmp = points_path.with_suffix(".tmp")
    with open(tmp, "w", encoding="utf-8") as fh:
        for _, _, ln in keyed:
            fh.write(ln + "\n")
    os.replace(tmp, points_path)
    manifest.points_sha256 = sha256_file(points_path)
    manifest.save(manifest_path)
    return manifest


def verify_points_checksum(points_path: str | Path,
                           manifest_path: str | Path) -> bool:
    manifest = RunManifest.load(manifest_path)
    if manifest.points_sha256 is None:
        return False
    return sha256_file(points_path) == manifest.points_sha256
