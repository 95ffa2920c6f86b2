"""Command-line front end.

Subcommands: scan, regions, coeffs, count, census, expsum, littlewood,
betasum, trivial, selftest.  Reports are one-row CSV on stdout; point sets
are line-delimited JSON files produced by ``scan``.  Exit codes: 0 success,
1 criterion or library failure, 2 usage error (argparse's default).

The environment variable ZAP_PRECISION selects the evaluation mode for the
whole process: "standard" (native doubles, the default) or "compensated"
(error-free transformed Dirichlet sums).
"""

from __future__ import annotations

import argparse
import csv
import math
import os
import sys
from pathlib import Path

from . import __version__, tunables
from .census import census, expsum, littlewood_balance, beta_sum_check
from .coeffs import alpha, alpha_oracle, alpha_zero
from .errors import ZapError
from .mainterms import count_main
from .regions import find_n_min, region_bounds, trivial_apoint
from .runner import (
    build_manifest,
    load_points,
    run_scan,
    verify_points_checksum,
)
from .selftest import render_table, run_all
from .zeta import EvalConfig


def _parse_a(text: str) -> complex:
    """Accept 'RE,IM', a bare real, or 'i'/'j' forms."""
    text = text.strip()
    if "," in text:
        re_s, im_s = text.split(",", 1)
        return complex(float(re_s), float(im_s))
    try:
        return complex(float(text), 0.0)
    except ValueError:
        return complex(text.replace("i", "j"))


def _cfg_from_env() -> EvalConfig:
    return EvalConfig.from_env()


def _csv_out(header: list[str], rows: list[list]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _fmt(x) -> str:
    if isinstance(x, float):
        return format(x, ".17g")
    return str(x)


def _load_checked(args) -> list:
    if getattr(args, "manifest", None):
        if not verify_points_checksum(args.points, args.manifest):
            raise ZapError("points file does not match manifest checksum")
    return load_points(args.points)


def cmd_scan(args) -> int:
    cfg = _cfg_from_env()
    out = Path(args.out) if args.out else Path(
        f"points_k{args.k}_a{args.a.real:g}_{args.a.imag:g}.jsonl")
    manifest_path = out.with_suffix(out.suffix + ".manifest.json")
    request = build_manifest(args.k, args.a, args.t0, args.t1, cfg,
                             window_height=args.window,
                             sigma_lo=args.sigma_lo, sigma_hi=args.sigma_hi)
    manifest = run_scan(manifest_path, out, request, jobs=args.jobs)
    n = sum(1 for _ in open(out, "r", encoding="utf-8"))
    print(f"scan complete: {n} points in {out} "
          f"(windows {len(manifest.completed)}, "
          f"unresolved {len(manifest.unresolved)})", file=sys.stderr)
    if manifest.unresolved:
        return 1
    return 0


def _trivial_table(args) -> None:
    cfg = _cfg_from_env()
    n_min = find_n_min(args.k, args.a, cfg)
    rows = []
    for n in range(n_min, n_min + args.boxes):
        box = trivial_apoint(args.k, args.a, n, cfg, n_min=n_min)
        rows.append([n, _fmt(box.root.beta), _fmt(box.root.gamma),
                     box.winding, _fmt(box.root.residual)])
    _csv_out(["n", "beta", "gamma", "winding", "newton_residual"], rows)


def cmd_regions(args) -> int:
    rb = region_bounds(args.k, args.a)
    print(f"# k={args.k} a={args.a} e1={rb.e1} e2={rb.e2} "
          f"e1_strict={rb.e1_strict} e2_strict={rb.e2_strict}",
          file=sys.stderr)
    _trivial_table(args)
    return 0


def cmd_trivial(args) -> int:
    _trivial_table(args)
    return 0


def cmd_coeffs(args) -> int:
    if args.x is not None:
        if args.a == 0:
            val = alpha_zero(args.k, args.x)
        else:
            val = alpha(args.k, args.a, args.x)
        _csv_out(["index", "alpha_re", "alpha_im"],
                 [[_fmt(args.x), _fmt(val.real), _fmt(val.imag)]])
        return 0
    table = alpha_oracle(args.k, args.a, args.max)
    rows = []
    for idx in sorted(table.entries, key=lambda i: i.value):
        c = table.entries[idx]
        label = str(idx.numerator) if idx.log2_denominator == 0 \
            else f"{idx.numerator}/{1 << idx.log2_denominator}"
        rows.append([label, _fmt(c.real), _fmt(c.imag)])
    _csv_out(["index", "alpha_re", "alpha_im"], rows)
    return 0


def cmd_count(args) -> int:
    predicted = count_main(args.k, args.a, args.T)
    row = [args.k, _fmt(args.a.real), _fmt(args.a.imag), _fmt(args.T),
           _fmt(predicted)]
    header = ["k", "a_re", "a_im", "T", "predicted"]
    if args.points:
        pts = _load_checked(args)
        observed = sum(p.multiplicity for p in pts if 1.0 < p.gamma < args.T)
        ratio = abs(observed - predicted) / math.log(args.T)
        row += [observed, _fmt(observed - predicted), _fmt(ratio)]
        header += ["observed", "remainder", "ratio"]
    _csv_out(header, [row])
    return 0


def cmd_census(args) -> int:
    pts = _load_checked(args)
    rep = census(args.k, args.a, args.T, args.U, pts)
    _csv_out(
        ["k", "a_re", "a_im", "T", "U", "n1", "n2", "n3", "total",
         "halfwidth", "main_total", "remainder_ratio", "boundary_hits"],
        [[rep.k, _fmt(rep.a.real), _fmt(rep.a.imag), _fmt(rep.t_height),
          _fmt(rep.u), rep.n1, rep.n2, rep.n3, rep.total,
          _fmt(rep.halfwidth), _fmt(rep.main_total),
          _fmt(rep.remainder_ratio), len(rep.boundary_hits)]])
    if args.svg:
        _beta_histogram_svg(pts, args.T, args.U, args.svg)
    return 0


def cmd_expsum(args) -> int:
    pts = _load_checked(args)
    rep = expsum(args.k, args.a, args.x, args.T, pts)
    _csv_out(
        ["k", "a_re", "a_im", "x", "T", "observed_re", "observed_im",
         "predicted_re", "predicted_im", "remainder_ratio"],
        [[rep.k, _fmt(rep.a.real), _fmt(rep.a.imag), _fmt(rep.x),
          _fmt(rep.t_height), _fmt(rep.observed.real),
          _fmt(rep.observed.imag), _fmt(rep.predicted.real),
          _fmt(rep.predicted.imag), _fmt(rep.remainder_ratio)]])
    return 0


def cmd_littlewood(args) -> int:
    pts = _load_checked(args)
    rep = littlewood_balance(args.k, args.a, args.T, args.U, pts,
                             _cfg_from_env())
    _csv_out(
        ["k", "a_re", "a_im", "T", "U", "observed", "predicted", "ratio"],
        [[args.k, _fmt(args.a.real), _fmt(args.a.imag), _fmt(args.T),
          _fmt(args.U), _fmt(rep.observed.real), _fmt(rep.predicted.real),
          _fmt(rep.ratio)]])
    return 0


def cmd_betasum(args) -> int:
    pts = _load_checked(args)
    rep = beta_sum_check(args.k, args.a, args.b, args.T, args.U, pts)
    _csv_out(
        ["k", "a_re", "a_im", "b", "T", "U", "observed", "predicted",
         "ratio"],
        [[args.k, _fmt(args.a.real), _fmt(args.a.imag), _fmt(args.b),
          _fmt(args.T), _fmt(args.U), _fmt(rep.observed.real),
          _fmt(rep.predicted.real), _fmt(rep.ratio)]])
    return 0


def cmd_selftest(args) -> int:
    results = run_all(args.workdir, jobs=args.jobs, cfg=_cfg_from_env())
    print(render_table(results))
    return 0 if all(r.passed for r in results) else 1


def _beta_histogram_svg(points, t_lo, u, path):
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    betas = [p.beta for p in points if t_lo < p.gamma < t_lo + u]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.hist(betas, bins=60)
    ax.set_xlabel("beta")
    ax.set_ylabel("count")
    ax.set_title(f"real parts of a-points, t in ({t_lo:g}, {t_lo + u:g})")
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="zap",
        description="a-points of derivatives of the Riemann zeta function")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def add_ka(p):
        p.add_argument("--k", type=int, required=True,
                       help="derivative order (positive integer)")
        p.add_argument("--a", type=_parse_a, required=True,
                       help="target value, as RE,IM or a bare real")

    p = sub.add_parser("scan", help="locate a-points in a height range")
    add_ka(p)
    p.add_argument("--t0", type=float, default=1.0)
    p.add_argument("--t1", type=float, required=True)
    p.add_argument("--jobs", type=int, default=os.cpu_count())
    p.add_argument("--out", type=str, default=None,
                   help="points JSONL path (manifest sits next to it)")
    p.add_argument("--window", type=float, default=10.0,
                   help="height of one work window")
    p.add_argument("--sigma-lo", dest="sigma_lo", type=float, default=None)
    p.add_argument("--sigma-hi", dest="sigma_hi", type=float, default=None)
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser("regions",
                       help="free-region bounds and trivial-root table")
    add_ka(p)
    p.add_argument("--boxes", type=int, default=21)
    p.set_defaults(fn=cmd_regions)

    p = sub.add_parser("trivial", help="trivial-root table only")
    add_ka(p)
    p.add_argument("--boxes", type=int, default=21)
    p.set_defaults(fn=cmd_trivial)

    p = sub.add_parser("coeffs", help="exponential-sum coefficients")
    add_ka(p)
    p.add_argument("--max", type=int, default=512)
    p.add_argument("--x", type=float, default=None,
                   help="single index instead of the whole table")
    p.set_defaults(fn=cmd_coeffs)

    def add_points(p):
        p.add_argument("--points", type=str, required=True)
        p.add_argument("--manifest", type=str, default=None,
                       help="verify the points file checksum first")

    p = sub.add_parser("count", help="counting main term, optionally vs scan")
    add_ka(p)
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--points", type=str, default=None)
    p.add_argument("--manifest", type=str, default=None)
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("census", help="three-band census of a window")
    add_ka(p)
    add_points(p)
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--U", type=float, required=True)
    p.add_argument("--svg", type=str, default=None,
                   help="write a beta histogram SVG")
    p.set_defaults(fn=cmd_census)

    p = sub.add_parser("expsum", help="exponential sum over located points")
    add_ka(p)
    add_points(p)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--T", type=float, required=True)
    p.set_defaults(fn=cmd_expsum)

    p = sub.add_parser("littlewood", help="sum of (beta-1/2) vs log integral")
    add_ka(p)
    add_points(p)
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--U", type=float, required=True)
    p.set_defaults(fn=cmd_littlewood)

    p = sub.add_parser("betasum", help="sum of (beta+b) vs its main term")
    add_ka(p)
    add_points(p)
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--U", type=float, required=True)
    p.add_argument("--b", type=float, default=tunables.BETA_SUM_B)
    p.set_defaults(fn=cmd_betasum)

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.add_argument("--workdir", type=str, default="zap-selftest")
    p.add_argument("--jobs", type=int, default=os.cpu_count())
    p.set_defaults(fn=cmd_selftest)

    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ZapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
