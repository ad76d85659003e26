"""``xiprime formfactor``, ``xiprime gaps`` and ``xiprime simulate``."""

from __future__ import annotations

import argparse
from pathlib import Path

from ..config import RunConfig


def register(subparsers, parents) -> None:
    ff = subparsers.add_parser("formfactor", parents=parents, help="empirical form factor")
    _zero_source(ff)
    ff.add_argument("--T", dest="T", type=float, help="height cutoff (defaults to t_max)")
    ff.add_argument("--out", help="CSV path")
    ff.set_defaults(handler=handle_formfactor)

    gaps = subparsers.add_parser("gaps", parents=parents, help="normalized gap statistics")
    _zero_source(gaps)
    gaps.add_argument("--thresholds", default="", help="comma separated extra thresholds")
    gaps.add_argument("--bins", type=int, default=40)
    gaps.add_argument("--out", help="histogram CSV path")
    gaps.set_defaults(handler=handle_gaps)

    sim = subparsers.add_parser("simulate", parents=parents, help="synthetic zero processes")
    sim.add_argument("process", choices=("ah",))
    sim.add_argument("--count", type=int)
    sim.add_argument("--start-height", dest="start_height", type=float)
    sim.add_argument("--out", help="zero file path")
    sim.set_defaults(handler=handle_simulate)


def _zero_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--zeros", help="zero file; scanned from the cache when omitted")
    parser.add_argument("--kind", default="xi-prime", help="kind to scan when --zeros is omitted")


def _load_zeros(args: argparse.Namespace, cfg: RunConfig, t_hi: float):
    from ..pipelines import zero_set
    from ..zeros import ZeroKind, import_zeros

    if args.zeros:
        return import_zeros(args.zeros)
    return zero_set(cfg, ZeroKind.parse(args.kind), t_hi)


def handle_formfactor(args: argparse.Namespace, cfg: RunConfig) -> int:
    from ..app import emit
    from ..pipelines import FIG1_HEADER, write_csv
    from .form_factor import form_factor

    T = args.T or cfg.t_max
    zs = _load_zeros(args, cfg, T)
    curve = form_factor(zs, T, cfg.alpha_grid.values(), cfg.window, cfg.K)
    out = Path(args.out) if args.out else cfg.out_dir / "formfactor.csv"
    write_csv(out, FIG1_HEADER, curve.rows())
    emit(
        {
            "path": str(out),
            "count": curve.count,
            "T": curve.T,
            "window": curve.window,
            "neglected_weight_bound": curve.neglected_weight_bound,
        }
    )
    return 0


def handle_gaps(args: argparse.Namespace, cfg: RunConfig) -> int:
    from ..app import emit
    from ..pipelines import write_csv
    from .gaps import gap_histogram, normalize_gaps

    thresholds = [float(t) for t in args.thresholds.split(",") if t.strip()]
    thresholds += cfg.gap_thresholds
    stats = normalize_gaps(_load_zeros(args, cfg, cfg.t_max), thresholds)
    if args.out:
        write_csv(Path(args.out), ("bin_lo", "bin_hi", "count"), gap_histogram(stats, args.bins))
    emit(
        {
            "gaps": len(stats),
            "mean": stats.mean,
            "expected_mean": stats.expected_mean,
            "fraction_below": {repr(k): v for k, v in stats.fraction_below.items()},
        }
    )
    return 0


def handle_simulate(args: argparse.Namespace, cfg: RunConfig) -> int:
    from ..app import emit
    from ..zeros import export_zeros
    from .ah_process import AHProcessSpec, ah_generate

    spec = AHProcessSpec(
        gap_probabilities=cfg.ah.gap_probabilities(),
        count=args.count or cfg.ah.count,
        seed=cfg.seed,
        start_height=args.start_height or cfg.ah.start_height,
    )
    zs = ah_generate(spec)
    out = Path(args.out) if args.out else cfg.out_dir / f"ah_seed{cfg.seed}.txt"
    export_zeros(zs, out)
    emit({"path": str(out), "count": len(zs), "source": zs.source, "mean_gap": spec.mean_gap})
    return 0
