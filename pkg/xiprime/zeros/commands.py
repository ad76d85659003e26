"""``xiprime zeros``: scans, audits and the Ξ′ / Z′ comparison."""

from __future__ import annotations

import argparse
from pathlib import Path

import numpy as np

from ..config import RunConfig
from ..errors import PreconditionError
from .models import ZeroKind

ACTIONS = ("scan", "audit", "interlace", "compare-zprime", "simple-report")
COMPARE_FROM = 20.0


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("zeros", parents=parents, help="zeros of Ξ, Ξ′ and Z′")
    parser.add_argument("action", nargs="?", choices=ACTIONS, default="scan")
    parser.add_argument("--kind", default="xi", help="xi | xi-prime | z-prime")
    parser.add_argument("--t-min", dest="t_min", type=float, default=0.0)
    parser.add_argument("--out", help="output path (zero file or CSV)")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, cfg: RunConfig) -> int:
    action = {
        "scan": _scan,
        "audit": _audit,
        "interlace": _interlace,
        "compare-zprime": _compare,
        "simple-report": _simple_report,
    }[args.action]
    return action(args, cfg)


def _scan(args: argparse.Namespace, cfg: RunConfig) -> int:
    from ..app import emit
    from ..pipelines import zero_set
    from .audit import count_audit
    from .zero_file import export_zeros

    kind = ZeroKind.parse(args.kind)
    zs = zero_set(cfg, kind, cfg.t_max, args.t_min)
    out = Path(args.out) if args.out else cfg.out_dir / f"zeros_{kind.value}.txt"
    export_zeros(zs, out)
    emit({"kind": kind.value, "path": str(out), **count_audit(zs).model_dump()})
    return 0


def _audit(args: argparse.Namespace, cfg: RunConfig) -> int:
    from ..app import emit
    from ..pipelines import zero_set
    from .audit import count_audit

    xi = zero_set(cfg, ZeroKind.XI, cfg.t_max)
    xip = zero_set(cfg, ZeroKind.XI_PRIME, cfg.t_max)
    audit = count_audit(xi, xip)
    emit(audit.model_dump())
    return 0 if audit.n1_within_one else 3


def _simple_report(args: argparse.Namespace, cfg: RunConfig) -> int:
    from ..app import emit
    from ..pipelines import zero_set
    from .audit import multiplicity_report

    xi = zero_set(cfg, ZeroKind.XI, cfg.t_max)
    xip = zero_set(cfg, ZeroKind.XI_PRIME, cfg.t_max)
    report = multiplicity_report(xi, xip, cfg.rs_crossover)
    emit({**report.model_dump(), "above_floors": report.above_floors})
    return 0


def _interlace(args: argparse.Namespace, cfg: RunConfig) -> int:
    from ..app import emit
    from ..pipelines import write_csv, zero_set
    from .audit import interlacing_report

    xi = zero_set(cfg, ZeroKind.XI, cfg.t_max)
    xip = zero_set(cfg, ZeroKind.XI_PRIME, cfg.t_max)
    report = interlacing_report(xi, xip)
    if args.out:
        write_csv(
            Path(args.out),
            ("xi_lo", "xi_hi", "inside_count", "xi_prime_zero", "offset"),
            ((p.xi_lo, p.xi_hi, p.inside, p.xi_prime_zero, p.offset_from_midpoint) for p in report.pairs),
        )
    emit(
        {
            "gaps": len(report.pairs),
            "violations": report.violations,
            "repulsion_agreement": report.repulsion_agreement,
        }
    )
    return 0


def _compare(args: argparse.Namespace, cfg: RunConfig) -> int:
    from ..app import emit
    from ..pipelines import zero_set
    from .audit import compare_zprime

    # both derivative zero sets are scanned between two Ξ zeros, where each
    # Ξ gap holds exactly one zero of Ξ′ and of Z′
    xi = zero_set(cfg, ZeroKind.XI, cfg.t_max)
    inside = xi.ordinates[xi.ordinates >= COMPARE_FROM]
    if inside.size < 2:
        raise PreconditionError(
            f"compare-zprime needs two Ξ zeros above t={COMPARE_FROM}, found {inside.size} up to t_max={cfg.t_max}",
            t_max=cfg.t_max,
            found=int(inside.size),
        )
    lo, hi = float(inside[0]), float(inside[-1])
    xip = zero_set(cfg, ZeroKind.XI_PRIME, hi, lo)
    zp = zero_set(cfg, ZeroKind.Z_PRIME, hi, lo)
    cmp = compare_zprime(xip, zp)

    decades = []
    edge = 10.0 ** np.floor(np.log10(lo))
    while edge < hi:
        median = cmp.median_normalized(edge, edge * 10)
        if median is not None:
            decades.append({"lo": edge, "hi": edge * 10, "median_abs_normalized": median})
        edge *= 10
    emit({"pairs": len(cmp), "range": [lo, hi], "decades": decades})
    return 0
