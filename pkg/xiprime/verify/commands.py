"""``xiprime explicit``: a single explicit-formula sample."""

from __future__ import annotations

import argparse
from pathlib import Path

from ..config import RunConfig


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("explicit", parents=parents, help="explicit-formula residual")
    parser.add_argument("--x", type=float, default=10.0)
    parser.add_argument("--t", type=float, default=50.0)
    parser.add_argument("--sigma", type=float, default=1.5)
    parser.add_argument("--zeros", help="Ξ′ zero file; scanned from the cache when omitted")
    parser.add_argument("--ef-window", dest="ef_window", type=float)
    parser.add_argument("--r1", action="store_true", help="also run the R1 second-moment check at T = t_max")
    parser.add_argument("--out", help="JSON report path")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, cfg: RunConfig) -> int:
    from ..app import emit
    from ..arith import build_tables
    from ..pipelines import write_json, zero_set
    from ..zeros import ZeroKind, import_zeros
    from .explicit_formula import ef_report

    window = args.ef_window or cfg.ef_window
    K = args.K if args.K is not None else cfg.ef_K
    if args.zeros:
        xip = import_zeros(args.zeros)
    else:
        xip = zero_set(cfg, ZeroKind.XI_PRIME, abs(args.t) + window)
    # the R1 prediction needs the n > x tail of the coefficients as well
    extent = max(int(args.x), 2) * (100 if args.r1 else 1)
    table = build_tables(extent, max(K, 1, cfg.j_max), cfg.memory_budget)
    report = ef_report([(args.x, args.t, args.sigma, K)], xip, table, window, cfg.ef_epsilon)
    payload = report.model_dump(mode="json")
    if args.r1:
        from .mean_value import r1_moment_check

        r1 = r1_moment_check(args.x, cfg.t_max, K, table, cfg.quadrature_node_budget)
        payload["r1"] = {
            "x": r1.x,
            "T": r1.T,
            "K": r1.K,
            "numeric": r1.numeric,
            "predicted": r1.predicted,
            "nodes": r1.nodes,
        }
    if args.out:
        write_json(Path(args.out), payload)
    emit(payload)
    return 0
