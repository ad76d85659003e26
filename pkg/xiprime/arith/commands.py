"""``xiprime arith``: table builds and the individual sums."""

from __future__ import annotations

import argparse

from ..config import RunConfig

ACTIONS = ("build", "sums", "primes", "psi-variance")


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("arith", parents=parents, help="arithmetic tables and sums")
    parser.add_argument("action", nargs="?", choices=ACTIONS, default="build")
    parser.add_argument("--k", type=int, default=1)
    parser.add_argument("--l", type=int, default=1)
    parser.add_argument("--x", type=float, default=1e4)
    parser.add_argument("--u", type=int, default=2)
    parser.add_argument("--v", type=int, default=1)
    parser.add_argument("--X", dest="X", type=float, default=1e6)
    parser.add_argument("--h", type=float, default=1000.0)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, cfg: RunConfig) -> int:
    from ..app import emit
    from ..pipelines import arith_table
    from . import (
        A_kl_sum,
        A_total,
        S_sum,
        prime_log_sum,
        psi_variance,
        theory_A_total,
        theory_S_kk,
    )

    if args.action == "primes":
        empirical, main = prime_log_sum(args.u, args.v, args.x)
        emit({"u": args.u, "v": args.v, "x": args.x, "empirical": empirical, "main_term": main})
        return 0
    if args.action == "psi-variance":
        emit(psi_variance(args.X, args.h, args.X + args.h).model_dump())
        return 0

    table = arith_table(cfg)
    if args.action == "build":
        emit({"n_max": table.n_max, "j_max": table.j_max, "prime_powers": int(table.prime_powers.size)})
        return 0

    k, l = max(args.k, args.l), min(args.k, args.l)
    payload = {
        "k": k,
        "l": l,
        "x": args.x,
        "S": S_sum(table, k, l, args.x),
        "A": A_kl_sum(table, k, l, args.x),
        "A_total": A_total(table, cfg.K, args.x, cfg.t_max),
        "A_total_theory": theory_A_total(cfg.K, args.x, cfg.t_max),
    }
    if k == l and k >= 1:
        payload["S_theory"] = theory_S_kk(k, args.x)
    emit(payload)
    return 0
