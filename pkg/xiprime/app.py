"""Command-line application: one command group per sub-package."""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from typing import Any

from loguru import logger

from . import __version__
from .config import RunConfig, build_config
from .errors import DataIOError, XiPrimeError

# flags shared by every subcommand, mapped 1:1 onto RunConfig fields
COMMON_KEYS = (
    "t_max",
    "n_max",
    "K",
    "j_max",
    "window",
    "alpha_grid",
    "cache_dir",
    "out_dir",
    "seed",
    "workers",
    "log_level",
    "table_cache",
)


def common_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("run configuration")
    group.add_argument("--config", help="key = value config file (or .json)")
    group.add_argument("--t-max", dest="t_max", type=float)
    group.add_argument("--n-max", dest="n_max", type=int)
    group.add_argument("--K", dest="K", type=int)
    group.add_argument("--j-max", dest="j_max", type=int)
    group.add_argument("--window", type=float)
    group.add_argument("--alpha-grid", dest="alpha_grid", help="start,stop,step")
    group.add_argument("--cache-dir", dest="cache_dir")
    group.add_argument("--out-dir", dest="out_dir")
    group.add_argument("--seed", type=int)
    group.add_argument("--workers", type=int)
    group.add_argument("--log-level", dest="log_level")
    group.add_argument("--table-cache", dest="table_cache")
    return parent


def create_parser() -> argparse.ArgumentParser:
    from .arith.commands import register as register_arith
    from .stats.commands import register as register_stats
    from .verify.commands import register as register_verify
    from .zeros.commands import register as register_zeros

    parser = argparse.ArgumentParser(
        prog="xiprime",
        description="Pair correlation of the zeros of Ξ′ and the arithmetic behind it",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    parents = [common_options()]

    register_arith(subparsers, parents)
    register_zeros(subparsers, parents)
    register_stats(subparsers, parents)
    register_verify(subparsers, parents)
    register_run(subparsers, parents)
    return parser


def register_run(subparsers, parents) -> None:
    from .pipelines import PIPELINES

    run = subparsers.add_parser("run", parents=parents, help="end-to-end recipes")
    run.add_argument("name", choices=sorted(PIPELINES))
    run.set_defaults(handler=handle_run)


def handle_run(args: argparse.Namespace, cfg: RunConfig) -> int:
    from .pipelines import run_pipeline

    for path in run_pipeline(args.name, cfg):
        print(path)
    return 0


def overrides_from_args(args: argparse.Namespace) -> dict[str, Any]:
    return {key: getattr(args, key, None) for key in COMMON_KEYS}


def configure_logging(level: str) -> int:
    """Replace every sink with one stderr sink; returns its id."""
    logger.remove()
    return logger.add(sys.stderr, level=level.upper())


def emit(payload: Any) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def main(argv: Sequence[str] | None = None) -> int:
    parser = create_parser()
    args = parser.parse_args(argv)
    sink = None
    try:
        cfg = build_config(args.config, overrides_from_args(args))
        sink = configure_logging(cfg.log_level)
        return int(args.handler(args, cfg) or 0)
    except XiPrimeError as exc:
        emit(exc.to_payload())
        return exc.exit_code
    except OSError as exc:
        error = DataIOError(str(exc))
        emit(error.to_payload())
        return error.exit_code
    finally:
        if sink is not None:
            logger.remove(sink)
