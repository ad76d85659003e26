"""End-to-end recipes behind ``xiprime run``.

Every recipe reads only the RunConfig, pulls zero sets and tables through
the caches and writes plain CSV / JSON artifacts into ``cfg.out_dir``.
"""

from __future__ import annotations

import csv
import json
from collections.abc import Callable, Iterable, Sequence
from pathlib import Path
from typing import Any

from loguru import logger

from .arith import ArithTable, build_tables, load_table, save_table
from .config import RunConfig
from .errors import ConfigError
from .runner import WorkerPool
from .zeros import GridPolicy, ZeroDB, ZeroKind, ZeroSet, find_zeros

FIG1_HEADER = ("alpha", "empirical", "theory_f1", "theory_montgomery", "sine_ref")
EXPLICIT_XS = (1.0, 10.0, 100.0)
EXPLICIT_TS = (50.0, 200.0, 1000.0)
EXPLICIT_SIGMA = 1.5
EXPLICIT_TABLE_N = 1000
MEAN_VALUE_PAIRS = ((0, 0), (1, 0), (1, 1), (2, 1))


# =========================
# 缓存与产物
# =========================

def grid_policy(cfg: RunConfig) -> GridPolicy:
    return GridPolicy(grid_c=cfg.grid_c, tolerance=cfg.zero_tolerance, crossover=cfg.rs_crossover)


def zero_set(
    cfg: RunConfig,
    kind: ZeroKind,
    t_hi: float,
    t_lo: float = 0.0,
    *,
    pool: WorkerPool | None = None,
) -> ZeroSet:
    """Zero set on [t_lo, t_hi], from ``zeros.db`` when an identical scan is cached."""
    policy = grid_policy(cfg)
    db = ZeroDB(cfg.cache_dir / "zeros.db")
    try:
        cached = db.get(kind, t_lo, t_hi, policy)
        if cached is not None:
            return cached
        if pool is None:
            with WorkerPool(cfg.workers) as own_pool:
                zs = find_zeros(kind, t_lo, t_hi, policy, pool=own_pool)
        else:
            zs = find_zeros(kind, t_lo, t_hi, policy, pool=pool)
        db.save(zs, policy)
        return zs
    finally:
        db.close()


def arith_table(cfg: RunConfig, n_max: int | None = None, j_max: int | None = None) -> ArithTable:
    n_max = n_max or cfg.n_max
    j_max = j_max or cfg.j_max
    path = cfg.table_cache
    if path is not None and path.exists():
        table = load_table(path)
        if table.n_max >= n_max and table.j_max >= j_max:
            return table
        logger.info("Table cache {} is too small, rebuilding", path)
    table = build_tables(n_max, j_max, cfg.memory_budget)
    if path is not None:
        save_table(table, path)
    return table


def write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow(["" if v is None else v for v in row])
    logger.info("Wrote {}", path)
    return path


def write_json(path: Path, payload: Any) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    logger.info("Wrote {}", path)
    return path


# =========================
# 各流程
# =========================

def run_fig1(cfg: RunConfig) -> list[Path]:
    from .stats import form_factor

    T = cfg.t_max
    alphas = cfg.alpha_grid.values()
    with WorkerPool(cfg.workers) as pool:
        xi = zero_set(cfg, ZeroKind.XI, T, pool=pool)
        xip = zero_set(cfg, ZeroKind.XI_PRIME, T, pool=pool)
    f1 = form_factor(xip, T, alphas, cfg.window, cfg.K)
    f = form_factor(xi, T, alphas, cfg.window, cfg.K)
    return [
        write_csv(cfg.out_dir / "fig1_f1.csv", FIG1_HEADER, f1.rows()),
        write_csv(cfg.out_dir / "fig1_f.csv", FIG1_HEADER, f.rows()),
    ]


def run_fig2(cfg: RunConfig) -> list[Path]:
    from .config import AlphaGrid
    from .stats import AHProcessSpec, ah_generate, ah_spike_list, ah_theory_F, form_factor_normalized
    from .stats.gaps import normalize_ordinates

    ah = cfg.ah
    spec = AHProcessSpec(
        gap_probabilities=ah.gap_probabilities(),
        count=ah.count,
        seed=cfg.seed,
        start_height=ah.start_height,
    )
    zs = ah_generate(spec)
    alphas = AlphaGrid(start=0.0, stop=ah.alpha_max, step=ah.alpha_step).values()
    empirical = form_factor_normalized(normalize_ordinates(zs.ordinates), alphas, ah.window)
    rows = [(a, float(e), ah_theory_F(a)) for a, e in zip(alphas, empirical)]
    spikes = [(s,) for s in ah_spike_list(0.0, ah.alpha_max)]
    return [
        write_csv(cfg.out_dir / "fig2_curve.csv", ("alpha", "empirical", "ah_theory"), rows),
        write_csv(cfg.out_dir / "fig2_spikes.csv", ("alpha",), spikes),
    ]


def run_fig3(cfg: RunConfig) -> list[Path]:
    from .zeros import interlacing_report

    with WorkerPool(cfg.workers) as pool:
        xi = zero_set(cfg, ZeroKind.XI, cfg.t_max, pool=pool)
        xip = zero_set(cfg, ZeroKind.XI_PRIME, cfg.t_max, pool=pool)
    report = interlacing_report(xi, xip)
    header = ("xi_lo", "xi_hi", "midpoint", "xi_prime_zero", "offset", "inside_count", "violation")
    rows = [
        (p.xi_lo, p.xi_hi, p.midpoint, p.xi_prime_zero, p.offset_from_midpoint, p.inside, int(p.inside != 1))
        for p in report.pairs
    ]
    return [write_csv(cfg.out_dir / "fig3.csv", header, rows)]


def _gap_summary(stats) -> dict[str, Any]:
    return {
        "count": len(stats),
        "mean": stats.mean,
        "expected_mean": stats.expected_mean,
        "fraction_below": {f"{level:g}": share for level, share in stats.fraction_below.items()},
    }


def run_zeros_report(cfg: RunConfig) -> list[Path]:
    from .stats import normalize_gaps
    from .zeros import count_audit, multiplicity_report

    with WorkerPool(cfg.workers) as pool:
        xi = zero_set(cfg, ZeroKind.XI, cfg.t_max, pool=pool)
        xip = zero_set(cfg, ZeroKind.XI_PRIME, cfg.t_max, pool=pool)
    multiplicity = multiplicity_report(xi, xip, cfg.rs_crossover)
    payload = {
        "T": cfg.t_max,
        "count": count_audit(xi, xip).model_dump(),
        "multiplicity": {**multiplicity.model_dump(), "above_floors": multiplicity.above_floors},
        "gaps": {
            "xi": _gap_summary(normalize_gaps(xi, cfg.gap_thresholds)),
            "xi_prime": _gap_summary(normalize_gaps(xip, cfg.gap_thresholds)),
        },
    }
    return [write_json(cfg.out_dir / "zeros_report.json", payload)]


def _ladder(limit: float, start: float = 1e4) -> list[float]:
    if limit < start:
        return [float(limit)]
    values = []
    x = start
    while x <= limit:
        values.append(x)
        x *= 10
    return values


def run_arith_report(cfg: RunConfig) -> list[Path]:
    from .arith import (
        A_total,
        S_sum,
        prime_log_sum,
        psi_variance,
        theory_A_total,
        theory_S_kk,
    )

    table = arith_table(cfg)
    ladder = _ladder(table.n_max)
    s_kk = [
        {"k": k, "x": x, "value": S_sum(table, k, k, x), "theory": theory_S_kk(k, x)}
        for k in range(1, min(3, table.j_max) + 1)
        for x in ladder
    ]
    prime_sums = []
    for u, v in ((2, 1), (2, 2), (3, 1), (4, 2)):
        for x in ladder:
            empirical, main = prime_log_sum(u, v, x)
            prime_sums.append({"u": u, "v": v, "x": x, "empirical": empirical, "main_term": main})

    x_mid = min(float(table.n_max), cfg.t_max**0.5)
    a_total = {
        "K": cfg.K,
        "x": x_mid,
        "T": cfg.t_max,
        "value": A_total(table, cfg.K, x_mid, cfg.t_max),
        "theory": theory_A_total(cfg.K, x_mid, cfg.t_max),
    }
    h = min(1000.0, table.n_max / 10)
    X = min(1e6, table.n_max - h)
    variance = psi_variance(X, h, X + h).model_dump()

    payload = {
        "n_max": table.n_max,
        "j_max": table.j_max,
        "S_kk": s_kk,
        "prime_log_sum": prime_sums,
        "A_total": a_total,
        "psi_variance": variance,
    }
    return [write_json(cfg.out_dir / "arith_report.json", payload)]


def run_explicit_report(cfg: RunConfig) -> list[Path]:
    from .verify import ef_report, mean_value_integral

    reach = max(EXPLICIT_TS) + cfg.ef_window
    with WorkerPool(cfg.workers) as pool:
        xip = zero_set(cfg, ZeroKind.XI_PRIME, reach, pool=pool)
    table = build_tables(EXPLICIT_TABLE_N, max(cfg.ef_K, 1), cfg.memory_budget)
    samples = [(x, t, EXPLICIT_SIGMA, cfg.ef_K) for x in EXPLICIT_XS for t in EXPLICIT_TS]
    report = ef_report(samples, xip, table, cfg.ef_window, cfg.ef_epsilon)

    T = min(cfg.t_max, 1e4)
    mean_values = []
    for k, l in MEAN_VALUE_PAIRS:
        result = mean_value_integral(1.0, k, l, EXPLICIT_SIGMA, T)
        mean_values.append(
            {
                "k": k,
                "l": l,
                "T": T,
                "numeric": [result.numeric.real, result.numeric.imag],
                "predicted": result.predicted.real,
                "error_estimate": result.error_estimate,
            }
        )

    payload = report.model_dump(mode="json")
    payload["mean_value"] = mean_values
    return [write_json(cfg.out_dir / "explicit_report.json", payload)]


PIPELINES: dict[str, Callable[[RunConfig], list[Path]]] = {
    "fig1": run_fig1,
    "fig2": run_fig2,
    "fig3": run_fig3,
    "zeros-report": run_zeros_report,
    "arith-report": run_arith_report,
    "explicit-report": run_explicit_report,
}


def run_pipeline(name: str, cfg: RunConfig) -> list[Path]:
    try:
        recipe = PIPELINES[name]
    except KeyError:
        raise ConfigError(f"unknown pipeline {name!r}; choose from {sorted(PIPELINES)}") from None
    logger.info("=" * 60)
    logger.info("Running pipeline {} (t_max={}, seed={})", name, cfg.t_max, cfg.seed)
    artifacts = recipe(cfg)
    logger.info("Pipeline {} finished: {}", name, ", ".join(p.name for p in artifacts))
    logger.info("=" * 60)
    return artifacts
