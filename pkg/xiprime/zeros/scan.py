"""Sign-change scanner with vectorised bisection.

The range is cut into fixed-width segments aligned to multiples of
``GridPolicy.segment_width``; each segment gets its own density-adaptive
grid, so the ordinates do not depend on how many workers run the segments.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import partial

import numpy as np
from loguru import logger

from ..errors import AccuracyError, DomainError, NumericError, RangeError
from ..runner import WorkerPool, serial_pool
from ..special import RS_CROSSOVER, VALIDATED_T_MAX, xi_prime_scaled_values, xi_scaled_values, z_prime_values
from .audit import smooth_count
from .models import ZeroKind, ZeroSet

AUDIT_SLACK = 2.0


@dataclass(frozen=True)
class GridPolicy:
    grid_c: float = 1.0
    tolerance: float = 1e-9
    close_pair_step: float = 1e-4
    crossover: float = RS_CROSSOVER
    segment_width: float = 1024.0
    block_width: float = 64.0
    max_bisections: int = 60


def target_values(kind: ZeroKind, t: np.ndarray, crossover: float = RS_CROSSOVER) -> np.ndarray:
    """The scaled real function whose sign changes are the zeros of ``kind``."""
    if kind is ZeroKind.XI:
        return xi_scaled_values(t, crossover)
    if kind is ZeroKind.XI_PRIME:
        return xi_prime_scaled_values(t, crossover)
    if kind is ZeroKind.Z_PRIME:
        return z_prime_values(t, crossover)
    raise DomainError(f"no target function for kind {kind.value}")


def scan_grid(lo: float, hi: float, grid_c: float, block_width: float = 64.0) -> np.ndarray:
    """Grid on [lo, hi] with step grid_c/log t, refreshed every ``block_width``."""
    pieces = []
    a = lo
    while a < hi:
        b = min(hi, a + block_width)
        step = grid_c / max(np.log(b), 1.0)
        count = max(int(np.ceil((b - a) / step)), 1)
        pieces.append(np.linspace(a, b, count + 1)[:-1])
        a = b
    pieces.append(np.array([hi]))
    return np.concatenate(pieces)


def _close_pair_brackets(
    f, grid: np.ndarray, values: np.ndarray, step: float
) -> tuple[list[float], list[float], list[float]]:
    """Subdivide cells around |f| minima that show no sign change."""
    lows: list[float] = []
    highs: list[float] = []
    exact: list[float] = []
    if grid.size < 3:
        return lows, highs, exact
    mag = np.abs(values)
    same = (np.sign(values[:-2]) == np.sign(values[1:-1])) & (np.sign(values[1:-1]) == np.sign(values[2:]))
    dip = (mag[1:-1] < mag[:-2]) & (mag[1:-1] < mag[2:])
    for i in np.flatnonzero(same & dip) + 1:
        a, b = grid[i - 1], grid[i + 1]
        fine = np.linspace(a, b, max(int(np.ceil((b - a) / step)), 2) + 1)
        fv = f(fine)
        exact.extend(fine[fv == 0].tolist())
        hits = np.flatnonzero(fv[:-1] * fv[1:] < 0)
        if hits.size:
            logger.debug("Close pair near t={}: {} sign changes", grid[i], hits.size)
        lows.extend(fine[hits].tolist())
        highs.extend(fine[hits + 1].tolist())
    return lows, highs, exact


def bisect_brackets(f, lo: np.ndarray, hi: np.ndarray, tolerance: float, max_iter: int = 60) -> np.ndarray:
    """Refine every bracket [lo, hi] with a sign change to width <= tolerance."""
    lo = np.array(lo, dtype=np.float64)
    hi = np.array(hi, dtype=np.float64)
    if not lo.size:
        return lo
    flo = f(lo)
    for _ in range(max_iter):
        active = (hi - lo) > tolerance
        if not active.any():
            break
        idx = np.flatnonzero(active)
        mid = 0.5 * (lo[idx] + hi[idx])
        fm = f(mid)
        same = np.sign(fm) == np.sign(flo[idx])
        hit = fm == 0
        lo[idx] = np.where(same | hit, mid, lo[idx])
        flo[idx] = np.where(same, fm, flo[idx])
        hi[idx] = np.where(same & ~hit, hi[idx], mid)
    return 0.5 * (lo + hi)


def _scan_segment(bounds: tuple[float, float], kind: ZeroKind, policy: GridPolicy) -> np.ndarray:
    lo, hi = bounds
    f = partial(target_values, kind, crossover=policy.crossover)
    grid = scan_grid(lo, hi, policy.grid_c, policy.block_width)
    values = f(grid)

    exact = grid[values == 0].tolist()
    cells = np.flatnonzero(values[:-1] * values[1:] < 0)
    lows = grid[cells].tolist()
    highs = grid[cells + 1].tolist()

    extra_lo, extra_hi, extra_exact = _close_pair_brackets(f, grid, values, policy.close_pair_step)
    lows += extra_lo
    highs += extra_hi
    exact += extra_exact

    refined = bisect_brackets(f, np.array(lows), np.array(highs), policy.tolerance, policy.max_bisections)
    found = np.concatenate([refined, np.array(exact, dtype=np.float64)])
    return np.unique(found)


def segment_bounds(t_lo: float, t_hi: float, width: float) -> list[tuple[float, float]]:
    """[t_lo, t_hi] cut at multiples of ``width``."""
    cuts = np.arange(np.floor(t_lo / width) + 1, np.ceil(t_hi / width)) * width
    edges = [t_lo, *[float(c) for c in cuts if t_lo < c < t_hi], t_hi]
    return list(zip(edges[:-1], edges[1:]))


def find_zeros(
    kind: ZeroKind | str,
    t_lo: float,
    t_hi: float,
    policy: GridPolicy | None = None,
    *,
    pool: WorkerPool | None = None,
) -> ZeroSet:
    kind = ZeroKind.parse(kind) if isinstance(kind, str) else kind
    policy = policy or GridPolicy()
    if kind is ZeroKind.IMPORTED:
        raise DomainError("imported zero sets cannot be scanned")
    if not 0 <= t_lo < t_hi:
        raise RangeError(f"need 0 <= t_lo < t_hi, got [{t_lo}, {t_hi}]")
    if t_hi > VALIDATED_T_MAX:
        raise AccuracyError(f"t_hi={t_hi} exceeds validated range {VALIDATED_T_MAX}")

    segments = segment_bounds(t_lo, t_hi, policy.segment_width)
    logger.info("Scanning {} zeros on [{}, {}] in {} segments", kind.value, t_lo, t_hi, len(segments))
    pool = pool or serial_pool()
    worker = partial(_scan_segment, kind=kind, policy=policy)
    parts = pool.map(worker, segments)

    merged = np.concatenate(parts) if parts else np.array([])
    # the zero of Ξ′ and Z′ at t = 0 is implied by symmetry and never stored
    merged = np.unique(merged[merged > policy.tolerance])
    if merged.size > 1 and np.any(np.diff(merged) <= 0):
        raise NumericError("merged ordinates are not strictly ascending")

    zs = ZeroSet(
        kind=kind,
        ordinates=merged,
        t_max=t_hi,
        ordinate_tolerance=policy.tolerance,
        source=f"scan:{kind.value}[{t_lo},{t_hi}]",
        t_min=t_lo,
    )
    _audit_scan(zs, t_lo, t_hi)
    return zs


def _audit_scan(zs: ZeroSet, t_lo: float, t_hi: float) -> None:
    expected = smooth_count(t_hi) - (smooth_count(t_lo) if t_lo > 14.0 else 0.0)
    if abs(len(zs) - expected) > AUDIT_SLACK:
        logger.warning(
            "Count audit: {} zeros of {} on [{}, {}], smooth count expects {:.2f}",
            len(zs),
            zs.kind.value,
            t_lo,
            t_hi,
            expected,
        )
    else:
        logger.info("Found {} zeros of {} on [{}, {}]", len(zs), zs.kind.value, t_lo, t_hi)


def verify_zero_set(zs: ZeroSet, crossover: float = RS_CROSSOVER) -> np.ndarray:
    """Ordinates whose target function does not change sign on [γ - tol, γ + tol]."""
    if zs.kind is ZeroKind.IMPORTED:
        raise DomainError("imported zero sets carry no target function")
    gamma = zs.ordinates
    left = target_values(zs.kind, gamma - zs.ordinate_tolerance, crossover)
    right = target_values(zs.kind, gamma + zs.ordinate_tolerance, crossover)
    return gamma[left * right > 0]
