"""Normalized neighbour spacings γ̃ = (γ/2π)·log(γ/2π)."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import e, pi

import numpy as np
from loguru import logger
from scipy.special import lambertw

from ..errors import DomainError
from ..zeros import ZeroSet, smooth_count

DEFAULT_THRESHOLDS = (0.5, 0.75, 0.91, 0.999, 1.0)
MEAN_TOLERANCE = 0.05
MEAN_CHECK_MIN = 1000

# γ ↦ (γ/2π)log(γ/2π) is increasing past 2π/e
MONOTONE_FROM = 2 * pi / e


@dataclass(frozen=True)
class GapStats:
    normalized_gaps: np.ndarray = field(repr=False)
    mean: float
    fraction_below: dict[float, float]
    expected_mean: float | None = None

    def __len__(self) -> int:
        return int(self.normalized_gaps.size)


def normalize_ordinates(ordinates: np.ndarray) -> np.ndarray:
    gamma = np.asarray(ordinates, dtype=np.float64)
    if gamma.size and gamma[0] <= MONOTONE_FROM:
        raise DomainError(
            f"first ordinate {gamma[0]} must exceed 2π/e for the rescaling to be monotone",
            first=float(gamma[0]),
        )
    u = gamma / (2 * pi)
    return u * np.log(u)


def denormalize_ordinates(gt: np.ndarray) -> np.ndarray:
    """Inverse of :func:`normalize_ordinates`: γ = 2π·exp(W(γ̃))."""
    gt = np.asarray(gt, dtype=np.float64)
    if gt.size and gt.min() <= -1 / e:
        raise DomainError("normalized ordinates must exceed -1/e")
    return 2 * pi * np.exp(lambertw(gt).real)


def expected_mean_gap(first: float, last: float) -> float:
    """Mean normalized gap the smooth zero count predicts on [first, last].

    The local spacing is 1 + 1/log(γ/2π), so this tends to 1 only slowly.
    """
    gt = normalize_ordinates(np.array([first, last]))
    return float((gt[1] - gt[0]) / (smooth_count(last) - smooth_count(first)))


def normalize_gaps(zs: ZeroSet, thresholds=()) -> GapStats:
    if len(zs) < 2:
        raise DomainError(f"need at least two ordinates, got {len(zs)}")
    gaps = np.diff(normalize_ordinates(zs.ordinates))
    mean = float(np.mean(gaps))
    expected = expected_mean_gap(float(zs.ordinates[0]), float(zs.ordinates[-1]))
    if gaps.size >= MEAN_CHECK_MIN and abs(mean / expected - 1.0) > MEAN_TOLERANCE:
        logger.warning("Mean normalized gap {:.4f}, smooth count predicts {:.4f}", mean, expected)

    levels = sorted(set(DEFAULT_THRESHOLDS) | {float(t) for t in thresholds})
    fraction = {level: float(np.count_nonzero(gaps < level)) / gaps.size for level in levels}
    return GapStats(normalized_gaps=gaps, mean=mean, fraction_below=fraction, expected_mean=expected)


def gap_histogram(stats: GapStats, bins=40) -> list[tuple[float, float, int]]:
    """Rows of (bin_lo, bin_hi, count)."""
    counts, edges = np.histogram(stats.normalized_gaps, bins=bins)
    return [(float(lo), float(hi), int(c)) for lo, hi, c in zip(edges[:-1], edges[1:], counts)]
