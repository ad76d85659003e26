"""Synthetic zero sets whose normalized spacings lie in ½ℤ."""

from __future__ import annotations

from math import pi

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from ..errors import SpecInvalidError
from ..zeros import ZeroKind, ZeroSet
from .gaps import denormalize_ordinates, normalize_ordinates

ALLOWED_GAPS = (0.5, 1.0, 1.5, 2.0)
PROBABILITY_SLACK = 1e-9


def _default_probabilities() -> dict[float, float]:
    return {0.5: 0.297, 1.0: 0.405, 1.5: 0.298}


class AHProcessSpec(BaseModel):
    """Gap law and sample size; checked by check() when a sample is drawn."""

    model_config = ConfigDict(frozen=True)

    gap_probabilities: dict[float, float] = Field(default_factory=_default_probabilities)
    count: int = 100_000
    seed: int = 1
    start_height: float = 1000.0

    def check(self) -> None:
        probs = self.gap_probabilities
        if not probs:
            raise SpecInvalidError("gap_probabilities is empty")
        unknown = [g for g in probs if float(g) not in ALLOWED_GAPS]
        if unknown:
            raise SpecInvalidError(f"gaps {unknown} are outside {{1/2, 1, 3/2, 2}}", gaps=unknown)
        if any(p < 0 for p in probs.values()):
            raise SpecInvalidError("gap probabilities must be nonnegative")
        total = sum(probs.values())
        if abs(total - 1.0) > PROBABILITY_SLACK:
            raise SpecInvalidError(f"gap probabilities sum to {total}, not 1", total=total)
        if self.count < 2:
            raise SpecInvalidError(f"count must be >= 2, got {self.count}")
        if self.start_height <= 2 * pi:
            raise SpecInvalidError(f"start_height must exceed 2π, got {self.start_height}")

    @property
    def mean_gap(self) -> float:
        return sum(float(g) * p for g, p in self.gap_probabilities.items())


def ah_generate(spec: AHProcessSpec) -> ZeroSet:
    """Draw i.i.d. normalized gaps, accumulate from start_height and map back to raw heights."""
    spec.check()
    support = np.array(sorted(float(g) for g in spec.gap_probabilities), dtype=np.float64)
    probs = np.array([spec.gap_probabilities[g] for g in sorted(spec.gap_probabilities)], dtype=np.float64)
    probs = probs / probs.sum()

    rng = np.random.default_rng(spec.seed)
    gaps = rng.choice(support, size=spec.count - 1, p=probs)
    start = normalize_ordinates(np.array([spec.start_height]))[0]
    gt = start + np.concatenate(([0.0], np.cumsum(gaps)))
    gamma = denormalize_ordinates(gt)

    logger.info(
        "Generated {} AH ordinates from height {} (seed {}, mean gap {:.4f})",
        gamma.size,
        spec.start_height,
        spec.seed,
        spec.mean_gap,
    )
    return ZeroSet(
        kind=ZeroKind.IMPORTED,
        ordinates=gamma,
        t_max=float(gamma[-1]),
        ordinate_tolerance=0.0,
        source=f"synthetic:ah(seed={spec.seed})",
        t_min=float(gamma[0]),
    )
