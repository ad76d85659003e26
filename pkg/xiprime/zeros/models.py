"""Zero sets and the reports derived from them."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from pydantic import BaseModel

from ..errors import PreconditionError


class ZeroKind(str, Enum):
    XI = "xi"
    XI_PRIME = "xi_prime"
    Z_PRIME = "z_prime"
    IMPORTED = "imported"

    @classmethod
    def parse(cls, name: str) -> "ZeroKind":
        """Accept CLI spellings such as ``xi-prime``."""
        return cls(name.strip().lower().replace("-", "_"))


@dataclass(frozen=True)
class ZeroSet:
    kind: ZeroKind
    ordinates: np.ndarray
    t_max: float
    ordinate_tolerance: float
    source: str
    t_min: float = 0.0

    def __post_init__(self) -> None:
        ordinates = np.array(self.ordinates, dtype=np.float64).ravel()
        if ordinates.size:
            if np.any(np.diff(ordinates) <= 0):
                raise PreconditionError("ordinates must be strictly ascending", source=self.source)
            if ordinates[0] <= 0 or ordinates[0] < self.t_min or ordinates[-1] > self.t_max:
                raise PreconditionError(
                    f"ordinates must lie in (max(0, t_min), t_max] = ({self.t_min}, {self.t_max}]",
                    source=self.source,
                )
        ordinates.setflags(write=False)
        object.__setattr__(self, "ordinates", ordinates)
        object.__setattr__(self, "kind", ZeroKind(self.kind))

    def __len__(self) -> int:
        return int(self.ordinates.size)

    def count_upto(self, T: float) -> int:
        return int(np.searchsorted(self.ordinates, T, side="right"))

    def upto(self, T: float) -> np.ndarray:
        return self.ordinates[: self.count_upto(T)]

    def restrict(self, lo: float, hi: float) -> "ZeroSet":
        """Sub-set with ordinates in [lo, hi]."""
        start = int(np.searchsorted(self.ordinates, lo, side="left"))
        stop = self.count_upto(hi)
        return ZeroSet(
            kind=self.kind,
            ordinates=self.ordinates[start:stop],
            t_max=min(hi, self.t_max),
            ordinate_tolerance=self.ordinate_tolerance,
            source=f"{self.source}[{lo},{hi}]",
            t_min=max(lo, self.t_min),
        )


class CountAudit(BaseModel):
    counted: int
    smooth: float
    within_smooth: bool
    n1_minus_n: int | None = None
    n1_within_one: bool | None = None


class InterlacingPair(BaseModel):
    xi_lo: float
    xi_hi: float
    inside: int
    xi_prime_zero: float | None = None
    offset_from_midpoint: float | None = None

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.xi_lo + self.xi_hi)


class InterlacingReport(BaseModel):
    pairs: list[InterlacingPair]
    violations: int
    repulsion_agreement: float | None = None


@dataclass(frozen=True)
class ZPrimeComparison:
    t: np.ndarray
    delta: np.ndarray
    normalized: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return int(self.t.size)

    def median_normalized(self, lo: float, hi: float) -> float | None:
        """Median of |delta|·log²t over ordinates in [lo, hi)."""
        mask = (self.t >= lo) & (self.t < hi)
        if not mask.any():
            return None
        return float(np.median(np.abs(self.normalized[mask])))


class MultiplicityReport(BaseModel):
    """Simple Ξ′ zeros and distinct Ξ zeros up to T, against the smooth count."""

    T: float
    smooth: float
    xi_distinct: int
    distinct_fraction: float
    distinct_floor: float
    xi_prime_zeros: int
    xi_prime_simple: int
    simple_fraction: float
    simple_floor: float

    @property
    def above_floors(self) -> bool:
        return self.distinct_fraction > self.distinct_floor and self.simple_fraction > self.simple_floor
