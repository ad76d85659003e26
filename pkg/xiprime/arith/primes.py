"""Prime-sum and ψ-variance diagnostics."""

from __future__ import annotations

from math import ceil, factorial, log

import numpy as np
from loguru import logger
from pydantic import BaseModel

from ..errors import DomainError, RangeError
from .sieve import prime_powers_up_to, primes_up_to
from .sums import block_sum


class PsiVarianceReport(BaseModel):
    X: float
    h: float
    integral_value: float
    reference_value: float
    ratio: float | None = None


def prime_log_sum(u: int, v: int, x: float) -> tuple[float, float]:
    """Σ_{p<=x} (log p)^u/p·(log x/p)^v and its main term (u-1)!v!/(u+v)!·(log x)^{u+v}."""
    if u < 2 or v < 1 or x < 2:
        raise DomainError(f"need u >= 2, v >= 1, x >= 2; got u={u}, v={v}, x={x}")
    primes = primes_up_to(int(np.floor(x))).astype(np.float64)
    log_p = np.log(primes)
    terms = log_p**u / primes * np.log(x / primes) ** v
    main_term = factorial(u - 1) * factorial(v) / factorial(u + v) * log(x) ** (u + v)
    return block_sum(terms), main_term


def psi_variance(X: float, h: float, sieve_extent: float) -> PsiVarianceReport:
    """Exact ∫_1^X (ψ(x+h) - ψ(x) - h)² dx against h·X·log(X/h).

    ψ is a step function, so the integrand is constant between consecutive
    points of {q, q - h : q a prime power}; the integral is a finite sum.
    """
    if h < 0 or X <= 1 or h >= X:
        raise DomainError(f"need 0 <= h < X and X > 1, got X={X}, h={h}")
    if sieve_extent < X + h:
        raise RangeError(
            f"sieve extent {sieve_extent} must cover X + h = {X + h}",
            sieve_extent=sieve_extent,
        )

    q, log_p = prime_powers_up_to(int(ceil(sieve_extent)))
    q = q.astype(np.float64)
    running = np.concatenate(([0.0], np.cumsum(log_p)))

    breaks = np.concatenate(([1.0, X], q, q - h))
    breaks = np.unique(breaks[(breaks >= 1.0) & (breaks <= X)])
    widths = np.diff(breaks)
    mids = 0.5 * (breaks[:-1] + breaks[1:])

    def psi(y: np.ndarray) -> np.ndarray:
        return running[np.searchsorted(q, y, side="right")]

    jumps = psi(mids + h) - psi(mids) - h
    integral = block_sum(jumps * jumps * widths)

    reference = h * X * log(X / h) if h > 0 else 0.0
    ratio = integral / reference if reference > 0 else None
    logger.info("ψ variance X={} h={}: integral={:.6g} reference={:.6g}", X, h, integral, reference)
    return PsiVarianceReport(
        X=X, h=h, integral_value=integral, reference_value=reference, ratio=ratio
    )
