"""Comparison curves for the empirical form factors."""

from __future__ import annotations

from math import ceil, factorial, floor, log

from ..errors import DomainError


def _delta_term(alpha: float, T: float) -> float:
    if T <= 1:
        raise DomainError(f"T must exceed 1, got {T}")
    return T ** (-2 * abs(alpha)) * log(T)


def theory_F1(alpha: float, T: float, K: int) -> float:
    """T^{-2|α|}log T + |α| - 4α² + Σ_{k<=K} (k-1)!/(2k)!·(2|α|)^{2k+1}."""
    a = abs(alpha)
    if a > 1:
        raise DomainError(f"F1 main term is only known for |alpha| <= 1, got {alpha}")
    if K < 1:
        raise DomainError(f"K must be >= 1, got {K}")
    series = sum(factorial(k - 1) / factorial(2 * k) * (2 * a) ** (2 * k + 1) for k in range(1, K + 1))
    return _delta_term(alpha, T) + a - 4 * a * a + series


def theory_F_montgomery(alpha: float, T: float) -> float:
    return min(abs(alpha), 1.0) + _delta_term(alpha, T)


def sine_kernel_reference(alpha: float) -> float:
    return min(abs(alpha), 1.0)


def ah_theory_F(alpha: float) -> float:
    """Period-2 extension of |α| on [-1, 1]; the delta spikes are in :func:`ah_spike_list`."""
    a = abs(alpha) % 2.0
    return a if a <= 1.0 else 2.0 - a


def ah_spike_list(lo: float, hi: float) -> list[float]:
    """Even integers in [lo, hi]."""
    if hi < lo:
        return []
    first = 2 * ceil(lo / 2)
    last = 2 * floor(hi / 2)
    return [float(n) for n in range(first, last + 1, 2)]
