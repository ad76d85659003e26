"""Asymptotic main terms the computed sums are compared against."""

from __future__ import annotations

from math import e, factorial, log, pi

from ..errors import DomainError
from .sums import log_scale


def theory_S_kk(k: int, x: float) -> float:
    """k!/(2k-1)!·x·(log x)^{2k-1}."""
    if k < 1 or x < 2:
        raise DomainError(f"need k >= 1 and x >= 2, got k={k}, x={x}")
    return factorial(k) / factorial(2 * k - 1) * x * log(x) ** (2 * k - 1)


def theory_S_offdiag_scale(k: int, l: int, x: float) -> float:
    """x·(log x)^{k+l-2}, the order of S_{k,l}(x) for k > l >= 1."""
    if not k > l >= 1 or x < 2:
        raise DomainError(f"need k > l >= 1 and x >= 2, got k={k}, l={l}, x={x}")
    return x * log(x) ** (k + l - 2)


def theory_A_kl(k: int, l: int, x: float) -> float:
    """Main term of A_{k,l}(x); 0.0 where only an error bound exists."""
    if x < 2 or min(k, l) < 0:
        raise DomainError(f"need k, l >= 0 and x >= 2, got k={k}, l={l}, x={x}")
    k, l = max(k, l), min(k, l)
    lx = log(x)
    if k == l:
        if k == 0:
            return x * lx
        return 2.0 * factorial(k - 1) / factorial(2 * k) * x * lx ** (2 * k + 1)
    if (k, l) == (1, 0):
        return -x * lx**2
    return 0.0


def theory_A_total(K: int, x: float, T: float) -> float:
    """x log x·(1 - 2r + 2Σ_{k<=K} (k-1)!/(2k)!·r^{2k}) with r = log x/𝔏."""
    if x < 2 or K < 0 or T <= 2 * pi * e:
        raise DomainError(f"need x >= 2, K >= 0 and T > 2πe, got x={x}, K={K}, T={T}")
    r = log(x) / log_scale(T)
    series = sum(factorial(k - 1) / factorial(2 * k) * r ** (2 * k) for k in range(1, K + 1))
    return x * log(x) * (1.0 - 2.0 * r + 2.0 * series)
