"""Correlation sums S_{k,l}, A_{k,l} and A(x) over an :class:`ArithTable`."""

from __future__ import annotations

from math import log

import numpy as np

from ..errors import DomainError
from .sieve import primes_up_to
from .tables import ArithTable, real_coefficients

# fixed block length for the reductions below; the block order never changes
REDUCTION_BLOCK = 1 << 16


def block_sum(values: np.ndarray) -> float:
    """Sum in fixed-size blocks, blocks accumulated left to right."""
    total = 0.0
    for start in range(0, values.size, REDUCTION_BLOCK):
        total += float(np.sum(values[start : start + REDUCTION_BLOCK]))
    return total


def _tail_length(table: ArithTable, x: float) -> int:
    return table.check_extent(x) if x >= 1 else 0


def S_sum(table: ArithTable, k: int, l: int, x: float) -> float:
    """S_{k,l}(x) = Σ_{n<=x} Λ_k(n)Λ_l(n).

    ``l = 0`` is accepted (Λ_0 = δ), which the recursion check relies on.
    """
    table.check_order(k)
    table.check_order(l)
    upto = _tail_length(table, x)
    if upto < 1:
        return 0.0
    return block_sum(table.lambda_j[k, 1 : upto + 1] * table.lambda_j[l, 1 : upto + 1])


def S_unfold_check(table: ArithTable, k: int, l: int, x: float) -> float:
    """Σ_{p^a<=x} log p · Σ_{m<=x/p^a} Λ_{k-1}(m)Λ_l(m·p^a).

    Unfolding one factor of Λ_k; agrees with :func:`S_sum` to rounding.
    """
    table.check_order(k, lowest=1)
    table.check_order(l)
    upto = _tail_length(table, x)
    prev = table.lambda_j[k - 1]
    other = table.lambda_j[l]

    count = int(np.searchsorted(table.prime_powers, upto, side="right"))
    total = 0.0
    for q, log_p in zip(table.prime_powers[:count], table.log_base[:count]):
        q = int(q)
        m_max = upto // q
        inner = np.dot(prev[1 : m_max + 1], other[q : q * m_max + 1 : q])
        total += log_p * float(inner)
    return total


def S_recursion_main(table: ArithTable, k: int, l: int, x: float) -> float:
    """l·Σ_{p<=x} log²p · S_{k-1,l-1}(x/p), the main term of the S recursion."""
    table.check_order(k, lowest=1)
    table.check_order(l, lowest=1)
    upto = _tail_length(table, x)
    primes = primes_up_to(upto)
    if not primes.size:
        return 0.0
    running = np.cumsum(table.lambda_j[k - 1, : upto + 1] * table.lambda_j[l - 1, : upto + 1])
    inner = running[upto // primes]
    return l * block_sum(np.log(primes.astype(np.float64)) ** 2 * inner)


def A_kl_sum(table: ArithTable, k: int, l: int, x: float) -> float:
    """A_{k,l}(x) = Σ_{n<=x} α_k(n)α_l(n)."""
    table.check_order(k)
    table.check_order(l)
    upto = _tail_length(table, x)
    if upto < 1:
        return 0.0
    return block_sum(table.alpha[k, 1 : upto + 1] * table.alpha[l, 1 : upto + 1])


def log_scale(T: float) -> float:
    """𝔏 = ½ log(T/2π)."""
    if T <= 0:
        raise DomainError(f"T must be positive, got {T}")
    return 0.5 * log(T / (2 * np.pi))


def _checked_scale(T: float) -> float:
    scale = log_scale(T)
    if scale <= 0:
        raise DomainError(f"½ log(T/2π) must be positive, got {scale} at T={T}", T=T)
    return scale


def A_total(table: ArithTable, K: int, x: float, T: float) -> float:
    """A(x) = Σ_{n<=x} |Σ_{k<=K} α_k(n)/𝔏^k|²."""
    scale = _checked_scale(T)
    upto = _tail_length(table, x)
    if upto < 1:
        return 0.0
    coefficients = real_coefficients(table, K, upto, scale)[1:]
    return block_sum(coefficients * coefficients)


def A_total_from_parts(table: ArithTable, K: int, x: float, T: float) -> float:
    """Diagonal A_{k,k}𝔏^{-2k} plus twice the off-diagonal A_{k,l}𝔏^{-(k+l)}."""
    scale = _checked_scale(T)
    table.check_order(K)
    total = 0.0
    for k in range(K + 1):
        total += A_kl_sum(table, k, k, x) * scale ** (-2 * k)
        for l in range(k):
            total += 2.0 * A_kl_sum(table, k, l, x) * scale ** (-(k + l))
    return total


def lambda_j_divisor_bound_holds(table: ArithTable, k: int, p: int, m: int) -> bool:
    """Λ_k(m) <= k·log p·(log m)^{k-1} whenever p | m."""
    table.check_order(k, lowest=1)
    if m % p:
        raise DomainError(f"{p} does not divide {m}")
    bound = k * log(p) * log(m) ** (k - 1)
    return bool(table.lambda_j[k, m] <= bound * (1 + 1e-12))
