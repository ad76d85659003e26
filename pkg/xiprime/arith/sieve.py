"""Eratosthenes sieve, prime powers and the von Mangoldt function."""

from __future__ import annotations

import numpy as np


def prime_sieve(limit: int) -> np.ndarray:
    """Boolean array ``is_prime[0..limit]``."""
    if limit < 2:
        return np.zeros(max(limit, 0) + 1, dtype=bool)

    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for i in range(2, int(limit**0.5) + 1):
        if is_prime[i]:
            is_prime[i * i :: i] = False
    return is_prime


def primes_up_to(limit: int) -> np.ndarray:
    return np.flatnonzero(prime_sieve(limit)).astype(np.int64)


def prime_powers_up_to(limit: int) -> tuple[np.ndarray, np.ndarray]:
    """All prime powers ``q = p^a <= limit`` in ascending order, with ``log p``."""
    primes = primes_up_to(limit)
    powers = [primes]
    bases = [primes]
    small = primes[primes <= int(limit**0.5) + 1]
    current = small.copy()
    while current.size:
        current = current * small
        # current 与 small 一一对应，超出上界后该素数不再参与
        keep = current <= limit
        current = current[keep]
        small = small[keep]
        if not current.size:
            break
        powers.append(current)
        bases.append(small)
    q = np.concatenate(powers)
    p = np.concatenate(bases)
    order = np.argsort(q, kind="stable")
    return q[order], np.log(p[order].astype(np.float64))


def von_mangoldt(limit: int) -> np.ndarray:
    """``lam[n] = Λ(n)`` for ``0 <= n <= limit`` (index 0 unused, 0.0)."""
    lam = np.zeros(limit + 1, dtype=np.float64)
    q, log_p = prime_powers_up_to(limit)
    lam[q] = log_p
    return lam


def chebyshev_psi(x: float, q: np.ndarray, log_p: np.ndarray) -> float:
    """ψ(x) = Σ_{n<=x} Λ(n) over the supplied sorted prime powers."""
    count = int(np.searchsorted(q, np.floor(x), side="right"))
    return float(np.sum(log_p[:count]))
