"""Closed forms of Σ α_k(n)n^{-s} through ζ and its derivatives.

    k = 0:  ζ'/ζ
    k >= 1: (-ζ'/ζ)^{k-1}·(ζ''/ζ - (ζ'/ζ)²)

valid for Re s > 1.
"""

from __future__ import annotations

import mpmath

from ..errors import DomainError


def zeta_log_derivatives(s: complex) -> tuple[complex, complex]:
    """(ζ'/ζ, ζ''/ζ) at s."""
    z = mpmath.mpc(s.real, s.imag)
    zeta = mpmath.zeta(z)
    return complex(mpmath.zeta(z, 1, 1) / zeta), complex(mpmath.zeta(z, 1, 2) / zeta)


def dirichlet_alpha_series(k: int, s: complex) -> complex:
    s = complex(s)
    if s.real <= 1:
        raise DomainError(f"the α_k series converges only for Re s > 1, got s={s}", s=s)
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    first, second = zeta_log_derivatives(s)
    if k == 0:
        return first
    return (-first) ** (k - 1) * (second - first * first)


def dirichlet_a_series(K: int, s: complex, L_value: complex) -> complex:
    """Σ_n a_K(n, s)n^{-s} = Σ_{k<=K} L^{-k}·Σ_n α_k(n)n^{-s}."""
    s = complex(s)
    if s.real <= 1:
        raise DomainError(f"the a_K series converges only for Re s > 1, got s={s}", s=s)
    first, second = zeta_log_derivatives(s)
    inv = 1.0 / complex(L_value)
    total = first
    power = (second - first * first) * inv
    for _ in range(1, K + 1):
        total += power
        power *= -first * inv
    return total
