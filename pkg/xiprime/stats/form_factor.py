"""Windowed pair-correlation form factor.

    F(α) = N⁻¹ Σ_{|γ-γ'|<=Δ} cos(α·log T·(γ-γ'))·4/(4 + (γ-γ')²)

The pair sum runs in a numba kernel over fixed blocks of the zero index;
each block writes its own partial row and the rows are added in block
order, so the result does not depend on the thread count.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import log, pi

import numpy as np
from loguru import logger
from numba import njit, prange

from ..errors import DomainError, IncompleteSetError, WindowTooSmallError
from ..zeros import ZeroSet
from .theory import sine_kernel_reference, theory_F1, theory_F_montgomery

PAIR_BLOCK = 256
WINDOW_LIMIT = 0.01


@njit(parallel=True, cache=True)
def _pair_partials(x, freqs, window, block):
    n = x.shape[0]
    n_alpha = freqs.shape[0]
    n_blocks = (n + block - 1) // block
    partial = np.zeros((n_blocks, n_alpha))
    for b in prange(n_blocks):
        stop = min(n, (b + 1) * block)
        for i in range(b * block, stop):
            j = i + 1
            while j < n and x[j] - x[i] <= window:
                d = x[j] - x[i]
                w = 2.0 * 4.0 / (4.0 + d * d)
                for a in range(n_alpha):
                    partial[b, a] += w * np.cos(freqs[a] * d)
                j += 1
    return partial


def pair_sum(x: np.ndarray, freqs: np.ndarray, window: float) -> np.ndarray:
    """Off-diagonal Σ_{i≠j, |x_i-x_j|<=window} w(x_i-x_j)cos(f·(x_i-x_j)) per frequency."""
    x = np.array(x, dtype=np.float64)
    freqs = np.ascontiguousarray(np.abs(freqs), dtype=np.float64)
    if x.size < 2:
        return np.zeros(freqs.size)
    partial = _pair_partials(x, freqs, float(window), PAIR_BLOCK)
    total = np.zeros(freqs.size)
    for row in partial:
        total += row
    return total


def mean_density(T: float) -> float:
    """Zeros per unit height at T, log(T/2π)/2π."""
    return max(log(T / (2 * pi)), 0.0) / (2 * pi)


def neglected_bounds(alphas: np.ndarray, T: float, window: float) -> np.ndarray:
    """Per-α bound on the pairs with |γ-γ'| > Δ, from w(u) < 4/u² and the mean density."""
    rho = mean_density(T)
    beta = np.abs(alphas) * log(T)
    plain = 4.0 / window
    with np.errstate(divide="ignore"):
        oscillating = np.where(beta > 0, 8.0 / (window * window * beta), np.inf)
    return 2.0 * rho * np.minimum(plain, oscillating)


@dataclass(frozen=True)
class FormFactorCurve:
    T: float
    alphas: np.ndarray
    empirical: np.ndarray
    theory_f1: np.ndarray
    theory_montgomery: np.ndarray
    sine_ref: np.ndarray
    K: int
    window: float
    neglected_weight_bound: float
    count: int
    neglected_bounds: np.ndarray = field(repr=False)

    def rows(self) -> list[tuple[float, float, float, float, float]]:
        return [
            (float(a), float(e), float(f1), float(m), float(s))
            for a, e, f1, m, s in zip(
                self.alphas, self.empirical, self.theory_f1, self.theory_montgomery, self.sine_ref
            )
        ]


def _check_alphas(alphas) -> np.ndarray:
    alphas = np.asarray(alphas, dtype=np.float64).ravel()
    if alphas.size == 0:
        raise DomainError("alpha grid is empty")
    return alphas


def form_factor(zs: ZeroSet, T: float, alphas, window: float, K: int = 8) -> FormFactorCurve:
    alphas = _check_alphas(alphas)
    if window <= 0:
        raise DomainError(f"window must be positive, got {window}")
    if zs.t_max < T:
        raise IncompleteSetError(f"zero set reaches {zs.t_max}, form factor needs T={T}", t_max=zs.t_max, T=T)

    gamma = zs.upto(T)
    N = gamma.size
    if N == 0:
        raise DomainError(f"no zeros up to T={T}")

    bounds = neglected_bounds(alphas, T, window)
    gated = bounds[alphas != 0]
    bound = float(gated.max()) if gated.size else float(bounds.max())
    if gated.size and bound > WINDOW_LIMIT:
        raise WindowTooSmallError(
            f"neglected pair weight {bound:.3g} exceeds {WINDOW_LIMIT} of the diagonal term",
            window=window,
            bound=bound,
        )
    if bound > 0.5 * WINDOW_LIMIT:
        logger.warning("Neglected pair weight {:.3g} close to the limit (window {})", bound, window)

    logger.info("Form factor: {} zeros up to T={}, {} alphas, window {}", N, T, alphas.size, window)
    empirical = (N + pair_sum(gamma, alphas * log(T), window)) / N

    f1 = np.array([theory_F1(a, T, K) if abs(a) <= 1 else np.nan for a in alphas])
    return FormFactorCurve(
        T=float(T),
        alphas=alphas,
        empirical=empirical,
        theory_f1=f1,
        theory_montgomery=np.array([theory_F_montgomery(a, T) for a in alphas]),
        sine_ref=np.array([sine_kernel_reference(a) for a in alphas]),
        K=K,
        window=float(window),
        neglected_weight_bound=bound,
        count=N,
        neglected_bounds=bounds,
    )


def form_factor_normalized(gt: np.ndarray, alphas, window: float) -> np.ndarray:
    """Same estimator on normalized ordinates: phase cos(2πα·d), weight 4/(4+d²)."""
    alphas = _check_alphas(alphas)
    gt = np.asarray(gt, dtype=np.float64)
    if gt.size == 0:
        raise DomainError("no ordinates")
    if window <= 0:
        raise DomainError(f"window must be positive, got {window}")
    return (gt.size + pair_sum(gt, 2 * pi * alphas, window)) / gt.size
