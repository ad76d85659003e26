"""Ξ(t) = ξ(½ + it), its derivative and the envelope-scaled variants.

Ξ(t) = -E(t)·Z(t) with the positive envelope
E(t) = (t² + ¼)/2 · π^{-1/4} · |Γ(¼ + it/2)|, so the scaled function
Ξ/E = -Z shares every sign change with Ξ and never underflows.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import loggamma, psi

from ..errors import RangeError
from .riemann_siegel import (
    RS_CROSSOVER,
    VALIDATED_T_MAX,
    z_error_estimate,
    z_pair_values,
    z_values,
)

UNSCALED_T_MAX = 50.0
FD_STEP = 1e-4
_FD_STENCIL = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0


@dataclass(frozen=True)
class EvalPoint:
    t: float
    value: float
    scaled: bool
    est_abs_error: float


def envelope_log(t: np.ndarray) -> np.ndarray:
    """log E(t)."""
    t = np.asarray(t, dtype=np.float64)
    return np.log((t * t + 0.25) / 2) - 0.25 * np.log(np.pi) + loggamma(0.25 + 0.5j * t).real


def envelope_log_derivative(t: np.ndarray) -> np.ndarray:
    """E'(t)/E(t)."""
    t = np.asarray(t, dtype=np.float64)
    return 2 * t / (t * t + 0.25) - 0.5 * psi(0.25 + 0.5j * t).imag


def xi_scaled_values(t: np.ndarray, crossover: float = RS_CROSSOVER) -> np.ndarray:
    return -z_values(t, crossover)


def xi_prime_scaled_values(t: np.ndarray, crossover: float = RS_CROSSOVER) -> np.ndarray:
    """Ξ'(t)/E(t) = -(E'/E·Z + Z')."""
    t = np.asarray(t, dtype=np.float64)
    z, z_prime = z_pair_values(t, crossover)
    return -(envelope_log_derivative(t) * z + z_prime)


def _check_representable(t: float, scaled: bool) -> None:
    limit = VALIDATED_T_MAX if scaled else UNSCALED_T_MAX
    if abs(t) > limit:
        kind = "scaled" if scaled else "unscaled"
        raise RangeError(f"{kind} Ξ is only representable for |t| <= {limit}, got t={t}", t=t)


def Xi(t: float, scaled: bool = True, crossover: float = RS_CROSSOVER) -> EvalPoint:
    _check_representable(t, scaled)
    value = float(xi_scaled_values(np.array([t]), crossover)[0])
    error = z_error_estimate(t, crossover)
    if not scaled:
        envelope = float(np.exp(envelope_log(np.array([t]))[0]))
        value *= envelope
        error *= envelope
    return EvalPoint(t=t, value=value, scaled=scaled, est_abs_error=error)


def _finite_difference(t: float, scaled: bool, crossover: float) -> tuple[float, float]:
    """5-point central difference of Ξ (or of -Z plus the envelope term when scaled)."""
    grid = t + FD_STEP * np.arange(-2, 3)
    samples = xi_scaled_values(grid, crossover)
    slope = float(_FD_STENCIL @ samples) / FD_STEP
    # 截断误差 ~h⁴，舍入误差 ~ε/h
    error = 1e-12 / FD_STEP + z_error_estimate(t, crossover) / FD_STEP
    if scaled:
        ratio = float(envelope_log_derivative(np.array([t]))[0])
        return ratio * float(samples[2]) + slope, error
    envelope = np.exp(envelope_log(grid))
    slope = float(_FD_STENCIL @ (samples * envelope)) / FD_STEP
    return slope, error * float(envelope[2])


def Xi_prime(
    t: float,
    scaled: bool = True,
    method: str = "analytic",
    crossover: float = RS_CROSSOVER,
) -> EvalPoint:
    """dΞ/dt by the product rule on E·(Ξ/E); ``method="fd"`` forces the stencil."""
    _check_representable(t, scaled)
    value = float("nan")
    error = 0.0
    if method == "analytic":
        value = float(xi_prime_scaled_values(np.array([t]), crossover)[0])
        error = z_error_estimate(t, crossover) * (1 + abs(float(envelope_log_derivative(np.array([t]))[0])))
        if np.isfinite(value) and not scaled:
            envelope = float(np.exp(envelope_log(np.array([t]))[0]))
            value *= envelope
            error *= envelope
    if not np.isfinite(value):
        value, error = _finite_difference(t, scaled, crossover)
    return EvalPoint(t=t, value=value, scaled=scaled, est_abs_error=error)
