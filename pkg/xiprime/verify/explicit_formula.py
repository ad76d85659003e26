"""Explicit formula over the zeros of Ξ′ against an approximate Dirichlet series.

    lhs = (2σ-1)·Σ_γ x^{iγ}/((σ-½)² + (t-γ)²)
    rhs = x^{-½}·(Σ_{n<=x} a_K(n,1-s̄)(x/n)^{1-s̄} + Σ_{n>x} a_K(n,s)(x/n)^s) + x^{½-s̄}·log(τ/2π)

with s = σ + it and τ = |t| + 2. γ runs over the real zeros of Ξ′,
i.e. ±(stored ordinates) together with γ = 0.
"""

from __future__ import annotations

from collections.abc import Iterable
from functools import partial
from math import log, pi

import numpy as np
from loguru import logger
from pydantic import BaseModel, field_serializer

from ..arith import ArithTable, a_coefficients
from ..errors import IncompleteSetError, PreconditionError
from ..runner import WorkerPool, serial_pool
from ..special import L_func
from ..zeros import ZeroKind, ZeroSet
from .dirichlet import dirichlet_a_series

MIN_WINDOW = 500.0
DEFAULT_EPSILON = 0.1
BUDGET_MULTIPLIER = 3.0
TAIL_SLACK = 1.1


class ExplicitFormulaSample(BaseModel):
    x: float
    t: float
    sigma: float
    K: int
    lhs: complex
    rhs: complex
    residual: float
    rel_residual: float
    budget: float
    within_budget: bool
    tail_bound: float
    truncation_note: str

    @field_serializer("lhs", "rhs")
    def _complex_pair(self, value: complex) -> list[float]:
        return [value.real, value.imag]


class ExplicitFormulaReport(BaseModel):
    samples: list[ExplicitFormulaSample]
    window: float
    epsilon: float = DEFAULT_EPSILON
    budget_multiplier: float = BUDGET_MULTIPLIER


def _check_parameters(x: float, sigma: float) -> None:
    if x < 1:
        raise PreconditionError(f"x must be >= 1, got {x}", x=x)
    if not 1.25 < sigma < 2:
        raise PreconditionError(f"sigma must lie in (5/4, 2), got {sigma}", sigma=sigma)


def lhs_tail_bound(t: float, sigma: float, window: float) -> float:
    """Bound on the zeros with |γ - t| > window, from the mean density at |t| + 2·window."""
    height = abs(t) + 2 * window
    rho = max(log(height / (2 * pi)), 1.0) / (2 * pi)
    return (2 * sigma - 1) * 2 * rho * TAIL_SLACK / window


def ef_lhs(x: float, t: float, sigma: float, xip: ZeroSet, window: float = MIN_WINDOW) -> complex:
    _check_parameters(x, sigma)
    if window < MIN_WINDOW:
        raise PreconditionError(f"window must be >= {MIN_WINDOW}, got {window}", window=window)
    if xip.kind not in (ZeroKind.XI_PRIME, ZeroKind.IMPORTED):
        raise PreconditionError(f"explicit formula needs Ξ′ zeros, got {xip.kind.value}")
    reach = abs(t) + window
    if xip.t_max < reach or xip.t_min > max(abs(t) - window, 0.0):
        raise IncompleteSetError(
            f"zero set covers [{xip.t_min}, {xip.t_max}], need [{max(abs(t) - window, 0.0)}, {reach}]",
            t=t,
            window=window,
        )

    positive = xip.upto(reach)
    gamma = np.concatenate((-positive[::-1], [0.0], positive))
    gamma = gamma[np.abs(gamma - t) <= window]
    weights = (2 * sigma - 1) / ((sigma - 0.5) ** 2 + (t - gamma) ** 2)
    phases = np.exp(1j * gamma * log(x))
    return complex(np.sum(weights * phases))


def ef_rhs(x: float, t: float, sigma: float, K: int, table: ArithTable) -> complex:
    """Right-hand side without its error terms.

    The n > x sum is x^s·(Σ_n a_K(n,s)n^{-s} - Σ_{n<=x} a_K(n,s)n^{-s}), with the
    full series taken in closed form.
    """
    _check_parameters(x, sigma)
    table.check_order(K)
    upto = table.check_extent(x)

    s = complex(sigma, t)
    reflected = 1 - s.conjugate()
    L_s = L_func(s)
    L_r = L_func(reflected)

    n = np.arange(1, upto + 1, dtype=np.float64)
    head = a_coefficients(table, K, upto, L_r)[1:]
    near = complex(np.sum(head * (x / n) ** reflected)) if upto else 0j

    partial_sum = complex(np.sum(a_coefficients(table, K, upto, L_s)[1:] * n**-s)) if upto else 0j
    far = x**s * (dirichlet_a_series(K, s, L_s) - partial_sum)

    tau = abs(t) + 2
    return x**-0.5 * (near + far) + x ** (0.5 - s.conjugate()) * log(tau / (2 * pi))


def error_budget(x: float, t: float, sigma: float, K: int, epsilon: float = DEFAULT_EPSILON) -> float:
    """x^{½-σ} + x^{½}τ^{-1}·max(x^ε, log^{2K+2} x)."""
    tau = abs(t) + 2
    return x ** (0.5 - sigma) + x**0.5 / tau * max(x**epsilon, log(x) ** (2 * K + 2))


def _evaluate_sample(
    sample: tuple[float, float, float, int],
    xip: ZeroSet,
    table: ArithTable,
    window: float,
    epsilon: float,
) -> ExplicitFormulaSample:
    x, t, sigma, K = sample
    lhs = ef_lhs(x, t, sigma, xip, window)
    rhs = ef_rhs(x, t, sigma, K, table)
    residual = abs(lhs - rhs)
    scale = max(abs(lhs), abs(rhs))
    budget = error_budget(x, t, sigma, K, epsilon)
    tail = lhs_tail_bound(t, sigma, window)
    return ExplicitFormulaSample(
        x=x,
        t=t,
        sigma=sigma,
        K=K,
        lhs=lhs,
        rhs=rhs,
        residual=residual,
        rel_residual=residual / scale if scale > 0 else 0.0,
        budget=budget,
        within_budget=residual <= BUDGET_MULTIPLIER * budget,
        tail_bound=tail,
        truncation_note=(
            f"zeros with |gamma - t| <= {window:g}, dropped tail <= {tail:.3e}; "
            "n > x sum in closed form; O-terms excluded"
        ),
    )


def ef_report(
    samples: Iterable[tuple[float, float, float, int]],
    xip: ZeroSet,
    table: ArithTable,
    window: float = MIN_WINDOW,
    epsilon: float = DEFAULT_EPSILON,
    *,
    pool: WorkerPool | None = None,
) -> ExplicitFormulaReport:
    samples = [(float(x), float(t), float(sigma), int(K)) for x, t, sigma, K in samples]
    if window < MIN_WINDOW:
        raise PreconditionError(f"window must be >= {MIN_WINDOW}, got {window}", window=window)
    pool = pool or serial_pool()
    worker = partial(_evaluate_sample, xip=xip, table=table, window=window, epsilon=epsilon)
    results = pool.map(worker, samples)
    for r in results:
        logger.info(
            "x={} t={} sigma={} K={}: residual {:.3e} (rel {:.3e}, budget {:.3e})",
            r.x, r.t, r.sigma, r.K, r.residual, r.rel_residual, r.budget,
        )
    return ExplicitFormulaReport(samples=results, window=window, epsilon=epsilon)
