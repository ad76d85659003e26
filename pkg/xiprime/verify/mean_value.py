"""Mean values over t ∈ [0, T] on the lines σ = -1/2 and σ = 3/2."""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, log

import numpy as np
from loguru import logger
from scipy.integrate import quad_vec

from ..arith import ArithTable, a_coefficients, log_scale, real_coefficients
from ..arith.sums import block_sum
from ..errors import BudgetError, DomainError, PreconditionError, QuadratureError
from ..special import L_values
from .dirichlet import dirichlet_a_series

PANEL_WIDTH = 50.0
QUAD_REL_LIMIT = 1e-6
MAX_ORDER = 8
MAX_T = 1.0e5
ALLOWED_SIGMAS = (-0.5, 1.5)
GAUSS_ORDER = 16
R1_SIGMA = 1.5


# =========================
# ∫ x^{it} / (conj(L)^k L^l) dt
# =========================

@dataclass(frozen=True)
class MeanValueResult:
    x: float
    k: int
    l: int
    sigma: float
    T: float
    numeric: complex
    predicted: complex
    error_estimate: float
    budget_constant: float | None

    @property
    def ratio(self) -> complex | None:
        return self.numeric / self.predicted if self.predicted else None


def _integrand(x: float, k: int, l: int, sigma: float, variant: str):
    log_x = log(x)

    def f(t: float) -> np.ndarray:
        s = complex(sigma, t)
        L_s = complex(L_values(np.array([s]))[0])
        if variant == "reflected":
            conj_part = complex(L_values(np.array([1 - s.conjugate()]))[0]).conjugate()
        else:
            conj_part = L_s.conjugate()
        value = np.exp(1j * t * log_x) / (conj_part**k * L_s**l)
        return np.array([value.real, value.imag])

    return f


def mean_value_integral(
    x: float,
    k: int,
    l: int,
    sigma: float,
    T: float,
    variant: str = "direct",
    panel_width: float = PANEL_WIDTH,
) -> MeanValueResult:
    if x <= 0:
        raise DomainError(f"x must be positive, got {x}")
    if sigma not in ALLOWED_SIGMAS:
        raise PreconditionError(f"sigma must be -1/2 or 3/2, got {sigma}", sigma=sigma)
    if not (0 <= k <= MAX_ORDER and 0 <= l <= MAX_ORDER):
        raise PreconditionError(f"k, l must lie in [0, {MAX_ORDER}], got {k}, {l}")
    if not 0 < T <= MAX_T:
        raise PreconditionError(f"T must lie in (0, {MAX_T:g}], got {T}", T=T)
    if variant not in ("direct", "reflected"):
        raise DomainError(f"unknown variant {variant!r}")

    f = _integrand(x, k, l, sigma, variant)
    panels = max(1, ceil(T / panel_width))
    edges = np.linspace(0.0, T, panels + 1)
    total = np.zeros(2)
    error = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        value, err = quad_vec(f, a, b, epsabs=1e-10 * (b - a), epsrel=1e-10)
        total += value
        error += err
    if error > QUAD_REL_LIMIT * T:
        raise QuadratureError(f"quadrature error {error:.3g} exceeds {QUAD_REL_LIMIT}·T", error=error, T=T)

    numeric = complex(total[0], total[1])
    if x == 1:
        if k + l and log_scale(T) <= 0:
            raise DomainError(f"main term needs T > 2π, got T={T}", T=T)
        predicted = complex(T * log_scale(T) ** -(k + l))
        constant = None
    else:
        predicted = 0j
        constant = abs(numeric) * abs(log(x))
    logger.debug("Mean value x={} k={} l={} sigma={} T={}: {}", x, k, l, sigma, T, numeric)
    return MeanValueResult(
        x=x,
        k=k,
        l=l,
        sigma=sigma,
        T=T,
        numeric=numeric,
        predicted=predicted,
        error_estimate=error,
        budget_constant=constant,
    )


# =========================
# ∫ |R₁(x, t)|² dt
# =========================

@dataclass(frozen=True)
class R1MomentResult:
    x: float
    T: float
    K: int
    numeric: float
    predicted: float
    nodes: int

    @property
    def ratio(self) -> float:
        return self.numeric / self.predicted


def r1_values(x: float, t: np.ndarray, K: int, table: ArithTable) -> np.ndarray:
    """R₁(x, t) on σ = 3/2: the Dirichlet-polynomial side of the explicit formula."""
    upto = table.check_extent(x)
    n = np.arange(1, upto + 1, dtype=np.float64)
    out = np.empty(t.size, dtype=np.complex128)
    for i, ti in enumerate(t):
        s = complex(R1_SIGMA, ti)
        reflected = 1 - s.conjugate()
        L_s, L_r = L_values(np.array([s, reflected]))
        near = np.sum(a_coefficients(table, K, upto, L_r)[1:] * (x / n) ** reflected)
        head = np.sum(a_coefficients(table, K, upto, L_s)[1:] * n**-s)
        far = x**s * (dirichlet_a_series(K, s, L_s) - head)
        out[i] = x**-0.5 * (near + far)
    return out


def r1_predicted(x: float, T: float, K: int, table: ArithTable) -> float:
    """T·(x^{-2}Σ_{n<=x} n c_n² + x²Σ_{n>x} n^{-3} c_n²) with c_n = Σ_k α_k(n)/𝔏^k."""
    upto = table.check_extent(x)
    c = real_coefficients(table, K, table.n_max, log_scale(T))
    n = np.arange(table.n_max + 1, dtype=np.float64)
    low = block_sum(n[1 : upto + 1] * c[1 : upto + 1] ** 2) / x**2
    high = x**2 * block_sum(c[upto + 1 :] ** 2 / n[upto + 1 :] ** 3)
    return T * (low + high)


def r1_moment_check(
    x: float,
    T: float,
    K: int,
    table: ArithTable,
    node_budget: int = 200_000,
) -> R1MomentResult:
    if not log(T) ** 1.5 < x <= T**0.9:
        raise PreconditionError(
            f"x={x} must satisfy (log T)^1.5 < x <= T^0.9 at T={T}",
            x=x,
            T=T,
        )
    table.check_order(K)
    table.check_extent(x)

    width = min(PANEL_WIDTH, 4.0 / log(x))
    panels = ceil(T / width)
    nodes = panels * GAUSS_ORDER
    if nodes > node_budget:
        raise BudgetError(f"{nodes} quadrature nodes exceed budget {node_budget}", nodes=nodes, budget=node_budget)

    ref_nodes, ref_weights = np.polynomial.legendre.leggauss(GAUSS_ORDER)
    edges = np.linspace(0.0, T, panels + 1)
    total = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        half = 0.5 * (b - a)
        t = a + half * (ref_nodes + 1)
        values = r1_values(x, t, K, table)
        total += half * float(np.sum(ref_weights * np.abs(values) ** 2))

    predicted = r1_predicted(x, T, K, table)
    logger.info("R1 moment x={} T={} K={}: numeric {:.6g}, predicted {:.6g}", x, T, K, total, predicted)
    return R1MomentResult(x=x, T=T, K=K, numeric=total, predicted=predicted, nodes=nodes)
