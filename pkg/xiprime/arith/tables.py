"""Convolution tables Λ_j and α_k built on top of the sieve.

Arrays are indexed directly by ``n`` (index 0 is unused and holds 0.0).
``lambda_j[0]`` is the Dirichlet unit δ, so ``lambda_j[1]`` is Λ itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, log

import numpy as np
from loguru import logger
from numba import njit

from ..errors import CapacityError, DomainError, RangeError
from .sieve import prime_powers_up_to

DEFAULT_J_MAX = 8
DEFAULT_N_MAX = 10_000_000
DEFAULT_MEMORY_BUDGET = 2 * 1024**3


@njit(cache=True)
def _convolve_prime_powers(prev, support, weights):
    """out[q·m] += w(q)·prev[m] over prime powers q, in ascending q order."""
    n_max = prev.shape[0] - 1
    out = np.zeros(n_max + 1)
    for i in range(support.shape[0]):
        q = support[i]
        w = weights[i]
        for m in range(1, n_max // q + 1):
            out[q * m] += w * prev[m]
    return out


@dataclass(frozen=True)
class ArithTable:
    n_max: int
    j_max: int
    lambda_j: np.ndarray  # shape (j_max + 1, n_max + 1)
    alpha: np.ndarray  # shape (j_max + 1, n_max + 1)
    prime_powers: np.ndarray = field(repr=False)
    log_base: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        for array in (self.lambda_j, self.alpha, self.prime_powers, self.log_base):
            array.setflags(write=False)

    @property
    def lam(self) -> np.ndarray:
        """Λ(0..n_max)."""
        return self.lambda_j[1]

    def check_extent(self, x: float) -> int:
        """Return ``floor(x)`` after checking it against the table."""
        upto = int(np.floor(x))
        if upto > self.n_max:
            raise RangeError(f"x={x} exceeds table extent n_max={self.n_max}", x=x, n_max=self.n_max)
        return max(upto, 0)

    def check_order(self, order: int, *, lowest: int = 0) -> None:
        if not lowest <= order <= self.j_max:
            raise DomainError(f"order {order} outside [{lowest}, {self.j_max}]", order=order)


def estimate_table_bytes(n_max: int, j_max: int) -> int:
    """Bytes held by Λ_0..Λ_j_max and α_0..α_j_max as float64."""
    return 2 * (j_max + 1) * (n_max + 1) * 8


def build_tables(
    n_max: int = DEFAULT_N_MAX,
    j_max: int = DEFAULT_J_MAX,
    memory_budget: int = DEFAULT_MEMORY_BUDGET,
) -> ArithTable:
    """Sieve Λ and convolve it up to order ``j_max``.

    Λ_j = Λ_{j-1} * Λ, α_0 = -Λ and α_k = Λ_{k-1} * (Λ·log) for k >= 1.
    """
    if n_max < 2 or j_max < 1:
        raise DomainError(f"need n_max >= 2 and j_max >= 1, got {n_max}, {j_max}")
    needed = estimate_table_bytes(n_max, j_max)
    if needed > memory_budget:
        raise CapacityError(
            f"table n_max={n_max}, j_max={j_max} needs {needed} bytes, budget is {memory_budget}",
            needed=needed,
            budget=memory_budget,
        )

    q, log_p = prime_powers_up_to(n_max)
    log_q = np.log(q.astype(np.float64))
    logger.info("Building arithmetic table n_max={} j_max={} ({} prime powers)", n_max, j_max, q.size)

    lambda_j = np.zeros((j_max + 1, n_max + 1))
    lambda_j[0, 1] = 1.0
    for j in range(1, j_max + 1):
        lambda_j[j] = _convolve_prime_powers(lambda_j[j - 1], q, log_p)
        logger.debug("Λ_{} done", j)

    alpha = np.zeros((j_max + 1, n_max + 1))
    alpha[0] = -lambda_j[1]
    lam_log = log_p * log_q
    for k in range(1, j_max + 1):
        alpha[k] = _convolve_prime_powers(lambda_j[k - 1], q, lam_log)

    return ArithTable(
        n_max=n_max,
        j_max=j_max,
        lambda_j=lambda_j,
        alpha=alpha,
        prime_powers=q,
        log_base=log_p,
    )


def lambda_j_prime_power(p: int, a: int, j: int) -> float:
    """Closed form Λ_j(p^a) = C(a-1, j-1)·(log p)^j."""
    if p < 2 or a < 1 or j < 1:
        raise DomainError(f"need prime p, a >= 1, j >= 1; got p={p}, a={a}, j={j}")
    return float(comb(a - 1, j - 1)) * log(p) ** j


def a_coefficient(table: ArithTable, K: int, n: int, L_value: complex) -> complex:
    """a_K(n, s) = Σ_{k<=K} α_k(n)/L(s)^k for a single n."""
    table.check_order(K)
    if not 1 <= n <= table.n_max:
        raise RangeError(f"n={n} outside [1, {table.n_max}]", n=n)
    if L_value == 0:
        raise DomainError("L_value must be nonzero")
    inv = 1.0 / complex(L_value)
    total = 0j
    weight = 1.0 + 0j
    for k in range(K + 1):
        total += table.alpha[k, n] * weight
        weight *= inv
    return total


def a_coefficients(table: ArithTable, K: int, upto: int, L_value: complex) -> np.ndarray:
    """Vector of a_K(n, s) for n = 0..upto (entry 0 is 0)."""
    table.check_order(K)
    if L_value == 0:
        raise DomainError("L_value must be nonzero")
    upto = table.check_extent(upto)
    weights = complex(L_value) ** -np.arange(K + 1, dtype=np.float64)
    return weights @ table.alpha[: K + 1, : upto + 1]


def real_coefficients(table: ArithTable, K: int, upto: int, scale: float) -> np.ndarray:
    """Σ_k α_k(n)/scale^k for real ``scale`` (𝔏 in the A-type sums)."""
    table.check_order(K)
    upto = table.check_extent(upto)
    weights = float(scale) ** -np.arange(K + 1, dtype=np.float64)
    return weights @ table.alpha[: K + 1, : upto + 1]
