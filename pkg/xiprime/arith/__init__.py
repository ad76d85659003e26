"""Arithmetic tables: Λ, Λ_j, α_k and the correlation sums built from them."""

from .primes import PsiVarianceReport, prime_log_sum, psi_variance
from .sieve import chebyshev_psi, prime_powers_up_to, primes_up_to, von_mangoldt
from .sums import (
    A_kl_sum,
    A_total,
    A_total_from_parts,
    S_recursion_main,
    S_sum,
    S_unfold_check,
    lambda_j_divisor_bound_holds,
    log_scale,
)
from .table_cache import load_table, save_table
from .tables import (
    ArithTable,
    a_coefficient,
    a_coefficients,
    build_tables,
    estimate_table_bytes,
    lambda_j_prime_power,
    real_coefficients,
)
from .theory import theory_A_kl, theory_A_total, theory_S_kk, theory_S_offdiag_scale

__all__ = [
    "A_kl_sum",
    "A_total",
    "A_total_from_parts",
    "ArithTable",
    "PsiVarianceReport",
    "S_recursion_main",
    "S_sum",
    "S_unfold_check",
    "a_coefficient",
    "a_coefficients",
    "build_tables",
    "chebyshev_psi",
    "estimate_table_bytes",
    "lambda_j_divisor_bound_holds",
    "lambda_j_prime_power",
    "load_table",
    "log_scale",
    "prime_log_sum",
    "prime_powers_up_to",
    "primes_up_to",
    "psi_variance",
    "real_coefficients",
    "save_table",
    "theory_A_kl",
    "theory_A_total",
    "theory_S_kk",
    "theory_S_offdiag_scale",
    "von_mangoldt",
]
