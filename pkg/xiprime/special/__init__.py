"""Special functions on and near the critical line."""

from .lfunc import L_func, L_prime, L_values
from .riemann_siegel import (
    RS_CROSSOVER,
    VALIDATED_T_MAX,
    Z,
    Z_prime,
    theta,
    theta_prime_values,
    theta_values,
    z_error_estimate,
    z_noise_estimate,
    z_pair_values,
    z_prime_values,
    z_values,
)
from .xi import (
    EvalPoint,
    Xi,
    Xi_prime,
    envelope_log,
    envelope_log_derivative,
    xi_prime_scaled_values,
    xi_scaled_values,
)

__all__ = [
    "EvalPoint",
    "L_func",
    "L_prime",
    "L_values",
    "RS_CROSSOVER",
    "VALIDATED_T_MAX",
    "Xi",
    "Xi_prime",
    "Z",
    "Z_prime",
    "envelope_log",
    "envelope_log_derivative",
    "theta",
    "theta_prime_values",
    "theta_values",
    "xi_prime_scaled_values",
    "xi_scaled_values",
    "z_error_estimate",
    "z_noise_estimate",
    "z_pair_values",
    "z_prime_values",
    "z_values",
]
