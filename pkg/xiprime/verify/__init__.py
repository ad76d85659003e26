"""Numerical checks of the explicit formula and the mean-value estimates."""

from .dirichlet import dirichlet_a_series, dirichlet_alpha_series, zeta_log_derivatives
from .explicit_formula import (
    ExplicitFormulaReport,
    ExplicitFormulaSample,
    ef_lhs,
    ef_report,
    ef_rhs,
    error_budget,
    lhs_tail_bound,
)
from .mean_value import (
    MeanValueResult,
    R1MomentResult,
    mean_value_integral,
    r1_moment_check,
    r1_predicted,
    r1_values,
)

__all__ = [
    "ExplicitFormulaReport",
    "ExplicitFormulaSample",
    "MeanValueResult",
    "R1MomentResult",
    "dirichlet_a_series",
    "dirichlet_alpha_series",
    "ef_lhs",
    "ef_report",
    "ef_rhs",
    "error_budget",
    "lhs_tail_bound",
    "mean_value_integral",
    "r1_moment_check",
    "r1_predicted",
    "r1_values",
    "zeta_log_derivatives",
]
