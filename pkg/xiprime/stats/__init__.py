"""Form factors, spacing statistics and Alternative-Hypothesis processes."""

from .ah_process import AHProcessSpec, ah_generate
from .form_factor import (
    FormFactorCurve,
    form_factor,
    form_factor_normalized,
    mean_density,
    neglected_bounds,
    pair_sum,
)
from .gaps import (
    GapStats,
    denormalize_ordinates,
    expected_mean_gap,
    gap_histogram,
    normalize_gaps,
    normalize_ordinates,
)
from .theory import ah_spike_list, ah_theory_F, sine_kernel_reference, theory_F1, theory_F_montgomery

__all__ = [
    "AHProcessSpec",
    "FormFactorCurve",
    "GapStats",
    "ah_generate",
    "ah_spike_list",
    "ah_theory_F",
    "denormalize_ordinates",
    "expected_mean_gap",
    "form_factor",
    "form_factor_normalized",
    "gap_histogram",
    "mean_density",
    "neglected_bounds",
    "normalize_gaps",
    "normalize_ordinates",
    "pair_sum",
    "sine_kernel_reference",
    "theory_F1",
    "theory_F_montgomery",
]
