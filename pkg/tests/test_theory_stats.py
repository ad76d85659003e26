from math import log

import pytest

from xiprime.errors import DomainError
from xiprime.stats import ah_spike_list, ah_theory_F, sine_kernel_reference, theory_F1, theory_F_montgomery


def test_F1_at_zero_is_log_T():
    assert theory_F1(0.0, 1.0e5, 8) == pytest.approx(log(1.0e5))


def test_F1_non_delta_part_at_half():
    T = 1.0e5
    non_delta = theory_F1(0.5, T, 8) - T**-1.0 * log(T)
    assert non_delta == pytest.approx(0.0446, abs=1e-4)


def test_F1_is_even_and_converges_in_K():
    assert theory_F1(-0.37, 1.0e4, 8) == theory_F1(0.37, 1.0e4, 8)
    assert theory_F1(0.8, 1.0e4, 4) == pytest.approx(theory_F1(0.8, 1.0e4, 8), abs=1e-2)


def test_F1_domain():
    with pytest.raises(DomainError):
        theory_F1(1.2, 1.0e4, 8)
    with pytest.raises(DomainError):
        theory_F1(0.5, 1.0e4, 0)


@pytest.mark.parametrize(
    ("alpha", "T", "expected"),
    [
        (0.0, 1.0e5, log(1.0e5)),
        (1.0, 1.0e5, 1.0 + 1.0e-10 * log(1.0e5)),
        (0.3, 1.0e5, 0.3 + 1.0e-3 * log(1.0e5)),
    ],
)
def test_montgomery(alpha, T, expected):
    assert theory_F_montgomery(alpha, T) == pytest.approx(expected)


def test_F1_sits_below_montgomery_mid_band():
    for alpha in (0.3, 0.5, 0.7):
        assert theory_F1(alpha, 1.0e5, 8) < theory_F_montgomery(alpha, 1.0e5)


@pytest.mark.parametrize(("alpha", "expected"), [(0.0, 0.0), (0.4, 0.4), (-0.4, 0.4), (2.0, 1.0)])
def test_sine_kernel_reference(alpha, expected):
    assert sine_kernel_reference(alpha) == expected


@pytest.mark.parametrize(("alpha", "expected"), [(0.4, 0.4), (1.6, 0.4), (2.0, 0.0), (1.0, 1.0), (-2.7, 0.7)])
def test_ah_theory_is_period_two_triangle(alpha, expected):
    assert ah_theory_F(alpha) == pytest.approx(expected)


def test_ah_spikes():
    assert ah_spike_list(0.0, 3.0) == [0.0, 2.0]
    assert ah_spike_list(-3.0, 3.0) == [-2.0, 0.0, 2.0]
    assert ah_spike_list(0.5, 1.5) == []
