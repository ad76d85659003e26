from math import ceil, log

import numpy as np
import pytest

from xiprime.errors import BudgetError, DomainError, PreconditionError
from xiprime.verify import ef_rhs, mean_value_integral, r1_moment_check, r1_values


@pytest.mark.parametrize("sigma", [-0.5, 1.5])
def test_constant_integrand_gives_T(sigma):
    result = mean_value_integral(1.0, 0, 0, sigma, 120.0)
    assert result.numeric == pytest.approx(120.0, rel=1e-9)
    assert result.predicted == pytest.approx(120.0)
    assert result.ratio == pytest.approx(1.0, rel=1e-9)
    assert result.budget_constant is None


def test_mean_value_preconditions():
    with pytest.raises(PreconditionError):
        mean_value_integral(1.0, 1, 0, 0.5, 100.0)
    with pytest.raises(PreconditionError):
        mean_value_integral(1.0, 9, 0, 1.5, 100.0)
    with pytest.raises(PreconditionError):
        mean_value_integral(1.0, 1, 0, 1.5, 2.0e5)
    with pytest.raises(DomainError):
        mean_value_integral(0.0, 1, 0, 1.5, 100.0)
    with pytest.raises(DomainError):
        mean_value_integral(1.0, 1, 0, 1.5, 100.0, variant="sideways")
    with pytest.raises(DomainError):
        mean_value_integral(1.0, 1, 0, 1.5, 5.0)


def test_off_diagonal_x_predicts_zero():
    result = mean_value_integral(2.0, 1, 0, 1.5, 200.0)
    assert result.predicted == 0
    assert result.ratio is None
    assert result.budget_constant == pytest.approx(abs(result.numeric) * log(2.0))
    assert np.isfinite(result.numeric.real) and np.isfinite(result.numeric.imag)


def test_reflected_variant_keeps_the_constant_case():
    result = mean_value_integral(1.0, 0, 0, 1.5, 100.0, variant="reflected")
    assert result.numeric == pytest.approx(100.0, rel=1e-9)


def test_modulus_squared_integrand_is_real_positive():
    result = mean_value_integral(1.0, 1, 1, 1.5, 100.0)
    assert result.numeric.real > 0
    assert result.numeric.imag == pytest.approx(0.0, abs=1e-8)


@pytest.mark.slow
@pytest.mark.parametrize(("k", "l"), [(1, 0), (1, 1), (2, 1)])
def test_main_term_deviation_shrinks_with_T(k, l):
    low = mean_value_integral(1.0, k, l, 1.5, 1.0e3)
    high = mean_value_integral(1.0, k, l, 1.5, 1.0e5)
    assert abs(high.ratio - 1) < abs(low.ratio - 1)


def test_r1_preconditions(small_table):
    with pytest.raises(PreconditionError):
        r1_moment_check(10.0, 5000.0, 4, small_table)
    with pytest.raises(PreconditionError):
        r1_moment_check(3000.0, 5000.0, 4, small_table)
    with pytest.raises(BudgetError):
        r1_moment_check(100.0, 5000.0, 4, small_table, node_budget=100)


def test_r1_values_match_explicit_formula_rhs(small_table):
    x, K = 20.0, 4
    t = np.array([30.0, 75.5])
    values = r1_values(x, t, K, small_table)
    for ti, value in zip(t, values):
        s_bar = complex(1.5, -ti)
        expected = ef_rhs(x, ti, 1.5, K, small_table) - x ** (0.5 - s_bar) * log((ti + 2) / (2 * np.pi))
        assert value == pytest.approx(expected, rel=1e-9)


def test_r1_moment_small_case(small_table):
    x, T = 20.0, 200.0
    result = r1_moment_check(x, T, 3, small_table)
    assert result.nodes == ceil(T / (4.0 / log(x))) * 16
    assert result.numeric > 0
    assert result.predicted > 0
    assert np.isfinite(result.ratio)
