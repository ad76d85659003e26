from math import log

import numpy as np
import pytest

from xiprime.errors import IncompleteSetError, WindowTooSmallError
from xiprime.stats import form_factor, form_factor_normalized, neglected_bounds, pair_sum
from xiprime.zeros import ZeroKind, ZeroSet, find_zeros

T = 1000.0


def _zeros(*ordinates, t_max=T):
    return ZeroSet(ZeroKind.IMPORTED, np.array(ordinates, dtype=float), t_max, 1e-9, "toy")


def _lattice(step, count, start=1000.0):
    return start + step * np.arange(count, dtype=np.float64)


def test_single_zero_has_only_the_diagonal():
    curve = form_factor(_zeros(500.0), T, [0.0, 0.25, 0.5, 1.0], 200.0)
    assert np.array_equal(curve.empirical, np.ones(4))
    assert curve.count == 1


def test_two_zeros_closed_form():
    g1, g2 = 400.0, 401.3
    alphas = np.array([0.1, 0.5, 0.9])
    curve = form_factor(_zeros(g1, g2), T, alphas, 200.0)
    d = g2 - g1
    expected = 1.0 + 4.0 / (4.0 + d * d) * np.cos(alphas * log(T) * d)
    assert np.allclose(curve.empirical, expected, rtol=1e-12)


def test_pairs_beyond_window_are_dropped():
    curve = form_factor(_zeros(100.0, 400.0), T, [0.3], 200.0)
    assert curve.empirical[0] == 1.0


def test_estimator_is_even_in_alpha(zeta_zeros):
    curve = form_factor(zeta_zeros, 100.0, [-0.7, -0.3, 0.3, 0.7], 200.0)
    assert curve.empirical[0] == curve.empirical[3]
    assert curve.empirical[1] == curve.empirical[2]


def test_diagonal_bound_at_alpha_zero(zeta_zeros):
    curve = form_factor(zeta_zeros, 100.0, [0.0], 200.0)
    assert curve.empirical[0] >= 1.0


def test_theory_columns(zeta_zeros):
    curve = form_factor(zeta_zeros, 100.0, [0.0, 0.5, 1.0], 200.0, K=8)
    assert curve.theory_f1[0] == pytest.approx(log(100.0))
    assert curve.theory_montgomery[1] == pytest.approx(0.5 + log(100.0) / 100.0)
    assert curve.sine_ref.tolist() == [0.0, 0.5, 1.0]
    rows = curve.rows()
    assert len(rows) == 3
    assert rows[1][0] == 0.5


def test_theory_f1_blank_beyond_one():
    curve = form_factor(_zeros(500.0, 501.0), T, [0.5, 1.5], 200.0)
    assert np.isfinite(curve.theory_f1[0])
    assert np.isnan(curve.theory_f1[1])


def test_needs_complete_set():
    with pytest.raises(IncompleteSetError):
        form_factor(_zeros(500.0, t_max=900.0), T, [0.5], 200.0)


def test_small_window_is_rejected():
    with pytest.raises(WindowTooSmallError):
        form_factor(_zeros(500.0, 501.0), T, [0.1, 0.5], 5.0)


def test_neglected_bounds_shrink_with_window():
    alphas = np.array([0.0, 0.2, 0.8])
    small = neglected_bounds(alphas, 1.0e5, 200.0)
    large = neglected_bounds(alphas, 1.0e5, 400.0)
    assert np.all(large < small)
    assert small[2] <= small[1] <= small[0]
    assert small[1] < 0.01


def test_pair_sum_independent_of_block_layout():
    x = np.sort(np.random.default_rng(3).uniform(0.0, 2000.0, 3000))
    freqs = np.array([0.5, 3.0])
    whole = pair_sum(x, freqs, 50.0)
    halves = pair_sum(x[:1500], freqs, 50.0) + pair_sum(x[1500:], freqs, 50.0)
    # the cross terms are the only difference between the two
    cross = 0.0
    for i in range(1500):
        d = x[1500:] - x[i]
        d = d[d <= 50.0]
        cross += np.sum(2 * 4 / (4 + d * d) * np.cos(freqs[0] * d))
    assert whole[0] == pytest.approx(halves[0] + cross, rel=1e-9)


def test_picket_fence_half_integer_lattice():
    gt = _lattice(0.5, 10_000)
    values = form_factor_normalized(gt, [0.0, 1.0, 1.99, 2.0, 2.01], 200.0)
    spikes = values[[0, 2, 3, 4]]
    assert np.all(spikes >= 0.9)
    assert values[1] <= 0.1


def test_picket_fence_unit_lattice():
    gt = _lattice(1.0, 10_000)
    values = form_factor_normalized(gt, [0.5, 1.0, 2.0], 200.0)
    assert values[0] <= 0.1
    assert values[1] >= 0.9
    assert values[2] >= 0.9


BAND = np.round(np.arange(0.2, 0.8001, 0.01), 2)
T_BAND = 1.0e5  # height of the desk_zeros fixture


@pytest.mark.slow
def test_window_doubling_stays_within_neglected_bound():
    xi = find_zeros(ZeroKind.XI, 0.0, 1.0e4)
    narrow = form_factor(xi, 1.0e4, BAND, 200.0)
    wide = form_factor(xi, 1.0e4, BAND, 400.0)
    assert np.max(np.abs(wide.empirical - narrow.empirical)) <= narrow.neglected_weight_bound


@pytest.mark.slow
def test_montgomery_band(desk_zeros):
    xi, _ = desk_zeros
    curve = form_factor(xi, T_BAND, BAND, 200.0)
    assert np.mean(np.abs(curve.empirical - curve.theory_montgomery)) <= 0.15


@pytest.mark.slow
def test_xi_prime_band_and_ordering(desk_zeros):
    xi, xip = desk_zeros
    f = form_factor(xi, T_BAND, BAND, 200.0)
    f1 = form_factor(xip, T_BAND, BAND, 200.0, K=8)
    assert np.mean(np.abs(f1.empirical - f1.theory_f1)) <= 0.20
    middle = (BAND >= 0.3) & (BAND <= 0.7)
    assert np.all(f1.empirical[middle] < f.empirical[middle])
