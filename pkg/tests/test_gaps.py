from math import e, log, pi

import numpy as np
import pytest

from xiprime.errors import DomainError
from xiprime.stats import (
    denormalize_ordinates,
    expected_mean_gap,
    gap_histogram,
    normalize_gaps,
    normalize_ordinates,
)
from xiprime.zeros import ZeroKind, ZeroSet


def _zeros(*ordinates):
    return ZeroSet(ZeroKind.IMPORTED, np.array(ordinates, dtype=float), max(ordinates), 1e-9, "toy")


def test_two_zeros_give_one_gap():
    stats = normalize_gaps(_zeros(100.0, 103.0))
    gt = normalize_ordinates(np.array([100.0, 103.0]))
    assert len(stats) == 1
    assert stats.normalized_gaps[0] == pytest.approx(gt[1] - gt[0])
    assert stats.mean == stats.normalized_gaps[0]


def test_rescaling_formula_and_inverse():
    gamma = np.array([20.0, 1000.0, 1.0e5])
    gt = normalize_ordinates(gamma)
    assert gt[1] == pytest.approx(1000.0 / (2 * pi) * log(1000.0 / (2 * pi)))
    assert np.allclose(denormalize_ordinates(gt), gamma, rtol=1e-13)


def test_rescaling_domain():
    with pytest.raises(DomainError):
        normalize_ordinates(np.array([2 * pi / e, 10.0]))
    with pytest.raises(DomainError):
        normalize_gaps(_zeros(50.0))


def test_zeta_gaps(zeta_zeros):
    stats = normalize_gaps(zeta_zeros, thresholds=(0.3,))
    assert len(stats) == 28
    assert np.all(stats.normalized_gaps > 0)
    assert stats.mean == pytest.approx(stats.expected_mean, rel=0.1)
    assert set(stats.fraction_below) == {0.3, 0.5, 0.75, 0.91, 0.999, 1.0}
    fractions = [stats.fraction_below[k] for k in sorted(stats.fraction_below)]
    assert fractions == sorted(fractions)


def test_expected_mean_tends_to_one():
    assert expected_mean_gap(1.0e4, 1.0e5) > expected_mean_gap(1.0e6, 1.0e7) > 1.0
    assert expected_mean_gap(1.0e6, 1.0e7) == pytest.approx(1.0, abs=0.1)


def test_histogram_rows_cover_every_gap(zeta_zeros):
    stats = normalize_gaps(zeta_zeros)
    rows = gap_histogram(stats, bins=10)
    assert len(rows) == 10
    assert sum(count for _, _, count in rows) == len(stats)
    assert all(lo < hi for lo, hi, _ in rows)


@pytest.mark.slow
def test_small_gap_floor_on_xi_prime_zeros(desk_zeros):
    _, xip = desk_zeros
    stats = normalize_gaps(xip, thresholds=(0.91,))
    assert stats.fraction_below[1.0] >= 0.035
    assert stats.fraction_below[0.5] <= stats.fraction_below[0.75] <= stats.fraction_below[0.91]
