from math import comb, log

import numpy as np
import pytest

from xiprime.arith import (
    a_coefficient,
    a_coefficients,
    build_tables,
    chebyshev_psi,
    estimate_table_bytes,
    lambda_j_divisor_bound_holds,
    lambda_j_prime_power,
    load_table,
    prime_powers_up_to,
    primes_up_to,
    real_coefficients,
    save_table,
    von_mangoldt,
)
from xiprime.errors import CapacityError, DataIOError, DomainError, RangeError


def test_primes_and_prime_powers():
    assert primes_up_to(30).tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    q, log_p = prime_powers_up_to(30)
    assert q.tolist() == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]
    assert log_p[q.tolist().index(27)] == pytest.approx(log(3))


@pytest.mark.parametrize(
    ("n", "expected"),
    [(1, 0.0), (2, log(2)), (4, log(2)), (6, 0.0), (9, log(3)), (12, 0.0), (97, log(97))],
)
def test_von_mangoldt_values(n, expected):
    assert von_mangoldt(100)[n] == pytest.approx(expected)


def test_chebyshev_psi_small():
    q, log_p = prime_powers_up_to(20)
    expected = 4 * log(2) + 2 * log(3) + log(5) + log(7) + log(11) + log(13) + log(17) + log(19)
    assert chebyshev_psi(20.5, q, log_p) == pytest.approx(expected)


def test_lambda_tables_hand_values(small_table):
    lam = small_table.lambda_j
    assert lam[0, 1] == 1.0
    assert lam[1, 6] == 0.0
    assert lam[2, 6] == pytest.approx(2 * log(2) * log(3))
    assert lam[2, 8] == pytest.approx(2 * log(2) ** 2)
    assert lam[3, 30] == pytest.approx(6 * log(2) * log(3) * log(5))


def test_alpha_tables_hand_values(small_table):
    alpha = small_table.alpha
    assert np.array_equal(alpha[0], -small_table.lam)
    assert alpha[1, 8] == pytest.approx(log(2) * log(8))
    assert alpha[2, 6] == pytest.approx(log(2) * log(3) * log(6))
    assert np.all(alpha[:, 1] == 0.0)


@pytest.mark.parametrize(("p", "a", "j"), [(2, 1, 1), (2, 5, 3), (3, 4, 2), (7, 3, 3), (2, 13, 6)])
def test_prime_power_closed_form(small_table, p, a, j):
    assert lambda_j_prime_power(p, a, j) == pytest.approx(comb(a - 1, j - 1) * log(p) ** j)
    assert small_table.lambda_j[j, p**a] == pytest.approx(lambda_j_prime_power(p, a, j))


def test_lambda_j_support_needs_enough_prime_factors(small_table):
    # Λ_j vanishes on numbers with fewer than j prime factors counted with multiplicity
    assert small_table.lambda_j[3, 15] == 0.0
    assert small_table.lambda_j[2, 7] == 0.0


@pytest.mark.parametrize(("k", "p", "m"), [(1, 2, 8), (2, 2, 12), (3, 3, 90), (4, 5, 1000)])
def test_divisor_bound(small_table, k, p, m):
    assert lambda_j_divisor_bound_holds(small_table, k, p, m)


def test_divisor_bound_rejects_non_divisor(small_table):
    with pytest.raises(DomainError):
        lambda_j_divisor_bound_holds(small_table, 2, 3, 10)


def test_a_coefficients_agree_with_scalar(small_table):
    L_value = complex(2.0, 0.5)
    vector = a_coefficients(small_table, 4, 200, L_value)
    assert vector[0] == 0
    assert vector[1] == 0
    for n in (2, 6, 30, 128, 199):
        assert vector[n] == pytest.approx(a_coefficient(small_table, 4, n, L_value))


def test_real_coefficients_match_complex_on_real_axis(small_table):
    real = real_coefficients(small_table, 3, 500, 4.0)
    complex_ = a_coefficients(small_table, 3, 500, 4.0)
    assert np.allclose(real, complex_.real)
    assert np.allclose(complex_.imag, 0.0)


def test_table_extent_and_order_checks(small_table):
    with pytest.raises(RangeError):
        small_table.check_extent(small_table.n_max + 1)
    with pytest.raises(DomainError):
        a_coefficients(small_table, small_table.j_max + 1, 10, 2.0)
    with pytest.raises(DomainError):
        a_coefficient(small_table, 2, 10, 0.0)


def test_build_rejects_bad_sizes():
    with pytest.raises(DomainError):
        build_tables(1, 2)
    with pytest.raises(CapacityError):
        build_tables(1000, 2, memory_budget=100)
    assert estimate_table_bytes(10, 1) == 2 * 2 * 11 * 8


def test_table_cache_preserves_tables(tmp_path):
    table = build_tables(500, 3)
    path = save_table(table, tmp_path / "tables" / "small.xpl")
    loaded = load_table(path)
    assert (loaded.n_max, loaded.j_max) == (500, 3)
    assert np.array_equal(loaded.lambda_j, table.lambda_j)
    assert np.array_equal(loaded.alpha, table.alpha)
    assert np.array_equal(loaded.prime_powers, table.prime_powers)


def test_table_cache_rejects_foreign_files(tmp_path):
    bogus = tmp_path / "bogus.xpl"
    bogus.write_bytes(b"NOPE" + bytes(16))
    with pytest.raises(DataIOError):
        load_table(bogus)
    with pytest.raises(DataIOError):
        load_table(tmp_path / "missing.xpl")


def _dirichlet_convolve(f, g):
    """h(n) = Σ_{d | n} f(d)·g(n/d), looping over every d."""
    n_max = f.size - 1
    h = np.zeros(n_max + 1)
    for d in range(1, n_max + 1):
        if f[d]:
            h[d::d] += f[d] * g[1 : n_max // d + 1]
    return h


def test_tables_match_divisor_sum_convolution(small_table):
    n_max = small_table.n_max
    lam = von_mangoldt(n_max)
    expected = np.zeros(n_max + 1)
    expected[1] = 1.0
    log_n = np.log(np.maximum(np.arange(n_max + 1), 1))
    for j in range(1, small_table.j_max + 1):
        assert np.allclose(
            _dirichlet_convolve(expected, lam * log_n), small_table.alpha[j], rtol=1e-12, atol=0
        )
        expected = _dirichlet_convolve(expected, lam)
        assert np.allclose(small_table.lambda_j[j], expected, rtol=1e-12, atol=0)


def test_closed_form_at_every_prime_power(small_table):
    q, log_p = prime_powers_up_to(small_table.n_max)
    for value, base in zip(q.tolist(), log_p.tolist()):
        p = round(np.exp(base))
        a = round(log(value) / base)
        for j in range(1, small_table.j_max + 1):
            expected = lambda_j_prime_power(p, a, j)
            assert small_table.lambda_j[j, value] == pytest.approx(expected, rel=1e-12, abs=0)


def test_product_rule_holds_exhaustively(small_table):
    n_max = small_table.n_max
    lam = small_table.lambda_j
    for p in primes_up_to(n_max).tolist():
        m = np.arange(1, n_max // p + 1)
        m = m[m % p != 0]
        for k in range(1, small_table.j_max + 1):
            assert np.allclose(lam[k, p * m], k * log(p) * lam[k - 1, m], rtol=1e-12, atol=0)


def test_binomial_expansion_on_random_triples(small_table):
    rng = np.random.default_rng(3)
    lam = small_table.lambda_j
    primes = primes_up_to(50)
    checked = 0
    while checked < 1000:
        p = int(rng.choice(primes))
        a = int(rng.integers(1, 5))
        q = p**a
        if q > small_table.n_max:
            continue
        n = int(rng.integers(1, small_table.n_max // q + 1))
        if n % p == 0:
            continue
        k = int(rng.integers(1, small_table.j_max + 1))
        expected = sum(comb(k, j) * lam[j, q] * lam[k - j, n] for j in range(k + 1))
        assert lam[k, q * n] == pytest.approx(expected, rel=1e-12, abs=1e-300)
        checked += 1


def test_every_entry_obeys_the_trivial_bounds(small_table):
    log_n = np.log(np.arange(2, small_table.n_max + 1, dtype=np.float64))
    slack = 1 + 1e-12
    for j in range(1, small_table.j_max + 1):
        row = small_table.lambda_j[j, 2:]
        assert np.all(row >= 0)
        assert np.all(row <= log_n**j * slack)
    for k in range(1, small_table.j_max + 1):
        row = small_table.alpha[k, 2:]
        assert np.all(row >= 0)
        assert np.all(row <= log_n ** (k + 1) * slack)
    assert np.all(small_table.alpha[:, 1] == 0.0)
