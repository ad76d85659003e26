from pathlib import Path

import pytest

from xiprime.arith import build_tables
from xiprime.runner import WorkerPool
from xiprime.zeros import ZeroKind, find_zeros, import_zeros

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def small_table():
    return build_tables(10_000, 6)


@pytest.fixture(scope="session")
def zeta_zeros_path():
    return DATA_DIR / "zeta_zeros_100.txt"


@pytest.fixture(scope="session")
def zeta_zeros(zeta_zeros_path):
    return import_zeros(zeta_zeros_path)


@pytest.fixture(scope="session")
def xi_zeros_100():
    return find_zeros(ZeroKind.XI, 0.0, 100.0)


@pytest.fixture(scope="session")
def xi_prime_zeros_100():
    return find_zeros(ZeroKind.XI_PRIME, 0.0, 100.0)


@pytest.fixture(scope="session")
def desk_zeros():
    """Ξ and Ξ' zeros up to 1e5, for the slow desk-scale checks."""
    with WorkerPool(4) as pool:
        xi = find_zeros(ZeroKind.XI, 0.0, 1.0e5, pool=pool)
        xip = find_zeros(ZeroKind.XI_PRIME, 0.0, 1.0e5, pool=pool)
    return xi, xip


@pytest.fixture
def cache_env(tmp_path, monkeypatch):
    """Point the zero cache and outputs at a temporary directory."""
    monkeypatch.setenv("XIPRIME_CACHE", str(tmp_path / "cache"))
    return tmp_path

