import numpy as np
import pytest

from xiprime.zeros import GridPolicy, ZeroDB, ZeroKind, ZeroSet


@pytest.fixture
def db(tmp_path):
    database = ZeroDB(tmp_path / "cache" / "zeros.db")
    yield database
    database.close()


FIRST_THREE = np.array([14.134725141734693, 21.02203963877155, 25.01085758014569])


def _toy():
    return ZeroSet(ZeroKind.XI, FIRST_THREE, 40.0, 1e-9, "toy", t_min=10.0)


def test_cache_miss_then_hit(db):
    policy = GridPolicy()
    assert db.get(ZeroKind.XI, 10.0, 40.0, policy) is None

    db.save(_toy(), policy)
    cached = db.get(ZeroKind.XI, 10.0, 40.0, policy)
    assert cached is not None
    assert np.array_equal(cached.ordinates, _toy().ordinates)
    assert (cached.t_min, cached.t_max, cached.kind) == (10.0, 40.0, ZeroKind.XI)


def test_policy_is_part_of_the_key(db):
    db.save(_toy(), GridPolicy())
    assert db.get(ZeroKind.XI, 10.0, 40.0, GridPolicy(tolerance=1e-12)) is None
    assert db.get(ZeroKind.XI, 10.0, 40.0, GridPolicy(grid_c=0.5)) is None
    assert db.get(ZeroKind.XI_PRIME, 10.0, 40.0, GridPolicy()) is None


def test_save_overwrites_same_key(db):
    policy = GridPolicy()
    db.save(_toy(), policy)
    shorter = ZeroSet(ZeroKind.XI, np.array([14.134725141734693]), 40.0, 1e-9, "rescan", t_min=10.0)
    db.save(shorter, policy)
    scans = db.list_scans()
    assert len(scans) == 1
    assert scans[0]["count"] == 1
    assert scans[0]["source"] == "rescan"


def test_delete(db):
    policy = GridPolicy()
    db.save(_toy(), policy)
    assert db.delete(ZeroKind.XI, 10.0, 40.0, policy)
    assert not db.delete(ZeroKind.XI, 10.0, 40.0, policy)
    assert db.list_scans() == []
