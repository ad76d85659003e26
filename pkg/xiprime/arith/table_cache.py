"""Binary on-disk cache of :class:`ArithTable`.

Layout: magic ``XPL1``, then ``n_max`` and ``j_max`` as little-endian int64,
then Λ_1..Λ_{j_max} and α_0..α_{j_max} as row-major little-endian float64
rows covering n = 1..n_max.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
from loguru import logger

from ..errors import DataIOError
from .sieve import prime_powers_up_to
from .tables import ArithTable

MAGIC = b"XPL1"
_HEADER = np.dtype([("n_max", "<i8"), ("j_max", "<i8")])


def save_table(table: ArithTable, path: str | Path) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    header = np.array([(table.n_max, table.j_max)], dtype=_HEADER)
    try:
        with target.open("wb") as fh:
            fh.write(MAGIC)
            fh.write(header.tobytes())
            fh.write(np.ascontiguousarray(table.lambda_j[1:, 1:], dtype="<f8").tobytes())
            fh.write(np.ascontiguousarray(table.alpha[:, 1:], dtype="<f8").tobytes())
    except OSError as exc:
        raise DataIOError(f"Cannot write table cache {target}: {exc}", path=str(target)) from exc
    logger.info("Saved arithmetic table to {}", target)
    return target


def load_table(path: str | Path) -> ArithTable:
    source = Path(path)
    try:
        raw = source.read_bytes()
    except OSError as exc:
        raise DataIOError(f"Cannot read table cache {source}: {exc}", path=str(source)) from exc

    if raw[:4] != MAGIC:
        raise DataIOError(f"{source} is not an XPL1 table cache", path=str(source))
    header = np.frombuffer(raw, dtype=_HEADER, count=1, offset=4)[0]
    n_max, j_max = int(header["n_max"]), int(header["j_max"])
    rows = 2 * j_max + 1
    offset = 4 + _HEADER.itemsize
    expected = offset + rows * n_max * 8
    if len(raw) != expected:
        raise DataIOError(
            f"{source} holds {len(raw)} bytes, header implies {expected}", path=str(source)
        )

    body = np.frombuffer(raw, dtype="<f8", offset=offset).reshape(rows, n_max)
    lambda_j = np.zeros((j_max + 1, n_max + 1))
    lambda_j[0, 1] = 1.0
    lambda_j[1:, 1:] = body[:j_max]
    alpha = np.zeros((j_max + 1, n_max + 1))
    alpha[:, 1:] = body[j_max:]

    q, log_p = prime_powers_up_to(n_max)
    logger.info("Loaded arithmetic table n_max={} j_max={} from {}", n_max, j_max, source)
    return ArithTable(
        n_max=n_max, j_max=j_max, lambda_j=lambda_j, alpha=alpha, prime_powers=q, log_base=log_p
    )
