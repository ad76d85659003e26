"""Plain-text zero files.

One ordinate per line, ascending. Lines starting with ``#`` are comments;
a comment of the form ``# key = value`` is read as header metadata. Lines
with two columns (index and ordinate, as in published tables) keep the
last column.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
import regex
from loguru import logger

from ..errors import MonotonicityError, ZeroFileError
from .models import ZeroKind, ZeroSet

DEFAULT_IMPORT_TOLERANCE = 1e-9

_HEADER = regex.compile(r"^#\s*(?<key>[A-Za-z_][\w.]*)\s*=\s*(?<value>\S.*?)\s*$")
_HEADER_KEYS = ("kind", "t_min", "t_max", "ordinate_tolerance", "source")


def export_zeros(zs: ZeroSet, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    header = {
        "kind": zs.kind.value,
        "t_min": repr(float(zs.t_min)),
        "t_max": repr(float(zs.t_max)),
        "ordinate_tolerance": repr(float(zs.ordinate_tolerance)),
        "source": zs.source,
    }
    lines = [f"# {key} = {value}" for key, value in header.items()]
    lines.extend(repr(float(g)) for g in zs.ordinates)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    logger.info("Wrote {} ordinates to {}", len(zs), path)
    return path


def _read_lines(path: Path) -> tuple[dict[str, str], list[tuple[int, float]]]:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ZeroFileError(f"cannot read zero file: {exc}", path=str(path)) from exc

    header: dict[str, str] = {}
    values: list[tuple[int, float]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            match = _HEADER.match(line)
            if match and match["key"] in _HEADER_KEYS:
                header[match["key"]] = match["value"]
            continue
        token = line.split()[-1]
        try:
            value = float(token)
        except ValueError:
            raise ZeroFileError(f"not a number: {token!r}", path=str(path), line=lineno) from None
        if not np.isfinite(value) or value <= 0:
            raise ZeroFileError(f"ordinate must be a positive finite number, got {token}", path=str(path), line=lineno)
        values.append((lineno, value))
    return header, values


def _header_float(header: dict[str, str], key: str, path: Path, default: float) -> float:
    if key not in header:
        return default
    try:
        return float(header[key])
    except ValueError:
        raise ZeroFileError(f"bad header value {key} = {header[key]!r}", path=str(path)) from None


def import_zeros(path: str | Path, kind: ZeroKind | str = ZeroKind.IMPORTED) -> ZeroSet:
    """Read a zero file; ``t_max`` falls back to the last ordinate."""
    path = Path(path)
    kind = ZeroKind.parse(kind) if isinstance(kind, str) else kind
    header, values = _read_lines(path)

    for (_, prev), (lineno, value) in zip(values, values[1:]):
        if value <= prev:
            raise MonotonicityError(
                f"ordinates not strictly ascending: {value!r} after {prev!r}",
                path=str(path),
                line=lineno,
            )

    ordinates = np.array([v for _, v in values], dtype=np.float64)
    last = float(ordinates[-1]) if ordinates.size else 0.0
    t_max = max(_header_float(header, "t_max", path, last), last)
    t_min = _header_float(header, "t_min", path, 0.0)
    if ordinates.size and ordinates[0] < t_min:
        t_min = 0.0
    tolerance = _header_float(header, "ordinate_tolerance", path, DEFAULT_IMPORT_TOLERANCE)

    zs = ZeroSet(
        kind=kind,
        ordinates=ordinates,
        t_max=t_max,
        ordinate_tolerance=tolerance,
        source=str(path),
        t_min=t_min,
    )
    logger.info("Imported {} ordinates from {}", len(zs), path)
    return zs
