"""Exception hierarchy shared by every sub-package.

Each error carries the process exit code the CLI maps it to:
2 for configuration problems, 3 for numeric / accuracy problems and
4 for file I/O problems.
"""

from __future__ import annotations

from typing import Any


class XiPrimeError(Exception):
    exit_code: int = 1

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_payload(self) -> dict[str, Any]:
        """Machine-readable form printed by the CLI on failure."""
        payload: dict[str, Any] = {
            "error": type(self).__name__,
            "message": self.message,
            "exit_code": self.exit_code,
        }
        if self.details:
            payload["details"] = {k: _jsonable(v) for k, v in self.details.items()}
        return payload


def _jsonable(value: Any) -> Any:
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)


# =========================
# 配置错误 (exit 2)
# =========================

class ConfigError(XiPrimeError):
    exit_code = 2


# =========================
# 数值错误 (exit 3)
# =========================

class NumericError(XiPrimeError):
    exit_code = 3


class DomainError(NumericError):
    """Argument outside the mathematical domain of the operation."""


class PoleError(DomainError):
    pass


class PreconditionError(DomainError):
    """Caller violated a documented contract (ranges, windows, orderings)."""


class SpecInvalidError(DomainError):
    pass


class RangeError(NumericError):
    """Request exceeds a table extent or a representable range."""


class AccuracyError(NumericError):
    """Requested ordinate is outside the validated accuracy range."""


class CapacityError(NumericError):
    pass


class BudgetError(NumericError):
    pass


class PairingError(NumericError):
    pass


class IncompleteSetError(NumericError):
    pass


class WindowTooSmallError(NumericError):
    pass


class QuadratureError(NumericError):
    pass


# =========================
# I/O 错误 (exit 4)
# =========================

class DataIOError(XiPrimeError):
    exit_code = 4


class ZeroFileError(DataIOError):
    """Malformed zero file; ``line`` is 1-based."""

    def __init__(self, message: str, *, path: str, line: int | None = None):
        super().__init__(message, path=path, line=line)
        self.path = path
        self.line = line


class MonotonicityError(ZeroFileError):
    pass
