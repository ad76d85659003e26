"""L(s) = 1/s + 1/(s-1) - (log π)/2 + ½·ψ(s/2) and its derivative."""

from __future__ import annotations

import mpmath
import numpy as np
from scipy.special import psi

from ..errors import PoleError

_HALF_LOG_PI = 0.5 * np.log(np.pi)


def _check_pole(s: complex) -> None:
    if s.imag == 0 and (s.real == 1 or (s.real <= 0 and s.real % 2 == 0)):
        raise PoleError(f"L has a pole at s={s}", s=s)


def L_func(s: complex) -> complex:
    s = complex(s)
    _check_pole(s)
    return complex(1 / s + 1 / (s - 1) - _HALF_LOG_PI + 0.5 * psi(s / 2))


def L_values(s: np.ndarray) -> np.ndarray:
    """Vectorised L for quadrature nodes; poles are the caller's problem."""
    s = np.asarray(s, dtype=np.complex128)
    return 1 / s + 1 / (s - 1) - _HALF_LOG_PI + 0.5 * psi(s / 2)


def L_prime(s: complex) -> complex:
    """L'(s) = -1/s² - 1/(s-1)² + ¼·ψ'(s/2)."""
    s = complex(s)
    _check_pole(s)
    trigamma = complex(mpmath.psi(1, mpmath.mpc(s.real, s.imag) / 2))
    return -1 / s**2 - 1 / (s - 1) ** 2 + 0.25 * trigamma
