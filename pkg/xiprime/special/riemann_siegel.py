"""Hardy's Z function, its derivative and the Riemann–Siegel theta function.

Large t uses the Riemann–Siegel main sum with the C0, C1, C2 correction
terms. Below ``crossover`` ζ(½+it) comes from the alternating η series
with Borwein weights, ζ = η/(1 - 2^{1-s}), which converges for every t.
Everything is vectorised over numpy arrays; the scalar helpers wrap the
array versions.
"""

from __future__ import annotations

from functools import lru_cache

import mpmath
import numpy as np
from numpy.polynomial import Polynomial
from scipy.special import gammaln, loggamma, psi

from ..errors import AccuracyError

RS_CROSSOVER = 500.0
VALIDATED_T_MAX = 1.0e6
THETA_SERIES_MIN = 50.0

# remainder after the C2 term, |R| <= RS_ERROR_COEFF·t^{-7/4} for t >= 200
RS_ERROR_COEFF = 0.053
ETA_ERROR = 1e-10
ETA_NOISE = 1e-13
# double rounding in the phases t·log n, relative to t·log t
ROUNDING_COEFF = 4 * np.finfo(np.float64).eps

_CHUNK = 2048
_ETA_CHUNK = 256
_ETA_MIN_TERMS = 24
_LOG_BORWEIN = np.log(3 + np.sqrt(8.0))
_PSI_ORDER = 50
_LOG_PI = np.log(np.pi)


# =========================
# Ψ(p) = cos(2π(p² - p - 1/16)) / cos(2πp) 的泰勒展开
# =========================

@lru_cache(maxsize=1)
def _psi_series() -> Polynomial:
    """Taylor series of Ψ in z = p - ½, i.e. -cos(2πz² - 5π/8)/cos(2πz)."""
    with mpmath.workdps(110):
        two_pi = 2 * mpmath.pi
        c5, s5 = mpmath.cos(5 * mpmath.pi / 8), mpmath.sin(5 * mpmath.pi / 8)
        size = _PSI_ORDER + 1
        num = [mpmath.mpf(0)] * size
        den = [mpmath.mpf(0)] * size
        for m in range(size):
            if 4 * m < size:
                num[4 * m] -= c5 * (-1) ** m * two_pi ** (2 * m) / mpmath.factorial(2 * m)
            if 4 * m + 2 < size:
                num[4 * m + 2] -= s5 * (-1) ** m * two_pi ** (2 * m + 1) / mpmath.factorial(2 * m + 1)
            if 2 * m < size:
                den[2 * m] = (-1) ** m * two_pi ** (2 * m) / mpmath.factorial(2 * m)
        quotient = []
        for n in range(size):
            acc = num[n] - sum(den[i] * quotient[n - i] for i in range(1, n + 1))
            quotient.append(acc / den[0])
        return Polynomial([float(c) for c in quotient])


@lru_cache(maxsize=1)
def _correction_polys() -> tuple[tuple[Polynomial, Polynomial], ...]:
    """(C_i, C_i') for i = 0, 1, 2 as polynomials in z = p - ½."""
    base = _psi_series()
    pi2 = np.pi**2
    c0 = base
    c1 = -base.deriv(3) / (96 * pi2)
    c2 = base.deriv(2) / (64 * pi2) + base.deriv(6) / (18432 * pi2**2)
    return tuple((c, c.deriv(1)) for c in (c0, c1, c2))


def _check_range(t: np.ndarray) -> None:
    if t.size and np.max(np.abs(t)) > VALIDATED_T_MAX:
        raise AccuracyError(
            f"|t| = {np.max(np.abs(t))} exceeds validated range {VALIDATED_T_MAX}",
            t_max=VALIDATED_T_MAX,
        )


# =========================
# theta
# =========================

def theta_values(t: np.ndarray) -> np.ndarray:
    t = np.asarray(t, dtype=np.float64)
    sign = np.sign(t)
    a = np.abs(t)
    out = np.empty_like(a)

    big = a >= THETA_SERIES_MIN
    tb = a[big]
    inv = 1.0 / tb
    out[big] = (
        0.5 * tb * np.log(tb / (2 * np.pi))
        - 0.5 * tb
        - np.pi / 8
        + inv / 48
        + 7 * inv**3 / 5760
        + 31 * inv**5 / 80640
    )
    ts = a[~big]
    out[~big] = loggamma(0.25 + 0.5j * ts).imag - 0.5 * ts * _LOG_PI
    return sign * out


def theta_prime_values(t: np.ndarray) -> np.ndarray:
    a = np.abs(np.asarray(t, dtype=np.float64))
    out = np.empty_like(a)
    big = a >= THETA_SERIES_MIN
    tb = a[big]
    out[big] = (
        0.5 * np.log(tb / (2 * np.pi)) - 1 / (48 * tb**2) - 7 / (1920 * tb**4) - 31 / (16128 * tb**6)
    )
    ts = a[~big]
    out[~big] = 0.5 * psi(0.25 + 0.5j * ts).real - 0.5 * _LOG_PI
    return out


def theta(t: float) -> float:
    return float(theta_values(np.array([t]))[0])


# =========================
# Riemann–Siegel 主和与修正项
# =========================

def _rs_block(t: np.ndarray, derivative: bool) -> np.ndarray:
    a = np.sqrt(t / (2 * np.pi))
    N = np.floor(a).astype(np.int64)
    z = a - N - 0.5
    th = theta_values(t)

    n = np.arange(1, int(N.max()) + 1, dtype=np.float64)
    log_n = np.log(n)
    mask = n[None, :] <= N[:, None]
    phase = th[:, None] - t[:, None] * log_n[None, :]
    weights = np.where(mask, 1.0 / np.sqrt(n)[None, :], 0.0)

    sign = np.where(N % 2 == 1, 1.0, -1.0)  # (-1)^{N-1}
    (c0, d0), (c1, d1), (c2, d2) = _correction_polys()
    C0, C1, C2 = c0(z), c1(z), c2(z)

    if not derivative:
        main = 2.0 * np.sum(weights * np.cos(phase), axis=1)
        rem = sign * a**-0.5 * (C0 + C1 / a + C2 / a**2)
        return main + rem

    thp = theta_prime_values(t)
    main = -2.0 * np.sum(weights * np.sin(phase) * (thp[:, None] - log_n[None, :]), axis=1)
    G = C0 + C1 / a + C2 / a**2
    dG = d0(z) + d1(z) / a - C1 / a**2 + d2(z) / a**2 - 2 * C2 / a**3
    da = 1.0 / (4 * np.pi * a)
    rem = sign * da * (-0.5 * a**-1.5 * G + a**-0.5 * dG)
    return main + rem


# =========================
# 交错 η 级数 (Borwein 加速)
# =========================

def _eta_terms(t_max: float) -> int:
    """Terms for a truncation error below 1e-16 at heights up to t_max, rounded up to 32."""
    bound = np.pi * t_max + np.log(3 * (1 + 2 * t_max) / np.sqrt(2 * np.pi)) + 37.0
    n = max(_ETA_MIN_TERMS, int(np.ceil(bound / _LOG_BORWEIN)) + 4)
    return -(-n // 32) * 32


@lru_cache(maxsize=64)
def _borwein_weights(n: int) -> np.ndarray:
    """(-1)^k·(1 - d_k/d_n) for k < n."""
    i = np.arange(n + 1, dtype=np.float64)
    log_terms = gammaln(n + i) - gammaln(n - i + 1) - gammaln(2 * i + 1) + i * np.log(4.0)
    terms = np.exp(log_terms - log_terms.max())
    # 1 - d_k/d_n as a tail sum, no cancellation near k = n
    tails = np.cumsum(terms[::-1])[::-1]
    weights = tails[1:] / tails[0]
    signs = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)
    return signs * weights


def _eta_block(t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(Z, Z') from ζ(½+it) = η/(1 - 2^{1-s}) and Z = e^{iθ}ζ."""
    s = 0.5 + 1j * t
    n = _eta_terms(float(t.max()))
    weights = _borwein_weights(n)
    log_k = np.log(np.arange(1, n + 1, dtype=np.float64))
    powers = np.exp(-s[:, None] * log_k[None, :])
    eta = powers @ weights
    eta_d = -(powers @ (weights * log_k))

    two = np.exp((1 - s) * np.log(2.0))
    denom = 1 - two
    zeta = eta / denom
    zeta_d = eta_d / denom - eta * two * np.log(2.0) / denom**2

    rot = np.exp(1j * theta_values(t))
    z = (rot * zeta).real
    z_prime = (1j * rot * (theta_prime_values(t) * zeta + zeta_d)).real
    return z, z_prime


def _evaluate(t: np.ndarray, derivative: int, crossover: float) -> np.ndarray:
    return _evaluate_pair(t, crossover, want=(derivative,))[derivative]


def _evaluate_pair(
    t: np.ndarray,
    crossover: float,
    want: tuple[int, ...] = (0, 1),
) -> dict[int, np.ndarray]:
    t = np.asarray(t, dtype=np.float64)
    _check_range(t)
    a = np.abs(t)
    out = {d: np.empty_like(a) for d in want}

    small = np.flatnonzero(a < crossover)
    for start in range(0, small.size, _ETA_CHUNK):
        block = small[start : start + _ETA_CHUNK]
        pair = _eta_block(a[block])
        for d in want:
            out[d][block] = pair[d]
    large = np.flatnonzero(a >= crossover)
    for start in range(0, large.size, _CHUNK):
        block = large[start : start + _CHUNK]
        for d in want:
            out[d][block] = _rs_block(a[block], derivative=bool(d))

    if 1 in out:
        # Z 为偶函数，Z' 为奇函数
        out[1] = np.where(t < 0, -out[1], out[1])
    return out


def z_values(t: np.ndarray, crossover: float = RS_CROSSOVER) -> np.ndarray:
    return _evaluate(t, 0, crossover)


def z_prime_values(t: np.ndarray, crossover: float = RS_CROSSOVER) -> np.ndarray:
    return _evaluate(t, 1, crossover)


def z_pair_values(t: np.ndarray, crossover: float = RS_CROSSOVER) -> tuple[np.ndarray, np.ndarray]:
    """Z and Z' from one pass over the η sums."""
    out = _evaluate_pair(t, crossover)
    return out[0], out[1]


def z_noise_estimate(t: float, crossover: float = RS_CROSSOVER) -> float:
    """Rounding jitter of Z between nearby points; the truncation error is smooth and excluded."""
    a = abs(t)
    if a < crossover:
        return ETA_NOISE
    return ROUNDING_COEFF * a * np.log(a) * np.sqrt(1 + np.log(a))


def z_error_estimate(t: float, crossover: float = RS_CROSSOVER) -> float:
    a = abs(t)
    if a < crossover:
        return ETA_ERROR
    return RS_ERROR_COEFF * a**-1.75 + z_noise_estimate(a, crossover)


def Z(t: float, crossover: float = RS_CROSSOVER) -> float:
    return float(z_values(np.array([t]), crossover)[0])


def Z_prime(t: float, crossover: float = RS_CROSSOVER) -> float:
    return float(z_prime_values(np.array([t]), crossover)[0])
