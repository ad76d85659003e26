"""Zero-count accounting, multiplicities, interlacing and the Ξ′ / Z′ comparison."""

from __future__ import annotations

import numpy as np
from loguru import logger

from ..errors import DomainError, PairingError
from ..special import RS_CROSSOVER, xi_prime_scaled_values, z_noise_estimate
from .models import (
    CountAudit,
    InterlacingPair,
    InterlacingReport,
    MultiplicityReport,
    ZeroKind,
    ZeroSet,
    ZPrimeComparison,
)

SMOOTH_SLACK = 2.0
# lower bounds on the simple share of Ξ′ zeros and the distinct share of ζ zeros
SIMPLE_FLOOR = 0.8584
DISTINCT_FLOOR = 0.6544
SLOPE_STEP = 1e-5
SLOPE_NOISE_FACTOR = 10.0


def smooth_count(T: float) -> float:
    """Riemann–von Mangoldt main term (T/2π)log(T/2π) - T/2π + 7/8."""
    if T <= 0:
        raise DomainError(f"T must be positive, got {T}")
    u = T / (2 * np.pi)
    return float(u * np.log(u) - u + 7.0 / 8.0)


def count_audit(zs: ZeroSet, xip: ZeroSet | None = None) -> CountAudit:
    counted = len(zs)
    smooth = smooth_count(zs.t_max)
    audit = CountAudit(counted=counted, smooth=smooth, within_smooth=abs(counted - smooth) < SMOOTH_SLACK)
    if not audit.within_smooth and zs.kind is not ZeroKind.XI_PRIME:
        logger.warning("Count audit: {} zeros up to {}, smooth count {:.3f}", counted, zs.t_max, smooth)

    if xip is not None:
        if xip.t_max != zs.t_max:
            raise DomainError(
                "count audit needs both sets on the same range",
                xi_t_max=zs.t_max,
                xi_prime_t_max=xip.t_max,
            )
        diff = len(xip) - counted
        audit.n1_minus_n = diff
        audit.n1_within_one = abs(diff) <= 1
        if not audit.n1_within_one:
            logger.error("N1(T) - N(T) = {} at T = {}", diff, zs.t_max)
    return audit


def multiplicity_report(xi: ZeroSet, xip: ZeroSet, crossover: float = RS_CROSSOVER) -> MultiplicityReport:
    """Count simple Ξ′ zeros and distinct Ξ zeros on [0, T].

    A Ξ′ zero is simple when Ξ″ there is clear of the evaluation noise and
    no other Ξ′ zero lies within the difference step. Both shares are taken
    against the smooth count, which counts zeros with multiplicity.
    """
    if xip.t_max != xi.t_max:
        raise DomainError(
            "multiplicity report needs both sets on the same range",
            xi_t_max=xi.t_max,
            xi_prime_t_max=xip.t_max,
        )
    T = xi.t_max
    smooth = smooth_count(T)
    t = xip.ordinates
    h = SLOPE_STEP
    second = (xi_prime_scaled_values(t + h, crossover) - xi_prime_scaled_values(t - h, crossover)) / (2 * h)
    noise = np.array([z_noise_estimate(float(ti), crossover) for ti in t]) * SLOPE_NOISE_FACTOR / h
    separated = np.ones(t.size, dtype=bool)
    if t.size > 1:
        close = np.diff(t) < 2 * h
        separated[:-1] &= ~close
        separated[1:] &= ~close
    simple = int(np.count_nonzero(separated & (np.abs(second) > noise)))

    report = MultiplicityReport(
        T=T,
        smooth=smooth,
        xi_distinct=len(xi),
        distinct_fraction=len(xi) / smooth,
        distinct_floor=DISTINCT_FLOOR,
        xi_prime_zeros=len(xip),
        xi_prime_simple=simple,
        simple_fraction=simple / max(float(len(xip)), smooth),
        simple_floor=SIMPLE_FLOOR,
    )
    logger.info(
        "Multiplicity: {}/{} simple Ξ' zeros, {} distinct Ξ zeros against N(T) = {:.1f}",
        simple,
        len(xip),
        len(xi),
        smooth,
    )
    if not report.above_floors:
        logger.warning("Multiplicity shares below their floors at T = {}", T)
    return report


def interlacing_report(xi: ZeroSet, xip: ZeroSet) -> InterlacingReport:
    gamma = xi.ordinates
    inner = xip.ordinates
    pairs: list[InterlacingPair] = []
    violations = 0
    for lo, hi in zip(gamma[:-1], gamma[1:]):
        start = int(np.searchsorted(inner, lo, side="right"))
        stop = int(np.searchsorted(inner, hi, side="left"))
        inside = stop - start
        pair = InterlacingPair(xi_lo=float(lo), xi_hi=float(hi), inside=inside)
        if inside == 1:
            pair.xi_prime_zero = float(inner[start])
            pair.offset_from_midpoint = pair.xi_prime_zero - pair.midpoint
        else:
            violations += 1
        pairs.append(pair)

    report = InterlacingReport(pairs=pairs, violations=violations, repulsion_agreement=_repulsion(pairs))
    logger.info("Interlacing: {} gaps, {} violations", len(pairs), violations)
    return report


def _repulsion(pairs: list[InterlacingPair]) -> float | None:
    """Share of interior gaps whose Ξ′ zero leans toward the larger neighbouring gap."""
    agree = total = 0
    for left, mid, right in zip(pairs[:-2], pairs[1:-1], pairs[2:]):
        if mid.offset_from_midpoint is None or mid.offset_from_midpoint == 0:
            continue
        left_gap = left.xi_hi - left.xi_lo
        right_gap = right.xi_hi - right.xi_lo
        if left_gap == right_gap:
            continue
        total += 1
        if (right_gap > left_gap) == (mid.offset_from_midpoint > 0):
            agree += 1
    return agree / total if total else None


def compare_zprime(xip: ZeroSet, zp: ZeroSet) -> ZPrimeComparison:
    if len(xip) != len(zp):
        raise PairingError(
            "Ξ′ and Z′ zero counts differ on the compared range",
            xi_prime=len(xip),
            z_prime=len(zp),
        )
    t = np.array(xip.ordinates)
    delta = t - zp.ordinates
    normalized = delta * np.log(t) ** 2
    return ZPrimeComparison(t=t, delta=delta, normalized=normalized)
