"""
H^{s,2} norms of characteristic functions through Plancherel:
||chi_A||^2 = int (1 + xi^2)^s |chi_hat_A(xi)|^2 dxi.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from nullity_engine.spectral.fourier import chi_hat_arrays, midpoints_and_halves
from nullity_engine.spectral.quadrature import QuadratureConfig, integrate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NormEstimate:
    """
    A truncated integral with a bound on the neglected tail.

    ``divergent`` is True when the norm is known to be infinite; value and
    tail bound are then ``inf``.
    """

    value: float
    tail_bound: float
    cutoff: float
    divergent: bool = False


def _spread(intervals):
    span = intervals.span()
    return float(span[1] - span[0]) if span else 0.0


def _center(intervals):
    span = intervals.span()
    return float((span[0] + span[1]) / 2) if span else 0.0


def power_tail_bound(components, s, cutoff):
    """
    Bound on int_{|xi| > cutoff} (1 + xi^2)^s |chi_hat|^2 from
    |chi_hat(xi)| <= 2K / (sqrt(2 pi) |xi|), valid for s < 1/2 and cutoff >= 1.
    """
    return (4 * components**2 / math.pi) * 2 ** max(s, 0.0) * cutoff ** (2 * s - 1) / (1 - 2 * s)


def hs2_norm_sq(intervals, s, quad=None):
    """
    Squared H^{s,2} norm of the characteristic function of ``intervals``.

    Finite unions of intervals have |chi_hat| decaying exactly like 1/|xi|, so
    the norm is infinite for s >= 1/2; that case is reported as divergent
    without integrating.

    Args:
        intervals (IntervalSet): The set
        s (float): Regularity
        quad (QuadratureConfig, optional): Defaults from settings

    Returns:
        NormEstimate: value over |xi| <= cutoff and the tail bound
    """
    quad = quad or QuadratureConfig.from_settings()
    s = float(s)
    components = len(intervals)
    if components == 0 or intervals.total_length() == 0:
        return NormEstimate(0.0, 0.0, quad.cutoff)
    if s >= 0.5:
        logger.info(f"H^{s},2 norm of {components} intervals is infinite")
        return NormEstimate(math.inf, math.inf, quad.cutoff, divergent=True)

    middles, halves = midpoints_and_halves(intervals, _center(intervals))

    def integrand(xi):
        return (1 + xi * xi) ** s * np.abs(chi_hat_arrays(middles, halves, xi)) ** 2

    value = 2 * integrate(integrand, quad.cutoff, quad, _spread(intervals))
    tail = power_tail_bound(components, s, quad.cutoff) if quad.tail_estimate else 0.0
    return NormEstimate(value, tail, quad.cutoff)


def shift_diff_norm_sq(intervals, t):
    """
    ||chi_A - chi_{A+t}||^2 in L^2, i.e. |A symmetric-difference (A + t)|, exactly.
    """
    return intervals.symmetric_difference(intervals.shift(t)).total_length()


def shift_identity_quadrature(intervals, t, quad=None):
    """
    The Fourier side 2 int (1 - cos(t xi)) |chi_hat_A(xi)|^2 dxi of the shift identity.

    Returns:
        NormEstimate: Quadrature value and tail bound (four times the s = 0 bound)
    """
    quad = quad or QuadratureConfig.from_settings()
    components = len(intervals)
    if components == 0:
        return NormEstimate(0.0, 0.0, quad.cutoff)
    t = float(t)
    middles, halves = midpoints_and_halves(intervals, _center(intervals))

    def integrand(xi):
        return 2 * (1 - np.cos(t * xi)) * np.abs(chi_hat_arrays(middles, halves, xi)) ** 2

    value = 2 * integrate(integrand, quad.cutoff, quad, _spread(intervals) + abs(t))
    tail = 4 * power_tail_bound(components, 0.0, quad.cutoff) if quad.tail_estimate else 0.0
    return NormEstimate(value, tail, quad.cutoff)


def norm_sequence(level_sets, s, quad=None):
    """hs2_norm_sq over a sequence of prefractals, in order."""
    return [hs2_norm_sq(level, s, quad) for level in level_sets]

