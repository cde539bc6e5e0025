"""
Composite quadrature on [0, cutoff] for oscillatory integrands.

Panels are sized to the oscillation period of the integrand; each panel is
integrated independently and the panel sums are combined in a fixed order
with compensated summation, so results do not depend on chunking.
"""

import logging
import math
from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from nullity_engine.conf import get_config
from nullity_engine.exceptions import ParameterDomainError

logger = logging.getLogger(__name__)


class QuadratureRule(str, Enum):
    GAUSS_LEGENDRE = 'gauss-legendre'
    ADAPTIVE_SIMPSON = 'adaptive-simpson'


@dataclass(frozen=True)
class QuadratureConfig:
    """
    Attributes:
        cutoff (float): Frequency half-width; integrals run over |xi| <= cutoff
        points_per_panel (int): Gauss-Legendre nodes per panel
        panel_count (int): Fixed number of panels, or None to size panels by
            the oscillation period
        rule (QuadratureRule): Panel rule
        tail_estimate (bool): Attach an analytic bound on the truncated tail
        simpson_tolerance (float): Absolute tolerance per panel for adaptive Simpson
    """

    cutoff: float = 2.0**20
    points_per_panel: int = 64
    panel_count: int = None
    rule: QuadratureRule = QuadratureRule.GAUSS_LEGENDRE
    tail_estimate: bool = True
    small_xi_threshold: float = 1e-4
    chunk_size: int = 1 << 15
    simpson_tolerance: float = 1e-12

    def __post_init__(self):
        if not self.cutoff > 0:
            raise ParameterDomainError('cutoff > 0', f"got {self.cutoff}")
        if self.panel_count is not None and self.panel_count < 2:
            raise ParameterDomainError('panel_count >= 2', f"got {self.panel_count}")
        if self.points_per_panel < 2:
            raise ParameterDomainError('points_per_panel >= 2', f"got {self.points_per_panel}")

    @classmethod
    def from_settings(cls, **overrides):
        values = {**get_config('QUADRATURE_CONFIG'), **overrides}
        values['rule'] = QuadratureRule(values.get('rule', QuadratureRule.GAUSS_LEGENDRE))
        values['cutoff'] = float(values['cutoff'])
        known = cls.__dataclass_fields__
        return cls(**{key: value for key, value in values.items() if key in known})

    def with_cutoff(self, cutoff):
        return replace(self, cutoff=float(cutoff))

    def panels_for(self, period_scale):
        """Panel count so that each panel spans one period 2*pi/period_scale."""
        if self.panel_count is not None:
            return self.panel_count
        if period_scale <= 0:
            return 2
        return max(2, math.ceil(self.cutoff * period_scale / (2 * math.pi)))


def _gauss_legendre(func, edges, points, chunk_size):
    nodes, weights = np.polynomial.legendre.leggauss(points)
    panel_sums = []
    panels_per_chunk = max(1, chunk_size // points)
    for start in range(0, len(edges) - 1, panels_per_chunk):
        left = edges[start:start + panels_per_chunk + 1][:-1]
        right = edges[start + 1:start + panels_per_chunk + 1]
        half = (right - left) / 2
        middle = (right + left) / 2
        xs = middle[:, None] + half[:, None] * nodes[None, :]
        values = func(xs.ravel()).reshape(xs.shape)
        panel_sums.extend((values @ weights) * half)
    return panel_sums


def _simpson_panel(func, a, b, tolerance, max_depth=50):
    def simpson(fa, fm, fb, width):
        return width * (fa + 4 * fm + fb) / 6

    fa, fm, fb = func(np.array([a, (a + b) / 2, b]))
    stack = [(a, b, fa, fm, fb, simpson(fa, fm, fb, b - a), tolerance, 0)]
    pieces = []
    while stack:
        a0, b0, fa0, fm0, fb0, whole, tol, depth = stack.pop()
        m0 = (a0 + b0) / 2
        fl, fr = func(np.array([(a0 + m0) / 2, (m0 + b0) / 2]))
        left = simpson(fa0, fl, fm0, m0 - a0)
        right = simpson(fm0, fr, fb0, b0 - m0)
        if depth >= max_depth or abs(left + right - whole) <= 15 * tol:
            pieces.append(left + right + (left + right - whole) / 15)
        else:
            stack.append((m0, b0, fm0, fr, fb0, right, tol / 2, depth + 1))
            stack.append((a0, m0, fa0, fl, fm0, left, tol / 2, depth + 1))
    return math.fsum(pieces)


def integrate(func, upper, quad, period_scale):
    """
    Integral of a vectorized ``func`` over [0, upper].

    Args:
        func (callable): Maps a float64 array of abscissae to values
        upper (float): Upper limit
        quad (QuadratureConfig): Rule and panel settings
        period_scale (float): Highest oscillation frequency of ``func``; panels
            are one period 2*pi/period_scale wide over [0, quad.cutoff]

    Returns:
        float: The integral, panel sums combined with ``math.fsum``
    """
    panels = quad.panels_for(period_scale)
    panels = max(2, math.ceil(panels * upper / quad.cutoff))
    edges = np.linspace(0.0, upper, panels + 1)
    if quad.rule is QuadratureRule.ADAPTIVE_SIMPSON:
        tolerance = quad.simpson_tolerance / panels
        panel_sums = [
            _simpson_panel(func, a, b, tolerance) for a, b in zip(edges[:-1], edges[1:])
        ]
    else:
        panel_sums = _gauss_legendre(func, edges, quad.points_per_panel, quad.chunk_size)
    logger.debug(f"{quad.rule.value} quadrature on [0, {upper:g}] with {panels} panels")
    return math.fsum(float(value) for value in panel_sums)


def integrate_callable(func, lower, upper, panels=16, points=64):
    """Composite Gauss-Legendre integral of a vectorized function on [lower, upper]."""
    edges = np.linspace(float(lower), float(upper), panels + 1)
    return math.fsum(float(v) for v in _gauss_legendre(func, edges, points, 1 << 15))
