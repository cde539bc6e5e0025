"""
Power-law behaviour of the capacity of small balls, cap(B_r) ~ r^{1-2s} for
n = 1, p = 2 and 0 < s < 1/2.
"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy import stats

from nullity_engine.capacity.grid import MaskKind, build_grid, mask_from_ball
from nullity_engine.capacity.solvers import solve_cap
from nullity_engine.exceptions import ConvergenceError, ParameterDomainError

logger = logging.getLogger(__name__)

DEFAULT_RADII = tuple(2.0**-k for k in range(3, 8))

# Radii down to 2^-7 need a finer grid than the capacity defaults.
DEFAULT_SCALING_GRID = {'half_width': 8.0, 'points': 2**15}


@dataclass(frozen=True)
class ScalingFit:
    """
    Least-squares fit of log cap(B_r) against log r.

    Attributes:
        exponent (float): Fitted slope
        intercept (float): Fitted log-capacity at r = 1
        r_value (float): Correlation coefficient of the fit
        expected (float): 1 - 2s
        radii (tuple): Sampled radii
        capacities (tuple): cap(B_r) per radius
        local_slopes (tuple): Slopes between consecutive radii
    """

    exponent: float
    intercept: float
    r_value: float
    expected: float
    radii: tuple
    capacities: tuple
    local_slopes: tuple

    def rows(self):
        """One dict per radius, ready for CSV export."""
        slopes = (None,) + self.local_slopes
        return [
            {'r': r, 'cap': c, 'local_slope': slope, 'fitted_exponent': self.exponent}
            for r, c, slope in zip(self.radii, self.capacities, slopes)
        ]


def _check_s(s):
    s = float(s)
    if not 0 < s < 0.5:
        raise ParameterDomainError('0 < s < 1/2', f"got s={s}")
    return s


def _check_radii(radii):
    radii = tuple(sorted(float(r) for r in radii))
    if len(radii) < 4 or len(set(radii)) < len(radii):
        raise ParameterDomainError('at least 4 distinct radii', f"got {len(radii)}")
    if radii[0] <= 0 or radii[-1] > 1:
        raise ParameterDomainError('radii in (0, 1]')
    if radii[-1] < 10 * radii[0]:
        raise ParameterDomainError('radii spanning at least one decade', f"{radii[0]} to {radii[-1]}")
    return radii


def ball_capacities(s, radii, grid_cfg=None, center=0.0):
    """
    cap(B_r(center)) for each radius on one grid.

    Args:
        s (float): Regularity
        radii (iterable): Ball radii
        grid_cfg (dict, optional): ``half_width``, ``points``, ``padding`` and
            solver overrides
        center (float): Ball center

    Returns:
        list: SolveReport per radius
    """
    grid_cfg = {**DEFAULT_SCALING_GRID, **(grid_cfg or {})}
    grid = build_grid(grid_cfg.get('half_width'), grid_cfg.get('points'), s)
    reports = []
    for radius in radii:
        mask = mask_from_ball(grid, center, radius, MaskKind.AT_LEAST_ONE, grid_cfg.get('padding'))
        report = solve_cap(grid, mask, grid_cfg)
        if not report.converged:
            raise ConvergenceError(f"ball capacity did not converge at r={radius}, s={s}")
        reports.append(report)
    return reports


def ball_scaling_exponent(s, radii=None, grid_cfg=None):
    """
    Fit cap(B_r) ~ C r^k and return the fit.

    Args:
        s (float): Regularity, 0 < s < 1/2
        radii (iterable, optional): At least 4 radii in (0, 1] spanning a decade
        grid_cfg (dict, optional): Grid and solver overrides

    Returns:
        ScalingFit: The fit; ``exponent`` approximates 1 - 2s
    """
    s = _check_s(s)
    radii = _check_radii(DEFAULT_RADII if radii is None else radii)
    capacities = [report.value for report in ball_capacities(s, radii, grid_cfg)]
    log_r, log_cap = np.log(radii), np.log(capacities)
    fit = stats.linregress(log_r, log_cap)
    local = np.diff(log_cap) / np.diff(log_r)
    logger.info(f"ball scaling at s={s}: exponent {fit.slope:.4f} (expected {1 - 2 * s:.4f})")
    return ScalingFit(
        float(fit.slope), float(fit.intercept), float(fit.rvalue), 1 - 2 * s,
        radii, tuple(capacities), tuple(float(v) for v in local),
    )


def estimate_AB_ratio(s, radii=None, grid_cfg=None):  # noqa: N802
    """
    Heuristic A/B surrogate: min over max of cap(B_r) / r^{1-2s}.

    Returns:
        float: A ratio in (0, 1]
    """
    s = _check_s(s)
    radii = tuple(sorted(float(r) for r in (DEFAULT_RADII if radii is None else radii)))
    if not radii or radii[0] <= 0:
        raise ParameterDomainError('positive radii')
    reports = ball_capacities(s, radii, grid_cfg)
    normalized = [report.value / r ** (1 - 2 * s) for report, r in zip(reports, radii)]
    ratio = min(normalized) / max(normalized)
    logger.info(f"A/B surrogate at s={s} over {len(radii)} radii: {ratio:.4f}")
    return ratio
