"""
Capacities cap and Cap for p = 2 on a periodic spectral grid, the exact
H^{2,2} restriction norm of even functions and ball-capacity scaling.
"""

from nullity_engine.capacity.grid import (
    ConstraintMask,
    MaskKind,
    SpectralGrid,
    apply_operator,
    build_grid,
    mask_from_ball,
    mask_from_intervals,
    quadratic_form,
)
from nullity_engine.capacity.restriction_norm import (
    best_trial,
    constant_norm_sq,
    cubicgap_trial_pieces,
    h22_even_interval_norm_sq,
    h22_even_polynomial_norm_sq,
    quadratic_trial_pieces,
    trial_cubicgap,
    trial_quadratic,
    trial_slope,
)
from nullity_engine.capacity.scaling import DEFAULT_RADII, ScalingFit, ball_capacities, ball_scaling_exponent, estimate_AB_ratio
from nullity_engine.capacity.solvers import SolveReport, kkt_residual, solve_Cap, solve_cap

__all__ = [
    'ConstraintMask',
    'MaskKind',
    'SpectralGrid',
    'apply_operator',
    'build_grid',
    'mask_from_ball',
    'mask_from_intervals',
    'quadratic_form',
    'best_trial',
    'constant_norm_sq',
    'cubicgap_trial_pieces',
    'h22_even_interval_norm_sq',
    'h22_even_polynomial_norm_sq',
    'quadratic_trial_pieces',
    'trial_cubicgap',
    'trial_quadratic',
    'trial_slope',
    'DEFAULT_RADII',
    'ScalingFit',
    'ball_capacities',
    'ball_scaling_exponent',
    'estimate_AB_ratio',
    'SolveReport',
    'kkt_residual',
    'solve_Cap',
    'solve_cap',
]
