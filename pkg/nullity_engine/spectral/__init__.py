"""
Fourier-side computations for p = 2: transforms of characteristic functions,
H^{s,2} norms by quadrature and the gap-sum membership criterion.
"""

from nullity_engine.spectral.fourier import chi_hat, sinc, spectrum_samples
from nullity_engine.spectral.gap_sum import (
    DEFAULT_C1,
    GapSumResult,
    MembershipBound,
    fat_gap_ratio,
    fat_gap_sum_term,
    fat_membership_bound,
    gap_sum_terms,
    low_frequency_bound,
)
from nullity_engine.spectral.norms import (
    NormEstimate,
    hs2_norm_sq,
    norm_sequence,
    power_tail_bound,
    shift_diff_norm_sq,
    shift_identity_quadrature,
)
from nullity_engine.spectral.quadrature import QuadratureConfig, QuadratureRule, integrate

__all__ = [
    'DEFAULT_C1',
    'GapSumResult',
    'MembershipBound',
    'NormEstimate',
    'QuadratureConfig',
    'QuadratureRule',
    'chi_hat',
    'fat_gap_ratio',
    'fat_gap_sum_term',
    'fat_membership_bound',
    'gap_sum_terms',
    'hs2_norm_sq',
    'integrate',
    'low_frequency_bound',
    'norm_sequence',
    'power_tail_bound',
    'shift_diff_norm_sq',
    'shift_identity_quadrature',
    'sinc',
    'spectrum_samples',
]
