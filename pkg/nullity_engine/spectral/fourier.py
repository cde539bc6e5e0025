"""
Fourier transform of characteristic functions of interval unions.

Convention: f_hat(xi) = (2 pi)^{-1/2} int f(x) exp(-i xi x) dx. Each interval
[a, b] with midpoint m and half-length h contributes
2 h exp(-i xi m) sinc(xi h), with sinc evaluated by its Taylor series near 0.
"""

import logging
import math

import numpy as np

from nullity_engine.conf import get_config

logger = logging.getLogger(__name__)

INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)

# sin(y)/y = sum (-1)^k y^{2k}/(2k+1)!, through y^8
_SINC_TAYLOR = (1.0, -1.0 / 6, 1.0 / 120, -1.0 / 5040, 1.0 / 362880)


def sinc(y, threshold=None):
    """sin(y)/y, with the degree-8 Taylor polynomial for |y| below ``threshold``."""
    if threshold is None:
        threshold = get_config('QUADRATURE_CONFIG')['small_xi_threshold']
    y = np.asarray(y, dtype=float)
    y2 = y * y
    series = _SINC_TAYLOR[4]
    for coefficient in reversed(_SINC_TAYLOR[:4]):
        series = series * y2 + coefficient
    small = np.abs(y) < threshold
    safe = np.where(small, 1.0, y)
    return np.where(small, series, np.sin(safe) / safe)


def midpoints_and_halves(intervals, center=0.0):
    """Float64 midpoints (relative to ``center``) and half-lengths of the intervals."""
    lefts, rights = intervals.to_arrays()
    return (lefts + rights) / 2 - center, (rights - lefts) / 2


def _block_size(components):
    chunk = get_config('QUADRATURE_CONFIG')['chunk_size']
    return max(1, (chunk * 64) // max(1, components))


def chi_hat_arrays(middles, halves, xi):
    """Transform from midpoint/half-length arrays; ``xi`` is a float64 array."""
    xi = np.asarray(xi, dtype=float)
    flat = xi.ravel()
    result = np.empty(flat.shape, dtype=complex)
    block = _block_size(len(middles))
    for start in range(0, flat.size, block):
        part = flat[start:start + block, None]
        contributions = 2 * halves * np.exp(-1j * part * middles) * sinc(part * halves)
        result[start:start + block] = contributions.sum(axis=1)
    return (INV_SQRT_2PI * result).reshape(xi.shape)


def chi_hat(intervals, xi):
    """
    Fourier transform of the characteristic function of an interval set.

    Args:
        intervals (IntervalSet): The set
        xi (float | array): Frequencies

    Returns:
        complex | numpy.ndarray: Same shape as ``xi``
    """
    middles, halves = midpoints_and_halves(intervals)
    values = chi_hat_arrays(middles, halves, np.atleast_1d(np.asarray(xi, dtype=float)))
    if np.ndim(xi) == 0:
        return complex(values[0])
    return values


def spectrum_samples(intervals, xi):
    """
    Rows (xi, Re chi_hat, Im chi_hat) for export.

    Returns:
        numpy.ndarray: Shape (len(xi), 3)
    """
    xi = np.asarray(xi, dtype=float).ravel()
    values = chi_hat(intervals, xi)
    return np.column_stack([xi, values.real, values.imag])
