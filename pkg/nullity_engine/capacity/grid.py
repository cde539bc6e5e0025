"""
Periodic spectral discretization of the H^{s,2} quadratic form on [-L, L).

Grid functions u_i = u(x_i), x_i = -L + i dx, dx = 2L/N. The form is
Q(u) = (dx/N) sum_k (1 + xi_k^2)^s |u_hat_k|^2 with xi_k = 2 pi fftfreq(N, dx),
the discrete counterpart of int (1 + xi^2)^s |u_hat(xi)|^2 dxi.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np
from scipy import fft

from nullity_engine.conf import get_config
from nullity_engine.exceptions import ParameterDomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpectralGrid:
    half_width: float
    points: int
    s: float
    workers: int = 1

    def __post_init__(self):
        if not self.half_width > 0:
            raise ParameterDomainError('L > 0', f"got L={self.half_width}")
        if self.points < 16 or self.points & (self.points - 1):
            raise ParameterDomainError('N >= 16 and a power of two', f"got N={self.points}")

    @cached_property
    def dx(self):
        return 2 * self.half_width / self.points

    @cached_property
    def x(self):
        return -self.half_width + self.dx * np.arange(self.points)

    @cached_property
    def xi(self):
        return 2 * np.pi * fft.fftfreq(self.points, self.dx)

    @cached_property
    def symbol(self):
        return (1 + self.xi**2) ** self.s

    def transform(self, u):
        return fft.fft(u, workers=self.workers)

    def quadratic_form(self, u):
        """Q(u), the discrete squared H^{s,2} norm."""
        u_hat = self.transform(u)
        return float(self.dx / self.points * np.sum(self.symbol * np.abs(u_hat) ** 2))

    def apply(self, u):
        """A u with Q(u) = u . A u; the gradient of Q is 2 A u."""
        return self.dx * np.real(fft.ifft(self.symbol * self.transform(u), workers=self.workers))

    def apply_inverse(self, r):
        return np.real(fft.ifft(self.transform(r) / self.symbol, workers=self.workers)) / self.dx

    def index_of(self, position):
        """Nearest grid index of a coordinate, wrapped periodically."""
        return int(np.rint((float(position) + self.half_width) / self.dx)) % self.points


def build_grid(half_width=None, points=None, s=0.0, workers=None):
    """
    Build a ``SpectralGrid``, missing values taken from CAPACITY_CONFIG.

    Args:
        half_width (float, optional): L
        points (int, optional): N, a power of two >= 16
        s (float): Regularity of the symbol
        workers (int, optional): FFT worker threads

    Returns:
        SpectralGrid: The grid
    """
    config = get_config('CAPACITY_CONFIG')
    grid = SpectralGrid(
        float(config['half_width'] if half_width is None else half_width),
        int(config['points'] if points is None else points),
        float(s),
        int(config['workers'] if workers is None else workers),
    )
    logger.debug(f"spectral grid L={grid.half_width}, N={grid.points}, s={grid.s}")
    return grid


class MaskKind(str, Enum):
    AT_LEAST_ONE = 'AtLeastOne'
    EQUAL_ONE = 'EqualOne'


@dataclass(frozen=True, eq=False)
class ConstraintMask:
    """
    Grid indices carrying the obstacle (u >= 1) or the constraint (u = 1).

    ``indices`` already includes the ``padding`` cells on each side.
    """

    indices: np.ndarray
    kind: MaskKind
    padding: int = 0

    def __post_init__(self):
        if self.indices.size == 0:
            raise ParameterDomainError('non-empty constraint mask')
        if self.padding < 0:
            raise ParameterDomainError('padding >= 0', f"got {self.padding}")

    def __len__(self):
        return int(self.indices.size)

    def as_bool(self, points):
        flags = np.zeros(points, dtype=bool)
        flags[self.indices] = True
        return flags

    def union(self, other):
        return ConstraintMask(np.union1d(self.indices, other.indices), self.kind, self.padding)

    def with_kind(self, kind):
        return ConstraintMask(self.indices, MaskKind(kind), self.padding)


def _pad(grid, flags, padding):
    padded = flags.copy()
    for step in range(1, padding + 1):
        padded |= np.roll(flags, step) | np.roll(flags, -step)
    return padded


def mask_from_intervals(grid, intervals, kind, padding=None):
    """
    Mask of the grid points in the closed intervals, dilated by ``padding`` cells.

    An interval narrower than the grid spacing still marks its nearest point.
    """
    if padding is None:
        padding = get_config('CAPACITY_CONFIG')['padding']
    flags = np.zeros(grid.points, dtype=bool)
    for left, right in intervals:
        left, right = float(left), float(right)
        if left < -grid.half_width or right >= grid.half_width:
            raise ParameterDomainError('intervals inside [-L, L)', f"got [{left}, {right}]")
        inside = (grid.x >= left) & (grid.x <= right)
        if not inside.any():
            inside[grid.index_of((left + right) / 2)] = True
        flags |= inside
    flags = _pad(grid, flags, padding)
    return ConstraintMask(np.flatnonzero(flags), MaskKind(kind), padding)


def mask_from_ball(grid, center, radius, kind, padding=None):
    """Mask of the one-dimensional ball [center - radius, center + radius]."""
    center, radius = float(center), float(radius)
    if not radius > 0:
        raise ParameterDomainError('radius > 0', f"got {radius}")
    return mask_from_intervals(grid, [(center - radius, center + radius)], kind, padding)


def quadratic_form(grid, u):
    return grid.quadratic_form(np.asarray(u, dtype=float))


def apply_operator(grid, u):
    return grid.apply(np.asarray(u, dtype=float))
