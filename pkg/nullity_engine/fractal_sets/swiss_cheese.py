"""
Swiss-cheese sets: a bounded open box with countably many open balls removed,
stored as a finite cloud of balls with multiplicities.
"""

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import cached_property

import mpmath

from nullity_engine.exceptions import ParameterDomainError
from nullity_engine.fractal_sets.families import CantorFamily
from nullity_engine.utils.numeric import to_fraction, to_mpf

logger = logging.getLogger(__name__)


def _coerce(value):
    if isinstance(value, mpmath.mpf):
        return value
    return to_fraction(value)


def _point(value):
    if isinstance(value, (list, tuple)):
        return tuple(_coerce(x) for x in value)
    return (_coerce(value),)


def ball_volume(n, radius):
    """Lebesgue measure of an n-dimensional ball, pi^{n/2} r^n / Gamma(n/2 + 1)."""
    return mpmath.power(mpmath.pi, mpmath.mpf(n) / 2) * to_mpf(radius) ** n / mpmath.gamma(
        mpmath.mpf(n) / 2 + 1
    )


@dataclass(frozen=True)
class Box:
    lower: tuple
    upper: tuple

    @property
    def dimension(self):
        return len(self.lower)

    @property
    def volume(self):
        volume = Fraction(1)
        for low, high in zip(self.lower, self.upper):
            volume *= high - low
        return volume

    def contains_ball(self, ball):
        return all(
            low <= c - ball.radius and c + ball.radius <= high
            for low, high, c in zip(self.lower, self.upper, ball.center)
        )


@dataclass(frozen=True)
class Ball:
    center: tuple
    radius: object


@dataclass(frozen=True)
class BallCloud:
    """
    A finite Swiss-cheese truncation.

    Attributes:
        n (int): Ambient dimension
        domain (Box): Bounding open box
        centers (tuple): Ball centers, one point per entry
        radii (tuple): Ball radii in (0, 1]
        multiplicities (tuple): How many balls of each radius the entry stands for
        inner_ball (Ball): Ball of radius r <= 1 contained in the domain
        dense_centers (bool): Caller's claim that the full construction uses a
            dense set of centers, so that the set has empty interior. Not checked.
    """

    n: int
    domain: Box
    centers: tuple
    radii: tuple
    multiplicities: tuple
    inner_ball: Ball
    dense_centers: bool = False

    @property
    def ball_count(self):
        return sum(self.multiplicities)

    @cached_property
    def total_ball_measure(self):
        return mpmath.fsum(
            m * ball_volume(self.n, r) for r, m in zip(self.radii, self.multiplicities)
        )

    @cached_property
    def positive_measure(self):
        """True when the removed balls cannot exhaust the closed domain."""
        return self.total_ball_measure < to_mpf(self.domain.volume)

    def radius_power_sum(self, exponent):
        """Sum over balls of r_i^exponent, counting multiplicity."""
        exponent = to_mpf(exponent)
        return mpmath.fsum(
            m * mpmath.power(to_mpf(r), exponent)
            for r, m in zip(self.radii, self.multiplicities)
        )

    def log_power_sum(self, c, p):
        """Sum over balls of (log(c / r_i))^{1-p}, counting multiplicity."""
        c, p = to_mpf(c), to_mpf(p)
        return mpmath.fsum(
            m * mpmath.power(mpmath.log(c / to_mpf(r)), 1 - p)
            for r, m in zip(self.radii, self.multiplicities)
        )

    def without_ball(self, index):
        """The cloud with one ball of entry ``index`` removed."""
        if not 0 <= index < len(self.radii):
            raise IndexError(f"ball entry {index} out of range")
        multiplicities = list(self.multiplicities)
        multiplicities[index] -= 1
        if multiplicities[index]:
            return replace(self, multiplicities=tuple(multiplicities))

        def drop(values):
            return values[:index] + values[index + 1:]

        return replace(
            self,
            centers=drop(self.centers),
            radii=drop(self.radii),
            multiplicities=drop(tuple(multiplicities)),
        )


def make_swiss_cheese(domain, centers, radii, inner_ball, multiplicities=None,
                      dense_centers=False):
    """
    Build a ``BallCloud`` and flag whether its measure is certainly positive.

    Args:
        domain (Box | tuple): Box, or ``(lower, upper)`` with scalars for n = 1
        centers (list): Ball centers (scalars for n = 1)
        radii (list): Ball radii, each in (0, 1]
        inner_ball (Ball | tuple): ``(center, radius)`` with radius in (0, 1]
        multiplicities (list, optional): Defaults to one per ball
        dense_centers (bool): Recorded as given

    Returns:
        BallCloud: The validated cloud

    Raises:
        ParameterDomainError: for a radius outside (0, 1] or an inner ball
            leaving the domain
    """
    if not isinstance(domain, Box):
        lower, upper = domain
        domain = Box(_point(lower), _point(upper))
    n = domain.dimension
    if any(not low < high for low, high in zip(domain.lower, domain.upper)):
        raise ParameterDomainError('domain lower < upper', f"got {domain}")

    centers = tuple(_point(center) for center in centers)
    radii = tuple(_coerce(r) for r in radii)
    if multiplicities is None:
        multiplicities = (1,) * len(radii)
    multiplicities = tuple(int(m) for m in multiplicities)
    if not len(centers) == len(radii) == len(multiplicities):
        raise ParameterDomainError('one center and multiplicity per radius')
    if any(len(center) != n for center in centers):
        raise ParameterDomainError(f"centers have dimension {n}")
    if any(m < 1 for m in multiplicities):
        raise ParameterDomainError('multiplicities >= 1')
    for r in radii:
        if not 0 < r <= 1:
            raise ParameterDomainError('0 < r_i <= 1', f"got {r}")

    if not isinstance(inner_ball, Ball):
        center, radius = inner_ball
        inner_ball = Ball(_point(center), _coerce(radius))
    if not 0 < inner_ball.radius <= 1:
        raise ParameterDomainError('0 < r <= 1 for the inner ball', f"got {inner_ball.radius}")
    if len(inner_ball.center) != n or not domain.contains_ball(inner_ball):
        raise ParameterDomainError('inner ball inside the domain', f"got {inner_ball}")

    cloud = BallCloud(n, domain, centers, radii, multiplicities, inner_ball, dense_centers)
    if not cloud.positive_measure:
        logger.info(
            f"ball measure {mpmath.nstr(cloud.total_ball_measure, 8)} reaches the domain "
            f"measure {domain.volume}; positive measure is undetermined"
        )
    return cloud


def fat_cantor_cheese(spec, depth):
    """
    Export a fat Cantor set truncated at stage J as a Swiss cheese in (0, 1).

    Stage j removes 2^{j-1} intervals of radius (beta/2) alpha^{j-1}; each stage
    becomes one cloud entry with that multiplicity, centred on the first
    removed interval.
    """
    if spec.family is not CantorFamily.FAT:
        raise ParameterDomainError('fat Cantor family', f"got {spec.family.label}")
    if depth < 1:
        raise ParameterDomainError('J >= 1', f"got J={depth}")
    alpha, beta = spec.param('alpha'), spec.param('beta')
    centers, radii, multiplicities = [], [], []
    for j in range(1, depth + 1):
        centers.append(spec.length(j - 1) / 2)
        radii.append(beta / 2 * alpha ** (j - 1))
        multiplicities.append(2 ** (j - 1))
    return make_swiss_cheese(
        (0, 1), centers, radii, (Fraction(1, 2), Fraction(1, 2)), multiplicities,
        dense_centers=True,
    )
