"""
The Sobolev index (s, p) and tolerant comparisons against thresholds.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from nullity_engine.conf import get_config
from nullity_engine.exceptions import ParameterDomainError
from nullity_engine.utils.numeric import to_fraction


def as_number(value):
    """Keep rationals exact (ints and numeric strings become Fractions), floats as floats."""
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        return to_fraction(value)
    return float(value)


def compare(a, b, atol=None):
    """
    Sign of a - b; exact for rationals, with ``atol`` snapping otherwise.

    Returns:
        int: -1, 0 or 1
    """
    if isinstance(a, Rational) and isinstance(b, Rational):
        difference = Fraction(a) - Fraction(b)
        return (difference > 0) - (difference < 0)
    if atol is None:
        atol = get_config('CLASSIFIER_CONFIG')['threshold_atol']
    difference = float(a) - float(b)
    if abs(difference) <= atol:
        return 0
    return 1 if difference > 0 else -1


@dataclass(frozen=True)
class SobolevIndex:
    """
    A regularity s and integrability 1 < p < infinity.

    Rational inputs stay exact so that threshold equalities are decided
    exactly; float inputs are compared with the configured tolerance.
    """

    s: object
    p: object

    def __post_init__(self):
        p = self.p
        if isinstance(p, float) and not math.isfinite(p):
            raise ParameterDomainError('1 < p < inf', f"got p={p}")
        if not p > 1:
            raise ParameterDomainError('1 < p < inf', f"got p={p}")
        if isinstance(self.s, float) and not math.isfinite(self.s):
            raise ParameterDomainError('s finite', f"got s={self.s}")

    @classmethod
    def of(cls, s, p):
        return cls(as_number(s), as_number(p))

    @property
    def p_conj(self):
        return self.p / (self.p - 1)

    @property
    def is_exact(self):
        return isinstance(self.s, Rational) and isinstance(self.p, Rational)

    def delta_threshold(self, n):
        """-n/p', below which no non-empty set is null."""
        return -n / self.p_conj

    def interior_threshold(self, n):
        """n/p, above which nullity reduces to having empty interior."""
        return n / self.p

    def with_s(self, s):
        return SobolevIndex(as_number(s), self.p)
