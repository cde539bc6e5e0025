"""
Finite unions of disjoint closed intervals on the line.

Endpoints are ``Fraction`` values for exact sets and ``mpmath.mpf`` values for
float-backed sets (``precision_bits`` set). The set operations are measure
theoretic: isolated points produced by touching closed intervals are dropped.
"""

import bisect
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import mpmath
import numpy as np

from nullity_engine.exceptions import ParameterDomainError
from nullity_engine.utils.numeric import to_fraction, to_mpf

logger = logging.getLogger(__name__)


def _coerce(value, precision_bits):
    if precision_bits is None:
        return to_fraction(value)
    return to_mpf(value)


@dataclass(frozen=True)
class IntervalSet:
    """
    Sorted tuple of closed intervals ``(a_i, b_i)`` with ``b_i < a_{i+1}``.

    Use ``IntervalSet.from_pairs`` to build a set from unsorted or overlapping
    pairs; the constructor only validates.
    """

    intervals: tuple = ()
    precision_bits: int = None

    def __post_init__(self):
        previous_right = None
        for left, right in self.intervals:
            if left > right:
                raise ValueError(f"interval [{left}, {right}] has a > b")
            if previous_right is not None and not previous_right < left:
                raise ValueError("intervals must be sorted and pairwise disjoint")
            previous_right = right

    @classmethod
    def from_pairs(cls, pairs, precision_bits=None):
        """
        Normalize arbitrary pairs into a sorted disjoint set.

        Args:
            pairs (iterable): (a, b) pairs, any order, may overlap or touch
            precision_bits (int, optional): None for exact rational endpoints

        Returns:
            IntervalSet: Union of the pairs
        """
        coerced = sorted(
            (_coerce(a, precision_bits), _coerce(b, precision_bits)) for a, b in pairs
        )
        merged = []
        for left, right in coerced:
            if left > right:
                raise ValueError(f"interval [{left}, {right}] has a > b")
            if merged and left <= merged[-1][1]:
                if right > merged[-1][1]:
                    merged[-1] = (merged[-1][0], right)
            else:
                merged.append((left, right))
        return cls(tuple(merged), precision_bits)

    @classmethod
    def empty(cls, precision_bits=None):
        return cls((), precision_bits)

    @property
    def is_exact(self):
        return self.precision_bits is None

    def __len__(self):
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    @cached_property
    def _lefts(self):
        return [left for left, _ in self.intervals]

    def _zero(self):
        return Fraction(0) if self.is_exact else mpmath.mpf(0)

    def total_length(self):
        """Lebesgue measure, exact for rational endpoints."""
        return sum((right - left for left, right in self.intervals), self._zero())

    def span(self):
        """(min endpoint, max endpoint), or None for the empty set."""
        if not self.intervals:
            return None
        return self.intervals[0][0], self.intervals[-1][1]

    def shift(self, t):
        t = _coerce(t, self.precision_bits)
        return IntervalSet(
            tuple((left + t, right + t) for left, right in self.intervals),
            self.precision_bits,
        )

    def covers(self, x):
        """True when x lies in one of the closed intervals."""
        index = bisect.bisect_right(self._lefts, x) - 1
        return index >= 0 and x <= self.intervals[index][1]

    def contains(self, other):
        """True when every interval of ``other`` lies inside one interval of self."""
        first, second = _aligned(self, other)
        for left, right in second.intervals:
            index = bisect.bisect_right(first._lefts, left) - 1
            if index < 0 or right > first.intervals[index][1]:
                return False
        return True

    def union(self, other):
        return _combine(self, other, lambda in_a, in_b: in_a or in_b)

    def intersection(self, other):
        return _combine(self, other, lambda in_a, in_b: in_a and in_b)

    def symmetric_difference(self, other):
        return _combine(self, other, lambda in_a, in_b: in_a != in_b)

    def to_json(self):
        """
        JSON form of the set.

        Exact sets are an array of intervals, each a pair of ``[numerator,
        denominator]`` endpoints. Float-backed sets are an object with decimal
        string endpoints and their ``precision_bits``.
        """
        if self.is_exact:
            return [
                [[endpoint.numerator, endpoint.denominator] for endpoint in pair]
                for pair in self.intervals
            ]
        digits = _decimal_digits(self.precision_bits)
        return {
            'intervals': [
                [mpmath.nstr(endpoint, digits, strip_zeros=False) for endpoint in pair]
                for pair in self.intervals
            ],
            'precision_bits': self.precision_bits,
        }

    @classmethod
    def from_json(cls, data):
        """
        Inverse of ``to_json``.

        Raises:
            ParameterDomainError: malformed endpoints or intervals out of order
        """
        try:
            if isinstance(data, dict):
                bits = int(data['precision_bits'])
                with mpmath.workprec(bits):
                    pairs = [(mpmath.mpf(a), mpmath.mpf(b)) for a, b in data['intervals']]
                return cls(tuple(pairs), bits)
            pairs = [(Fraction(*a), Fraction(*b)) for a, b in data]
            return cls(tuple(pairs))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise ParameterDomainError('well-formed interval set', str(e)) from None

    def to_arrays(self):
        """Left and right endpoints as float64 arrays."""
        lefts = np.array([float(left) for left, _ in self.intervals], dtype=float)
        rights = np.array([float(right) for _, right in self.intervals], dtype=float)
        return lefts, rights


def _decimal_digits(bits):
    return math.ceil(bits * math.log10(2)) + 2


def _aligned(first, second):
    """Bring two sets to a common number kind (exact only if both are)."""
    if first.is_exact and second.is_exact:
        return first, second
    bits = max(b for b in (first.precision_bits, second.precision_bits) if b is not None)
    return _as_float_backed(first, bits), _as_float_backed(second, bits)


def _as_float_backed(interval_set, bits):
    if not interval_set.is_exact and interval_set.precision_bits == bits:
        return interval_set
    return IntervalSet(
        tuple((to_mpf(a), to_mpf(b)) for a, b in interval_set.intervals), bits
    )


def _combine(first, second, keep):
    first, second = _aligned(first, second)
    points = sorted(
        {x for pair in first.intervals for x in pair}
        | {x for pair in second.intervals for x in pair}
    )
    pieces = []
    for low, high in zip(points, points[1:]):
        middle = (low + high) / 2
        if not keep(first.covers(middle), second.covers(middle)):
            continue
        if pieces and pieces[-1][1] == low:
            pieces[-1] = (pieces[-1][0], high)
        else:
            pieces.append((low, high))
    return IntervalSet(tuple(pieces), first.precision_bits)


def shift(intervals, t):
    """Translate every interval by t."""
    return intervals.shift(t)


def symmetric_difference(first, second):
    """Points in exactly one of the operands, normalized disjoint."""
    return first.symmetric_difference(second)


def total_length(intervals):
    return intervals.total_length()
