"""
Conversions between the three number kinds the engine works with: exact
``Fraction`` values, ``mpmath.mpf`` high-precision floats and numpy float64.
"""

import math
from fractions import Fraction
from numbers import Rational

import mpmath


def to_fraction(value):
    """
    Convert a user-supplied number to an exact rational.

    Floats are read through their decimal representation so that ``0.9``
    becomes ``9/10`` rather than the nearest binary fraction.

    Args:
        value (int | float | str | Fraction): Number to convert

    Returns:
        Fraction: Exact value
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite value {value!r}")
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, mpmath.mpf):
        return Fraction(str(value))
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def to_mpf(value):
    """Convert an exact or float value to ``mpmath.mpf`` at the working precision."""
    if isinstance(value, mpmath.mpf):
        return value
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    if isinstance(value, Rational):
        return mpmath.mpf(int(value))
    return mpmath.mpf(value)


def log2_of(value):
    """log2 of a positive exact or float value, computed without overflow."""
    if isinstance(value, Fraction):
        return mpmath.log(value.numerator, 2) - mpmath.log(value.denominator, 2)
    return mpmath.log(to_mpf(value), 2)


def format_number(value):
    """
    Render a number for tabular output: rationals as ``p/q`` strings, floats at
    17 significant digits.
    """
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, mpmath.mpf):
        return mpmath.nstr(value, 17, strip_zeros=False)
    if isinstance(value, float):
        if math.isinf(value):
            return 'inf' if value > 0 else '-inf'
        if math.isnan(value):
            return 'nan'
        return format(value, '.17g')
    return str(value)
