"""
Thresholds of Cartesian and tensor products.
"""

from typing import NamedTuple

from nullity_engine.classification.index import SobolevIndex, as_number, compare
from nullity_engine.exceptions import ParameterDomainError


class ProductBounds(NamedTuple):
    s_minus: object
    s_plus: object


def product_bounds(s1, s2, n1, n2, p, positive_measure):
    """
    Bounds s_minus <= s_{E1 x E2}(p) <= s_plus on the product threshold.

    Args:
        s1 (number): Threshold of E1 in R^{n1}
        s2 (number): Threshold of E2 in R^{n2}
        n1 (int): Dimension of the first factor
        n2 (int): Dimension of the second factor
        p (number): Integrability
        positive_measure (bool): Whether E1 x E2 has positive measure

    Returns:
        ProductBounds: (s_minus, s_plus)
    """
    s1, s2 = as_number(s1), as_number(s2)
    p = SobolevIndex.of(0, p).p
    s_minus = min(s1, s2, s1 + s2)
    if positive_measure:
        s_plus = min(s1 + n2 / p, s2 + n1 / p)
    else:
        s_plus = min(s1, s2)
    return ProductBounds(s_minus, s_plus)


def _check_list(values):
    values = [as_number(v) for v in values]
    if not values:
        raise ParameterDomainError('non-empty list of regularities')
    return values


def tensor_lower(values):
    """
    max{0, min s_j} + sum min{0, s_j}: the least sum over non-empty subsets.
    """
    values = _check_list(values)
    return max(0, min(values)) + sum(min(0, v) for v in values)


def tensor_upper(values):
    """
    min{0, max s_j} + sum max{0, s_j}: the largest sum over non-empty subsets.
    """
    values = _check_list(values)
    return min(0, max(values)) + sum(max(0, v) for v in values)


class NullityTransfer(NamedTuple):
    t: object
    inclusive: bool

    def admits(self, value):
        side = compare(value, self.t)
        return side > 0 or (self.inclusive and side == 0)


def factor_nullity_transfer(s, n2, p):
    """
    Where E1 x E2 is null given that E1 is (s,p)-null, for any E2 in R^{n2}.

    The product is (t,p)-null for t >= t0 when ``inclusive`` and for t > t0
    otherwise: t0 = s + n2/p for s > 0 (inclusive only for p <= 2), and
    t0 = s for s <= 0 (inclusive only at s = 0).
    """
    s = as_number(s)
    p = SobolevIndex.of(s, p).p
    if not isinstance(n2, int) or n2 < 1:
        raise ParameterDomainError('n2 is a positive integer', f"got {n2!r}")
    sign = compare(s, 0)
    if sign > 0:
        return NullityTransfer(s + n2 / p, compare(p, 2) <= 0)
    if sign == 0:
        return NullityTransfer(s, True)
    return NullityTransfer(s, False)
