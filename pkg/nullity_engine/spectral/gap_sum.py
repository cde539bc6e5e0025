"""
The gap-sum criterion for membership of chi_E in H^{s,2}, and its closed
forms for fat Cantor sets.

With Gap_j = l_{j-1} - 2 l_j and T_j = sum_{k>=j} 2^k Gap_k, the terms are
Gap_{j-1}^{2-2s} / Gap_j^2 * T_j for j >= 2. A finite sum places chi_E in
H^{s,2}, so a positive-measure E is not (s,2)-null.
"""

import logging
import math
from dataclasses import dataclass

import mpmath

from nullity_engine.exceptions import HypothesisError, ParameterDomainError
from nullity_engine.fractal_sets.cantor import gap, measure_limit
from nullity_engine.fractal_sets.families import CantorFamily
from nullity_engine.utils.numeric import to_mpf

logger = logging.getLogger(__name__)

# c_1 = 1/(1 - cos 1), the constant in |1 - e^{it}|^2 >= (t^2)/c_1 on |t| <= 1
DEFAULT_C1 = 1 / (1 - math.cos(1))


@dataclass(frozen=True)
class GapSumResult:
    """
    Terms j = 2..J, their partial sums and, for truncated tails, the bound
    on the neglected part of each T_j.
    """

    terms: tuple
    partial_sums: tuple
    tail_bound: object = 0

    @property
    def first_index(self):
        return 2

    def ratios(self):
        return tuple(later / earlier for earlier, later in zip(self.terms, self.terms[1:]))


def _check_hypotheses(spec, depth):
    previous_gap = None
    for j in range(1, depth + 1):
        current_gap = gap(spec, j)
        if not current_gap < spec.length(j):
            raise HypothesisError(f"Gap_{j} = {current_gap} is not below l_{j} = {spec.length(j)}")
        if previous_gap is not None and not current_gap < previous_gap:
            raise HypothesisError(f"gaps are not strictly decreasing at j={j}")
        previous_gap = current_gap


def _tail_sums(spec, depth, use_closed_form):
    """T_j for j = 2..J as mpf, with the bound on what truncation leaves out."""
    if use_closed_form and spec.family is CantorFamily.FAT:
        alpha, beta = to_mpf(spec.param('alpha')), to_mpf(spec.param('beta'))
        tails = {
            j: beta / alpha * mpmath.power(2 * alpha, j) / (1 - 2 * alpha)
            for j in range(2, depth + 1)
        }
        return tails, mpmath.mpf(0)
    # telescoping: sum_{k=j}^{K} 2^k Gap_k = 2^j l_{j-1} - 2^{K+1} l_K
    limit = measure_limit(spec, 1)
    if limit.closed_form:
        mass = to_mpf(limit.value)
        bound = mpmath.mpf(0)
    else:
        last = spec.max_depth
        mass = to_mpf(2**last * spec.length(last))
        bound = 2 * mass
    tails = {
        j: to_mpf(2**j * spec.length(j - 1)) - 2 * mass for j in range(2, depth + 1)
    }
    return tails, bound


def gap_sum_terms(spec, s, depth, use_closed_form=True):
    """
    Terms and partial sums of the gap-sum series up to index J.

    Args:
        spec (CantorSpec): Length sequence with Gap_j < l_j and decreasing gaps
        s (float): Regularity, s > 0
        depth (int): Last index J >= 2
        use_closed_form (bool): Use the geometric tail for fat Cantor sets

    Returns:
        GapSumResult: Terms j = 2..J as ``mpf``

    Raises:
        HypothesisError: when the gap hypotheses fail
    """
    if not float(s) > 0:
        raise ParameterDomainError('s > 0', f"got s={s}")
    if depth < 2:
        raise ParameterDomainError('J >= 2', f"got J={depth}")
    if spec.max_depth is not None and depth > spec.max_depth:
        raise ParameterDomainError(f"J <= {spec.max_depth}", 'explicit sequence is shorter')
    _check_hypotheses(spec, depth)

    s = to_mpf(s)
    tails, bound = _tail_sums(spec, depth, use_closed_form)
    terms, partial_sums = [], []
    total = mpmath.mpf(0)
    for j in range(2, depth + 1):
        previous_gap, current_gap = to_mpf(gap(spec, j - 1)), to_mpf(gap(spec, j))
        term = mpmath.power(previous_gap, 2 - 2 * s) / current_gap**2 * tails[j]
        total += term
        terms.append(term)
        partial_sums.append(total)
    logger.debug(f"gap sum up to J={depth}: {mpmath.nstr(total, 12)}")
    return GapSumResult(tuple(terms), tuple(partial_sums), bound)


def fat_gap_sum_term(alpha, beta, s, j):
    """Closed form [beta^{1-2s} alpha^{4s-3} / (1-2 alpha)] (2 alpha^{1-2s})^j."""
    alpha, beta, s = to_mpf(alpha), to_mpf(beta), to_mpf(s)
    head = mpmath.power(beta, 1 - 2 * s) * mpmath.power(alpha, 4 * s - 3) / (1 - 2 * alpha)
    return head * mpmath.power(2 * mpmath.power(alpha, 1 - 2 * s), j)


def fat_gap_ratio(alpha, s, atol=1e-12):
    """
    Ratio 2 alpha^{1-2s} of consecutive fat gap-sum terms, exactly 1 at the
    threshold s = s_{alpha,2}.
    """
    exponent = 1 - (1 - 2 * float(s)) * math.log2(1 / float(alpha))
    if abs(exponent) <= atol:
        return 1.0
    return 2.0**exponent


@dataclass(frozen=True)
class MembershipBound:
    value: float
    ratio: float
    divergent: bool


def fat_membership_bound(alpha, beta, s, c1=None):
    """
    Majorant of ||chi_E||^2 contributions from the gap sum for fat Cantor sets:
    2^{s+1} c1 beta^{1-2s} / (alpha^{3-4s}(1-2 alpha)) * sum_{j>=2} r^j,
    r = 2 alpha^{1-2s}. Divergent when r >= 1.
    """
    c1 = DEFAULT_C1 if c1 is None else float(c1)
    alpha, beta, s = float(alpha), float(beta), float(s)
    ratio = fat_gap_ratio(alpha, s)
    if ratio >= 1:
        return MembershipBound(math.inf, ratio, True)
    head = 2 ** (s + 1) * c1 * beta ** (1 - 2 * s) / (alpha ** (3 - 4 * s) * (1 - 2 * alpha))
    return MembershipBound(head * ratio**2 / (1 - ratio), ratio, False)


def low_frequency_bound(spec, s, depth):
    """(1 + Gap_1^{-2})^s |E_J|: the part of the norm below the first gap frequency."""
    first_gap = to_mpf(gap(spec, 1))
    measure = to_mpf(2**depth * spec.length(depth))
    return float(mpmath.power(1 + first_gap**-2, s) * measure)
