"""
Non-nullity certificates for fat Cantor sets and Swiss-cheese sets.

The cheese conditions compare the ball radii against the inner ball through
constants that depend on (s, p, n) and are not known in closed form; they
are always supplied by the caller.
"""

import logging
import math
from dataclasses import dataclass

import mpmath

from nullity_engine.classification.index import as_number, compare
from nullity_engine.classification.verdicts import Justification, NullityVerdict
from nullity_engine.exceptions import ParameterDomainError
from nullity_engine.utils.numeric import to_mpf

logger = logging.getLogger(__name__)


def _check_alpha(alpha):
    if not 0 < alpha < 0.5:
        raise ParameterDomainError('0 < alpha < 1/2', f"got alpha={alpha}")


def fat_threshold(alpha, p):
    """
    s_{alpha,p} = (1/p)(1 + log 2 / log alpha), always in (0, 1/p).

    Args:
        alpha (number): Fat Cantor ratio in (0, 1/2)
        p (number): Integrability

    Returns:
        float: The regularity below which the fat-Cantor certificate applies
    """
    _check_alpha(alpha)
    p = float(p)
    if not p > 1:
        raise ParameterDomainError('1 < p < inf', f"got p={p}")
    return (1 + 1 / math.log2(float(alpha))) / p


def fat_beta_range(alpha, s, p, ratio_ab=1):
    """
    Largest beta for which the fat Cantor set is certified not (s,p)-null.

    Args:
        alpha (number): In (0, 1/2)
        s (number): 0 < s < s_{alpha,p}
        p (number): Integrability
        ratio_ab (number): The ball-capacity constant ratio A/B in (0, 1]

    Returns:
        float: ratio_ab^{1/(1-sp)} (1 - 2 alpha^{1-sp})^{1/(1-sp)}
    """
    threshold = fat_threshold(alpha, p)
    s, p, ratio_ab = float(s), float(p), float(ratio_ab)
    if not 0 < ratio_ab <= 1:
        raise ParameterDomainError('0 < A/B <= 1', f"got {ratio_ab}")
    if not 0 < s < threshold:
        raise ParameterDomainError(
            f"0 < s < s_alpha_p = {threshold:.6g}", f"got s={s}; the certificate is vacuous"
        )
    exponent = 1 - s * p
    return (ratio_ab * (1 - 2 * float(alpha) ** exponent)) ** (1 / exponent)


@dataclass(frozen=True)
class SuperFatParameters:
    """
    Admissible super-fat Cantor parameters at s = 1/p, n = 1.

    ``delta_min`` bounds delta from below (strictly); ``gamma_max(delta)``
    gives the largest admissible gamma for a chosen delta.
    """

    p: float
    c: float
    C: float
    delta_min: float

    def gamma_max(self, delta):
        delta = float(delta)
        if not delta > self.delta_min:
            raise ParameterDomainError(
                f"delta > delta_min = {self.delta_min:.6g}", f"got delta={delta}"
            )
        inner = (1 - 2 * delta ** (1 - self.p)) / self.C**2
        exponent = -(inner ** (1 / (1 - self.p)))
        gamma = (2 * self.c) ** exponent
        if not 0 < gamma < 1:
            raise ParameterDomainError('gamma_max < 1', f"got {gamma}")
        return gamma


def superfat_params(p, c, C):
    """
    delta_min = 2^{1/(p-1)} and the map delta -> gamma_max(delta).

    Args:
        p (number): Integrability, p > 1
        c (number): Logarithmic capacity constant, c > 1
        C (number): Two-sided capacity constant, C >= 1

    Returns:
        SuperFatParameters: with a ``gamma_max`` method
    """
    p, c, C = float(p), float(c), float(C)
    if not p > 1:
        raise ParameterDomainError('1 < p < inf', f"got p={p}")
    if not c > 1:
        raise ParameterDomainError('c > 1', f"got c={c}")
    if not C >= 1:
        raise ParameterDomainError('C >= 1', f"got C={C}")
    return SuperFatParameters(p, c, C, 2 ** (1 / (p - 1)))


@dataclass(frozen=True)
class CheeseSums:
    lhs: object
    rhs: object
    condition: str

    @property
    def holds(self):
        return self.lhs < self.rhs


def cheese_sums(cloud, index, constants):
    """
    Both sides of the Swiss-cheese non-nullity condition.

    For 0 < s < n/p: sum m_i r_i^{n-sp} against (A/B) r^{n-sp}.
    For s = n/p: sum m_i (log(c/r_i))^{1-p} against (log(c/r))^{1-p} / C^2.

    Args:
        cloud (BallCloud): The cheese
        index (SobolevIndex): (s, p)
        constants (dict): ``A`` and ``B`` (or ``ratio_ab``) for s < n/p,
            ``c`` and ``C`` for s = n/p

    Returns:
        CheeseSums: left side, right side and which condition was used
    """
    n = cloud.n
    s, p = index.s, index.p
    upper = n / p
    side = compare(s, upper)
    if compare(s, 0) <= 0 or side > 0:
        raise ParameterDomainError('0 < s <= n/p', f"got s={s}, n/p={float(upper):.6g}")
    r = cloud.inner_ball.radius

    if side < 0:
        if 'ratio_ab' in constants:
            ratio = to_mpf(as_number(constants['ratio_ab']))
        else:
            try:
                ratio = to_mpf(as_number(constants['A'])) / to_mpf(as_number(constants['B']))
            except KeyError:
                raise ParameterDomainError('constants A and B (or ratio_ab) for s < n/p') from None
        exponent = to_mpf(n - s * p)
        lhs = cloud.radius_power_sum(exponent)
        rhs = ratio * mpmath.power(to_mpf(r), exponent)
        return CheeseSums(lhs, rhs, 'power')

    try:
        c, big_c = to_mpf(as_number(constants['c'])), to_mpf(as_number(constants['C']))
    except KeyError:
        raise ParameterDomainError('constants c and C for s = n/p') from None
    if not c > 1:
        raise ParameterDomainError('c > 1', f"got c={c}")
    p_mpf = to_mpf(p)
    lhs = cloud.log_power_sum(c, p_mpf)
    rhs = mpmath.power(mpmath.log(c / to_mpf(r)), 1 - p_mpf) / big_c**2
    return CheeseSums(lhs, rhs, 'logarithmic')


def cheese_certificate(cloud, index, constants):
    """True when the cloud is certified not (s,p)-null (strict inequality)."""
    sums = cheese_sums(cloud, index, constants)
    logger.debug(f"cheese {sums.condition} condition: {sums.lhs} < {sums.rhs} is {sums.holds}")
    return sums.holds


def cheese_verdict(cloud, index, constants):
    context = {'s': index.s, 'p': index.p, 'family': 'swiss_cheese'}
    sums = cheese_sums(cloud, index, constants)
    if sums.holds:
        return NullityVerdict.not_null(
            Justification.CHEESE_CERTIFICATE,
            f"{sums.condition} sum {mpmath.nstr(sums.lhs, 10)} < {mpmath.nstr(sums.rhs, 10)}",
            **context,
        )
    return NullityVerdict.unknown("the cheese sum condition fails; nothing is certified",
                                  **context)


def fat_cheese_sum(alpha, beta, s, p, depth=None):
    """
    Closed form of sum r_i^{1-sp} over the balls of a fat Cantor cheese.

    Stage j has 2^{j-1} balls of radius (beta/2) alpha^{j-1}, so the sum up to
    stage J is (beta/2)^x (1 - q^J)/(1 - q) with x = 1 - sp, q = 2 alpha^x.
    Without ``depth`` the full series is summed, which needs q < 1.
    """
    alpha, beta = to_mpf(as_number(alpha)), to_mpf(as_number(beta))
    exponent = 1 - to_mpf(as_number(s)) * to_mpf(as_number(p))
    ratio = 2 * mpmath.power(alpha, exponent)
    head = mpmath.power(beta / 2, exponent)
    if depth is None:
        if not ratio < 1:
            return mpmath.inf
        return head / (1 - ratio)
    if ratio == 1:
        return head * depth
    return head * (1 - mpmath.power(ratio, depth)) / (1 - ratio)
