"""
The named Cantor-set families and their parameter rules.

Every family is a sequence of interval lengths l_j with l_0 = 1 and
0 < l_{j+1} < l_j / 2. Besides the constraint checks this module records,
for the families with a closed form, the asymptotic shape of
L_j = log2(1/l_j) (``GrowthProfile``). The classifier reads the convergence
class of the nullity series from that shape instead of summing terms.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import mpmath

from nullity_engine.exceptions import ParameterDomainError
from nullity_engine.utils.numeric import to_mpf

logger = logging.getLogger(__name__)


class CantorFamily(str, Enum):
    GEOMETRIC = 'geometric'
    E_ZERO = 'e_zero'
    E_D = 'e_d'
    F_ZERO_ONE = 'f_zero_one'
    F_ZERO_PSTAR = 'f_zero_pstar'
    F_ZERO_INF = 'f_zero_inf'
    F_D_ONE = 'f_d_one'
    F_D_PSTAR = 'f_d_pstar'
    F_D_INF = 'f_d_inf'
    F_N_INF = 'f_n_inf'
    FAT = 'fat'
    SUPER_FAT = 'super_fat'
    EXPLICIT = 'explicit'

    @property
    def label(self):
        return _LABELS[self]

    @property
    def required_params(self):
        return REQUIRED_PARAMS[self]

    @property
    def is_zoo(self):
        return self in ZOO_FAMILIES


_LABELS = {
    CantorFamily.GEOMETRIC: 'Geometric(rho)',
    CantorFamily.E_ZERO: 'E(0,p*)',
    CantorFamily.E_D: 'E(d,p*)',
    CantorFamily.F_ZERO_ONE: 'F(0,1)',
    CantorFamily.F_ZERO_PSTAR: 'F(0,p*)',
    CantorFamily.F_ZERO_INF: 'F(0,inf)',
    CantorFamily.F_D_ONE: 'F(d,1)',
    CantorFamily.F_D_PSTAR: 'F(d,p*)',
    CantorFamily.F_D_INF: 'F(d,inf)',
    CantorFamily.F_N_INF: 'F(n,inf)',
    CantorFamily.FAT: 'FatCantor(alpha,beta)',
    CantorFamily.SUPER_FAT: 'SuperFatCantor(gamma,delta)',
    CantorFamily.EXPLICIT: 'Explicit',
}

REQUIRED_PARAMS = {
    CantorFamily.GEOMETRIC: ('ratio',),
    CantorFamily.E_ZERO: ('p_star',),
    CantorFamily.E_D: ('d', 'p_star'),
    CantorFamily.F_ZERO_ONE: (),
    CantorFamily.F_ZERO_PSTAR: ('p_star',),
    CantorFamily.F_ZERO_INF: (),
    CantorFamily.F_D_ONE: ('d',),
    CantorFamily.F_D_PSTAR: ('d', 'p_star'),
    CantorFamily.F_D_INF: ('d',),
    CantorFamily.F_N_INF: (),
    CantorFamily.FAT: ('alpha', 'beta'),
    CantorFamily.SUPER_FAT: ('gamma', 'delta'),
    CantorFamily.EXPLICIT: ('lengths',),
}

# The nine rows of the zoo: every nullity behaviour at the threshold
ZOO_FAMILIES = frozenset({
    CantorFamily.E_ZERO,
    CantorFamily.E_D,
    CantorFamily.F_ZERO_ONE,
    CantorFamily.F_ZERO_PSTAR,
    CantorFamily.F_ZERO_INF,
    CantorFamily.F_D_ONE,
    CantorFamily.F_D_PSTAR,
    CantorFamily.F_D_INF,
    CantorFamily.F_N_INF,
})

POSITIVE_MEASURE_FAMILIES = frozenset({CantorFamily.FAT, CantorFamily.SUPER_FAT})


def check_params(family, params, n):
    """
    Reject parameters outside the family's domain.

    Args:
        family (CantorFamily): Family being built
        params (dict): Parameter values, already converted to Fraction
        n (int): Ambient product dimension

    Raises:
        ParameterDomainError: naming the violated constraint
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParameterDomainError('n is a positive integer', f"got {n!r}")

    missing = [name for name in family.required_params if name not in params]
    if missing:
        raise ParameterDomainError(
            f"{family.label} needs {', '.join(family.required_params) or 'no parameters'}",
            f"missing {', '.join(missing)}",
        )
    unknown = sorted(set(params) - set(family.required_params))
    if unknown:
        raise ParameterDomainError(
            f"{family.label} takes only {', '.join(family.required_params) or 'no parameters'}",
            f"unexpected {', '.join(unknown)}",
        )

    if 'p_star' in params and not params['p_star'] > 1:
        raise ParameterDomainError('1 < p_star', f"got {params['p_star']}")
    if 'd' in params and not 0 < params['d'] < n:
        raise ParameterDomainError('0 < d < n', f"got d={params['d']}, n={n}")

    if family is CantorFamily.GEOMETRIC and not 0 < params['ratio'] < Fraction(1, 2):
        raise ParameterDomainError('0 < ratio < 1/2', f"got {params['ratio']}")
    if family is CantorFamily.FAT:
        alpha, beta = params['alpha'], params['beta']
        if not 0 < alpha < Fraction(1, 2):
            raise ParameterDomainError('0 < alpha < 1/2', f"got {alpha}")
        if not 0 < beta < 1 - 2 * alpha:
            raise ParameterDomainError('0 < beta < 1 - 2*alpha', f"got beta={beta}")
    if family is CantorFamily.SUPER_FAT:
        if not 0 < params['gamma'] < 1:
            raise ParameterDomainError('0 < gamma < 1', f"got {params['gamma']}")
        if not params['delta'] > 1:
            raise ParameterDomainError('delta > 1', f"got {params['delta']}")
    if family is CantorFamily.EXPLICIT:
        _check_explicit(params['lengths'])


def _check_explicit(lengths):
    if not lengths:
        raise ParameterDomainError('l_0 = 1', 'empty length list')
    if lengths[0] != 1:
        raise ParameterDomainError('l_0 = 1', f"got {lengths[0]}")
    for j, (current, following) in enumerate(zip(lengths, lengths[1:])):
        if not following > 0:
            raise ParameterDomainError(f"0 < l_{j + 1}", f"got {following}")
        if not following < current / 2:
            raise ParameterDomainError(
                f"l_{j + 1} < l_{j}/2", f"l_{j + 1}={following}, l_{j}={current}"
            )


def _f_zero_pstar_increment(j, kappa):
    return mpmath.power(2, (j + 1) * kappa) / (j + 1) ** 2 - mpmath.power(2, j * kappa) / j**2


def find_j0_f_zero_pstar(n, p_star, scan_limit):
    """
    Smallest j >= 1 with 2^{(j+1)k}/(j+1)^2 - 2^{jk}/j^2 > 1, k = n(p*-1).

    Raises:
        ParameterDomainError: when no such j exists below ``scan_limit``
    """
    kappa = n * to_mpf(p_star - 1)
    for j in range(1, scan_limit + 1):
        if _f_zero_pstar_increment(j, kappa) > 1:
            logger.debug(f"F(0,p*) offset j0={j} for n={n}, p*={p_star}")
            return j
    raise ParameterDomainError(
        f"j0 <= {scan_limit}", f"no F(0,p*) offset found for n={n}, p*={p_star}"
    )


def _log_weight(x):
    return x * mpmath.log(x) ** 2


def find_j0_f_d_pstar(n, d, p_star, scan_limit):
    """
    Smallest j >= 2 with both
    (j+1)ln^2(j+1) / (j ln^2 j) < 2^{(n-d)(p*-1)} and
    2^{-jn(p*-1)} (j+1) ln^2(j+1) < 2^{(n-d)(p*-1)}.
    """
    bound = mpmath.power(2, to_mpf((n - d) * (p_star - 1)))
    decay = to_mpf(n * (p_star - 1))
    for j in range(2, scan_limit + 1):
        ratio_ok = _log_weight(j + 1) / _log_weight(j) < bound
        size_ok = mpmath.power(2, -j * decay) * _log_weight(j + 1) < bound
        if ratio_ok and size_ok:
            logger.debug(f"F(d,p*) offset j0={j} for n={n}, d={d}, p*={p_star}")
            return j
    raise ParameterDomainError(
        f"j0 <= {scan_limit}", f"no F(d,p*) offset found for n={n}, d={d}, p*={p_star}"
    )


@dataclass(frozen=True)
class GrowthProfile:
    """
    Leading behaviour of L_j = log2(1/l_j) as j grows.

    The fields are the coefficients of
    ``quadratic*j^2 + linear*j + sqrt*sqrt(j) + log*log2(j) + loglog*log2(ln j)``
    unless ``tower`` (L_j = 2^{2^j}) or ``exp_rate`` (L_j ~ 2^{exp_rate*j} * j^exp_log_power)
    is set, in which case those dominate everything else.
    """

    tower: bool = False
    exp_rate: float = 0.0
    exp_log_power: float = 0.0
    quadratic: float = 0.0
    linear: float = 0.0
    sqrt: float = 0.0
    log: float = 0.0
    loglog: float = 0.0

    @property
    def is_exponential(self):
        return self.tower or self.exp_rate > 0


def growth_profile(family, params, n):
    """
    Growth profile for the families with a closed form, or None.

    Args:
        family (CantorFamily): Family of the sequence
        params (dict): Family parameters as Fractions
        n (int): Ambient product dimension

    Returns:
        GrowthProfile | None: None for the Explicit and positive-measure families
    """
    d = float(params['d']) if 'd' in params else None
    p_star = float(params['p_star']) if 'p_star' in params else None

    if family is CantorFamily.GEOMETRIC:
        return GrowthProfile(linear=-math.log2(float(params['ratio'])))
    if family is CantorFamily.E_ZERO:
        return GrowthProfile(exp_rate=n * (p_star - 1))
    if family is CantorFamily.E_D:
        return GrowthProfile(linear=n / d, log=-1.0 / (d * (p_star - 1)))
    if family is CantorFamily.F_ZERO_ONE:
        return GrowthProfile(quadratic=1.0)
    if family is CantorFamily.F_ZERO_PSTAR:
        return GrowthProfile(exp_rate=n * (p_star - 1), exp_log_power=-2.0)
    if family is CantorFamily.F_ZERO_INF:
        return GrowthProfile(tower=True)
    if family is CantorFamily.F_D_ONE:
        return GrowthProfile(linear=n / d, sqrt=-(n / d - 1) / 2)
    if family is CantorFamily.F_D_PSTAR:
        weight = 1.0 / (d * (p_star - 1))
        return GrowthProfile(linear=n / d, log=-weight, loglog=-2 * weight)
    if family is CantorFamily.F_D_INF:
        return GrowthProfile(linear=n / d)
    if family is CantorFamily.F_N_INF:
        return GrowthProfile(linear=1.0, log=1.0)
    return None
