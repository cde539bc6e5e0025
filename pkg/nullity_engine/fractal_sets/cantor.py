"""
Generalized Cantor sets built from a length sequence l_j.

The level-J prefractal E_J is the union of 2^J closed intervals of length l_J
obtained by removing, from each interval of E_{J-1}, a centred open interval
of length l_{J-1} - 2 l_J. The n-fold product of the limit set is handled
symbolically: ``CantorSpec.n`` only enters the formulas.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import mpmath

from nullity_engine.conf import get_config
from nullity_engine.exceptions import ParameterDomainError, PrecisionError
from nullity_engine.fractal_sets.families import (
    POSITIVE_MEASURE_FAMILIES,
    CantorFamily,
    check_params,
    find_j0_f_d_pstar,
    find_j0_f_zero_pstar,
    growth_profile,
)
from nullity_engine.fractal_sets.intervals import IntervalSet
from nullity_engine.utils.numeric import log2_of, to_fraction, to_mpf

logger = logging.getLogger(__name__)

# Families whose lengths are rational for rational parameters
_RATIONAL_FAMILIES = frozenset({
    CantorFamily.GEOMETRIC,
    CantorFamily.F_ZERO_ONE,
    CantorFamily.F_N_INF,
    CantorFamily.FAT,
    CantorFamily.EXPLICIT,
})

# Depth used by make_cantor to sanity-check a new spec
_BUILD_CHECK_DEPTH = 8


@dataclass(frozen=True)
class CantorSpec:
    """
    A Cantor length sequence together with the ambient product dimension.

    Attributes:
        family (CantorFamily): Which closed form produces l_j
        params (tuple): Sorted ``(name, value)`` pairs, values as Fraction
            (the Explicit family stores its lengths as a tuple of Fractions)
        n (int): Dimension of the product E x ... x E
    """

    family: CantorFamily
    params: tuple = ()
    n: int = 1

    def to_dict(self):
        """``{family, params, n}`` with parameters as exact strings."""
        params = {}
        for name, value in self.params:
            params[name] = [str(v) for v in value] if name == 'lengths' else str(value)
        return {'family': self.family.value, 'params': params, 'n': self.n}

    @classmethod
    def from_dict(cls, data):
        """Rebuild and re-validate a spec written by ``to_dict``."""
        return make_cantor(data['family'], data.get('params') or {}, int(data.get('n', 1)))

    @cached_property
    def params_dict(self):
        return dict(self.params)

    def param(self, name):
        return self.params_dict[name]

    @cached_property
    def is_exact(self):
        """True when every l_j is a rational number (materialized as Fraction)."""
        if self.family in _RATIONAL_FAMILIES or self.family is CantorFamily.F_ZERO_INF:
            return True
        if self.family is CantorFamily.F_D_INF:
            return (self.n / self.param('d')).denominator == 1
        if self.family is CantorFamily.E_ZERO:
            return (self.n * (self.param('p_star') - 1)).denominator == 1
        return False

    @property
    def max_depth(self):
        """Last available index for the Explicit family, None for closed forms."""
        if self.family is CantorFamily.EXPLICIT:
            return len(self.param('lengths')) - 1
        return None

    @cached_property
    def j0(self):
        scan_limit = get_config('FRACTAL_CONFIG')['j0_scan_limit']
        if self.family is CantorFamily.F_ZERO_PSTAR:
            return find_j0_f_zero_pstar(self.n, self.param('p_star'), scan_limit)
        if self.family is CantorFamily.F_D_PSTAR:
            return find_j0_f_d_pstar(self.n, self.param('d'), self.param('p_star'), scan_limit)
        return None

    @cached_property
    def prefactor_bits(self):
        """
        Power-of-two scaling m applied to the F(d,p*) row so that l_1 < 1/2.

        Scaling every l_j (j >= 1) by 2^{-m} leaves all ratios l_{j+1}/l_j,
        and with them the convergence class, unchanged.
        """
        if self.family is not CantorFamily.F_D_PSTAR:
            return 0
        raw = self._f_d_pstar_raw(1)
        if raw > 1:
            return 0
        shift = int(mpmath.floor(1 - raw)) + 1
        logger.debug(f"F(d,p*) lengths scaled by 2^-{shift} to keep l_1 < 1/2")
        return shift

    @cached_property
    def profile(self):
        return growth_profile(self.family, self.params_dict, self.n)

    @property
    def has_positive_measure(self):
        return self.family in POSITIVE_MEASURE_FAMILIES

    @cached_property
    def dimension(self):
        """
        Hausdorff dimension of the n-fold product, as known from the construction.

        Returns:
            Fraction | float | None: None when the construction does not fix it
        """
        family = self.family
        if family in (CantorFamily.E_D, CantorFamily.F_D_ONE, CantorFamily.F_D_PSTAR,
                      CantorFamily.F_D_INF):
            return self.param('d')
        if family in (CantorFamily.E_ZERO, CantorFamily.F_ZERO_ONE,
                      CantorFamily.F_ZERO_PSTAR, CantorFamily.F_ZERO_INF):
            return Fraction(0)
        if family in (CantorFamily.F_N_INF, CantorFamily.FAT, CantorFamily.SUPER_FAT):
            return Fraction(self.n)
        if family is CantorFamily.GEOMETRIC:
            return self.n * math.log(2) / -math.log(float(self.param('ratio')))
        return None

    def _check_index(self, j):
        if j < 0:
            raise ParameterDomainError('j >= 0', f"got j={j}")
        if self.max_depth is not None and j > self.max_depth:
            raise PrecisionError(
                f"explicit sequence has {self.max_depth + 1} terms, l_{j} is not defined"
            )

    def _f_d_pstar_raw(self, j):
        n, d, p_star = self.n, self.param('d'), self.param('p_star')
        shifted = j + self.j0
        weight = mpmath.log(shifted * mpmath.log(shifted) ** 2, 2)
        return j * to_mpf(Fraction(n) / d) - weight / to_mpf(d * (p_star - 1))

    def log2_inverse_length(self, j):
        """
        L_j = log2(1/l_j) as an ``mpf``.

        Available for every index, including the double-exponential rows whose
        lengths cannot be materialized.
        """
        self._check_index(j)
        if j == 0:
            return mpmath.mpf(0)

        family, n = self.family, self.n
        if family is CantorFamily.E_ZERO:
            kappa = to_mpf(n * (self.param('p_star') - 1))
            return 2 * (mpmath.power(2, j * kappa) - 1) / (mpmath.power(2, kappa) - 1)
        if family is CantorFamily.E_D:
            d, p_star = self.param('d'), self.param('p_star')
            base = mpmath.power(2, to_mpf((n - d) * (p_star - 1))) - 1
            correction = mpmath.log(1 + mpmath.mpf(j - 1) / 2 * base, 2)
            return j * to_mpf(Fraction(n) / d) - correction / to_mpf(d * (p_star - 1))
        if family is CantorFamily.F_ZERO_ONE:
            return mpmath.mpf(j * j + 1)
        if family is CantorFamily.F_ZERO_PSTAR:
            kappa = to_mpf(n * (self.param('p_star') - 1))
            shifted = j + self.j0
            return mpmath.power(2, shifted * kappa) / shifted**2
        if family is CantorFamily.F_ZERO_INF:
            return mpmath.power(2, 2**j)
        if family is CantorFamily.F_D_ONE:
            ratio = to_mpf(Fraction(n) / self.param('d'))
            return j * ratio - (ratio - 1) * mpmath.sqrt(j) / 2
        if family is CantorFamily.F_D_PSTAR:
            return self._f_d_pstar_raw(j) + self.prefactor_bits
        if family is CantorFamily.F_D_INF:
            return j * to_mpf(Fraction(n) / self.param('d'))
        if family is CantorFamily.F_N_INF:
            return j + mpmath.log(j + 1, 2)
        if family is CantorFamily.SUPER_FAT:
            gamma = to_mpf(self.param('gamma'))
            delta = to_mpf(self.param('delta'))
            return j - mpmath.log(1 - gamma + mpmath.power(gamma, mpmath.power(delta, j)), 2)
        return -log2_of(self.length(j))

    def _exact_length(self, j):
        family = self.family
        if family is CantorFamily.GEOMETRIC:
            return self.param('ratio') ** j
        if family is CantorFamily.F_ZERO_ONE:
            return Fraction(1, 2 ** (j * j + 1))
        if family is CantorFamily.F_N_INF:
            return Fraction(1, 2**j * (j + 1))
        if family is CantorFamily.FAT:
            alpha, beta = self.param('alpha'), self.param('beta')
            return Fraction(1, 2**j) * (1 - beta * (1 - (2 * alpha) ** j) / (1 - 2 * alpha))
        if family is CantorFamily.EXPLICIT:
            return self.param('lengths')[j]

        max_bits = get_config('FRACTAL_CONFIG')['max_exact_exponent_bits']
        if family is CantorFamily.F_ZERO_INF:
            if (1 << j) > max_bits.bit_length() - 1:
                raise PrecisionError(
                    f"l_{j} = 2^-2^2^{j} exceeds {max_bits} exponent bits; use log2_inverse_length"
                )
            return Fraction(1, 2 ** (2 ** (2**j)))
        if family is CantorFamily.F_D_INF:
            exponent = int(j * (self.n / self.param('d')))
        else:
            kappa = int(self.n * (self.param('p_star') - 1))
            exponent = 2 * (2 ** (j * kappa) - 1) // (2**kappa - 1)
        if exponent > max_bits:
            raise PrecisionError(
                f"l_{j} = 2^-{exponent} exceeds {max_bits} exponent bits; use log2_inverse_length"
            )
        return Fraction(1, 2**exponent)

    def length(self, j):
        """
        l_j, as a Fraction for exact specs and an ``mpf`` otherwise.

        Raises:
            PrecisionError: the exact value would exceed the configured exponent size
        """
        self._check_index(j)
        if self.is_exact:
            return Fraction(1) if j == 0 else self._exact_length(j)
        return mpmath.power(2, -self.log2_inverse_length(j))

    def validate(self, depth):
        """
        Check 0 < l_{j+1} < l_j/2 for every j < depth.

        Raises:
            ParameterDomainError: naming the first failing index
        """
        if self.max_depth is not None:
            depth = min(depth, self.max_depth)
        if self.family in _RATIONAL_FAMILIES:
            previous = self.length(0)
            for j in range(1, depth + 1):
                current = self.length(j)
                if not 0 < current < previous / 2:
                    raise ParameterDomainError(f"0 < l_{j} < l_{j - 1}/2", f"l_{j}={current}")
                previous = current
            return True
        previous = self.log2_inverse_length(0)
        for j in range(1, depth + 1):
            current = self.log2_inverse_length(j)
            if not current - previous > 1:
                raise ParameterDomainError(
                    f"0 < l_{j} < l_{j - 1}/2", f"log2 increment {current - previous}"
                )
            previous = current
        return True


def make_cantor(family, params=None, n=1):
    """
    Build a validated ``CantorSpec``.

    Args:
        family (CantorFamily | str): Family name, e.g. ``'fat'`` or ``CantorFamily.F_D_INF``
        params (dict, optional): Family parameters; numbers, numeric strings or
            Fractions. The Explicit family takes ``lengths``, a list of numbers.
        n (int): Ambient product dimension

    Returns:
        CantorSpec: The construction, checked to a small depth

    Raises:
        ParameterDomainError: with the violated constraint
    """
    try:
        family = CantorFamily(family)
    except ValueError:
        raise ParameterDomainError('known Cantor family', f"got {family!r}") from None

    converted = {}
    for name, value in (params or {}).items():
        if name == 'lengths':
            converted[name] = tuple(to_fraction(v) for v in value)
        else:
            converted[name] = to_fraction(value)
    check_params(family, converted, n)

    spec = CantorSpec(family, tuple(sorted(converted.items())), n)
    spec.validate(_BUILD_CHECK_DEPTH)
    logger.debug(f"built {family.label} spec with params {converted} and n={n}")
    return spec


def length(spec, j):
    return spec.length(j)


def log2_inverse_length(spec, j):
    return spec.log2_inverse_length(j)


def validate(spec, depth):
    return spec.validate(depth)


def level_set(spec, depth):
    """
    The prefractal E_J as 2^J disjoint intervals of length l_J.

    Args:
        spec (CantorSpec): Length sequence
        depth (int): Level J >= 0

    Returns:
        IntervalSet: Exact for rational specs, float-backed otherwise

    Raises:
        PrecisionError: J beyond the configured depth, or endpoints that cannot
            be resolved at the working precision
    """
    config = get_config('FRACTAL_CONFIG')
    if depth < 0:
        raise ParameterDomainError('J >= 0', f"got J={depth}")
    if depth > config['max_level_depth']:
        raise PrecisionError(f"level {depth} exceeds max_level_depth={config['max_level_depth']}")
    spec._check_index(depth)

    precision_bits = None
    if not spec.is_exact:
        precision_bits = mpmath.mp.prec
        needed = spec.log2_inverse_length(depth) + depth + 8
        if needed > precision_bits:
            raise PrecisionError(
                f"endpoints of level {depth} need about {int(needed)} bits, "
                f"working precision is {precision_bits}"
            )

    previous = spec.length(0)
    lefts = [Fraction(0) if spec.is_exact else mpmath.mpf(0)]
    for j in range(1, depth + 1):
        current = spec.length(j)
        offset = previous - current
        lefts = [start for left in lefts for start in (left, left + offset)]
        previous = current
    return IntervalSet(tuple((left, left + previous) for left in lefts), precision_bits)


def gap(spec, j):
    """Length l_{j-1} - 2 l_j of each of the 2^{j-1} intervals removed at stage j."""
    if j < 1:
        raise ParameterDomainError('j >= 1', f"got j={j}")
    if spec.family is CantorFamily.FAT:
        return spec.param('beta') * spec.param('alpha') ** (j - 1)
    return spec.length(j - 1) - 2 * spec.length(j)


@dataclass(frozen=True)
class MeasureLimit:
    """
    Lebesgue measure of the n-fold product limit set.

    ``closed_form`` is False when ``value`` is the depth-``depth`` value
    (2^J l_J)^n of a sequence without a known limit; ``monotone`` then records
    whether 2^j l_j was non-increasing up to that depth.
    """

    value: object
    closed_form: bool
    depth: int = None
    monotone: bool = None


def measure_limit(spec, n=None):
    """
    (lim_j 2^j l_j)^n for the construction.

    Args:
        spec (CantorSpec): Length sequence
        n (int, optional): Product dimension, defaults to ``spec.n``

    Returns:
        MeasureLimit: Exact value for closed forms, depth value otherwise
    """
    n = spec.n if n is None else n
    family = spec.family
    if family is CantorFamily.FAT:
        alpha, beta = spec.param('alpha'), spec.param('beta')
        return MeasureLimit((1 - beta / (1 - 2 * alpha)) ** n, True)
    if family is CantorFamily.SUPER_FAT:
        return MeasureLimit((1 - spec.param('gamma')) ** n, True)
    if family is not CantorFamily.EXPLICIT:
        return MeasureLimit(Fraction(0), True)

    depth = spec.max_depth
    masses = [2**j * spec.length(j) for j in range(depth + 1)]
    monotone = all(later <= earlier for earlier, later in zip(masses, masses[1:]))
    return MeasureLimit(masses[-1] ** n, False, depth, monotone)
