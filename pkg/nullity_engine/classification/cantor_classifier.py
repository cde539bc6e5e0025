"""
Nullity of n-fold products of generalized Cantor sets.

For -n/p' <= s < 0 the product is (s,p)-null exactly when
sum_j (2^{-jn} l_j^{-(sp'+n)})^{p-1} diverges (at s = -n/p' the terms are
2^{-jn(p-1)} log(1/l_j)). Closed-form families read the convergence class
from their growth profile; the Explicit family is probed numerically.
"""

import logging

import mpmath

from nullity_engine.classification.certificates import fat_threshold
from nullity_engine.classification.index import SobolevIndex, compare
from nullity_engine.classification.series import profile_series_outcome, series_probe
from nullity_engine.classification.verdicts import (
    ConvergenceOutcome,
    Justification,
    NullityVerdict,
)
from nullity_engine.exceptions import ParameterDomainError
from nullity_engine.fractal_sets.cantor import measure_limit
from nullity_engine.fractal_sets.families import CantorFamily
from nullity_engine.utils.numeric import to_mpf

logger = logging.getLogger(__name__)


def _resolve_n(spec, n):
    if n is None:
        return spec.n
    if n != spec.n:
        raise ParameterDomainError('n matches the construction dimension', f"got n={n}, construction n={spec.n}")
    return n


def _series_range(n, index):
    lower = index.delta_threshold(n)
    below, above = compare(index.s, lower), compare(index.s, 0)
    if below < 0 or above >= 0:
        raise ParameterDomainError("-n/p' <= s < 0", f"got s={index.s}, -n/p'={float(lower):.6g}")
    return below == 0


def cantor_log2_term(spec, n, s, p, j):
    """log2 of the j-th term of the nullity series, as an ``mpf``."""
    n = _resolve_n(spec, n)
    index = SobolevIndex.of(s, p)
    logarithmic = _series_range(n, index)
    p_mpf = to_mpf(index.p)
    inverse_log = spec.log2_inverse_length(j)
    if logarithmic:
        return -j * n * (p_mpf - 1) + mpmath.log(inverse_log * mpmath.ln2, 2)
    x = to_mpf(index.s) * to_mpf(index.p_conj) + n
    return (p_mpf - 1) * (-j * n + x * inverse_log)


def cantor_term(spec, n, s, p, j):
    """
    The j-th term of the Cantor nullity series.

    Args:
        spec (CantorSpec): Length sequence
        n (int): Product dimension, must match ``spec.n``
        s (number): Regularity with -n/p' <= s < 0
        p (number): Integrability
        j (int): Term index, j >= 1

    Returns:
        mpf: (2^{-jn} l_j^{-(sp'+n)})^{p-1}, or 2^{-jn(p-1)} log(1/l_j) at s = -n/p'

    Raises:
        ParameterDomainError: when s is outside [-n/p', 0)
    """
    return mpmath.power(2, cantor_log2_term(spec, n, s, p, j))


def _probe_explicit(spec, n, index, context):
    last = spec.max_depth
    terms = (cantor_log2_term(spec, n, index.s, index.p, j) for j in range(1, last + 1))
    result = series_probe(terms, log2_terms=True)
    detail = f"{result.test} test up to j={result.last_index}"
    if result.outcome is ConvergenceOutcome.DIVERGES:
        return NullityVerdict.null(Justification.CANTOR_SERIES, f"series diverges ({detail})",
                                   **context)
    if result.outcome is ConvergenceOutcome.CONVERGES:
        return NullityVerdict.not_null(Justification.CANTOR_SERIES,
                                       f"series converges ({detail})", **context)
    return NullityVerdict.unknown(f"series probe inconclusive ({detail})", **context)


def classify_cantor(spec, n=None, index=None):
    """
    Decide whether the n-fold product of a Cantor set is (s,p)-null.

    Elementary facts are applied before the series criterion, in order:
    s < -n/p' (never null), s >= 0 with measure zero (null), positive measure
    with s <= 0 (not null), s > n/p (null, empty interior). Fat Cantor sets
    are certified not null for 0 < s below their Fourier threshold.

    Args:
        spec (CantorSpec): Length sequence
        n (int, optional): Product dimension, defaults to ``spec.n``
        index (SobolevIndex): (s, p)

    Returns:
        NullityVerdict: Unknown when no criterion decides
    """
    n = _resolve_n(spec, n)
    s = index.s
    family = spec.family
    context = {'s': s, 'p': index.p, 'family': family.value}
    lower = index.delta_threshold(n)
    upper = index.interior_threshold(n)

    if compare(s, lower) < 0:
        return NullityVerdict.not_null(
            Justification.DELTA_LOW_S, "no non-empty set is null below -n/p'", **context
        )

    measure = measure_limit(spec, n)
    if measure.closed_form:
        zero_measure = measure.value == 0
        if zero_measure and compare(s, 0) >= 0:
            return NullityVerdict.null(Justification.BASIC, "measure zero and s >= 0", **context)
        if not zero_measure and compare(s, 0) <= 0:
            return NullityVerdict.not_null(
                Justification.MEASURE_POSITIVE, f"measure {measure.value} > 0 and s <= 0",
                **context
            )

    if compare(s, upper) > 0:
        return NullityVerdict.null(
            Justification.EMPTY_INTERIOR_HIGH_S, "Cantor sets have empty interior", **context
        )

    if family is CantorFamily.FAT:
        p_used = index.p if compare(index.p, 2) >= 0 else 2
        threshold = fat_threshold(spec.param('alpha'), p_used)
        if compare(s, threshold) < 0:
            return NullityVerdict.not_null(
                Justification.FOURIER_MEMBERSHIP,
                f"s below the fat Cantor Fourier threshold {threshold:.6g}",
                **context,
            )
        return NullityVerdict.unknown(
            f"fat Cantor set with s >= {threshold:.6g} and s <= n/p", **context
        )
    if family is CantorFamily.SUPER_FAT:
        return NullityVerdict.unknown(
            "super-fat Cantor sets need capacity constants for 0 < s <= n/p", **context
        )
    if compare(s, 0) >= 0:
        return NullityVerdict.unknown("no criterion for this sequence at s >= 0", **context)

    if family is CantorFamily.EXPLICIT:
        return _probe_explicit(spec, n, index, context)

    logarithmic = compare(s, lower) == 0
    outcome = profile_series_outcome(spec.profile, n, s, index.p, logarithmic)
    term = 'logarithmic' if logarithmic else 'power'
    if outcome is ConvergenceOutcome.DIVERGES:
        return NullityVerdict.null(
            Justification.ZOO_CLOSED_FORM, f"{term} series diverges for {family.label}", **context
        )
    return NullityVerdict.not_null(
        Justification.ZOO_CLOSED_FORM, f"{term} series converges for {family.label}", **context
    )
