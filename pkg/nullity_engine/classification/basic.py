"""
Nullity facts that depend only on coarse information about a set: its
Hausdorff dimension, its measure and interior, the regularity of a boundary,
and how nullity behaves under unions and changes of (s, p).
"""

import logging
from dataclasses import dataclass
from enum import Enum

from nullity_engine.classification.certificates import fat_threshold
from nullity_engine.classification.index import SobolevIndex, as_number, compare
from nullity_engine.classification.verdicts import Justification, NullityVerdict
from nullity_engine.exceptions import HypothesisError, NullityEngineError, ParameterDomainError
from nullity_engine.fractal_sets.cantor import CantorSpec
from nullity_engine.fractal_sets.families import CantorFamily

logger = logging.getLogger(__name__)


def hausdorff_threshold(d, n, p):
    """
    Nullity threshold (d - n)/p' of a Borel set of measure zero with dim_H = d.

    Args:
        d (number): Hausdorff dimension, 0 <= d <= n
        n (int): Ambient dimension
        p (number): Integrability, 1 < p < infinity

    Returns:
        Fraction | float: Exact when d and p are rational
    """
    d = as_number(d)
    if not 0 <= d <= n:
        raise ParameterDomainError('0 <= d <= n', f"got d={d}, n={n}")
    index = SobolevIndex.of(0, p)
    return (d - n) / index.p_conj


def dimension_verdict(d, n, index):
    """
    Classify a Borel set of measure zero from its Hausdorff dimension alone.

    Null above (d - n)/p', not null below; the threshold itself is Unknown.
    """
    threshold = hausdorff_threshold(d, n, index.p)
    context = {'s': index.s, 'p': index.p}
    side = compare(index.s, threshold)
    if side > 0:
        return NullityVerdict.null(
            Justification.HAUSDORFF_ABOVE, f"s > (d-n)/p' = {float(threshold):.6g}", **context
        )
    if side < 0:
        return NullityVerdict.not_null(
            Justification.HAUSDORFF_BELOW, f"s < (d-n)/p' = {float(threshold):.6g}", **context
        )
    return NullityVerdict.unknown(
        "s equals the dimension threshold; dimension alone does not decide", **context
    )


class SetFlag(str, Enum):
    NONEMPTY = 'nonempty'
    COUNTABLE = 'countable'
    EMPTY_INTERIOR = 'empty_interior'
    NONEMPTY_INTERIOR = 'nonempty_interior'
    INNER_MEASURE_ZERO = 'inner_measure_zero'
    INNER_MEASURE_POSITIVE = 'inner_measure_positive'


_CONTRADICTIONS = (
    (SetFlag.INNER_MEASURE_ZERO, SetFlag.INNER_MEASURE_POSITIVE),
    (SetFlag.COUNTABLE, SetFlag.INNER_MEASURE_POSITIVE),
    (SetFlag.EMPTY_INTERIOR, SetFlag.NONEMPTY_INTERIOR),
    (SetFlag.COUNTABLE, SetFlag.NONEMPTY_INTERIOR),
    (SetFlag.INNER_MEASURE_ZERO, SetFlag.NONEMPTY_INTERIOR),
)


def _parse_flags(flags):
    parsed = set()
    for flag in flags:
        try:
            parsed.add(SetFlag(flag))
        except ValueError:
            raise HypothesisError(f"unknown set flag {flag!r}") from None
    for first, second in _CONTRADICTIONS:
        if first in parsed and second in parsed:
            raise HypothesisError(f"contradictory flags: {first.value} and {second.value}")
    return parsed


def basic_verdict(flags, n, index):
    """
    Apply the elementary nullity facts to a set described by flags.

    Args:
        flags (iterable): Names from ``SetFlag``
        n (int): Ambient dimension
        index (SobolevIndex): (s, p)

    Returns:
        NullityVerdict: The first rule that applies, or Unknown

    Raises:
        HypothesisError: for unknown or contradictory flags
    """
    flags = _parse_flags(flags)
    s = index.s
    context = {'s': s, 'p': index.p}
    nonempty = bool(flags & {SetFlag.NONEMPTY, SetFlag.COUNTABLE, SetFlag.NONEMPTY_INTERIOR,
                             SetFlag.INNER_MEASURE_POSITIVE})
    lower = index.delta_threshold(n)
    upper = index.interior_threshold(n)

    if SetFlag.NONEMPTY_INTERIOR in flags:
        return NullityVerdict.not_null(
            Justification.BASIC, "sets with interior are never null", **context
        )
    if nonempty and compare(s, lower) < 0:
        return NullityVerdict.not_null(
            Justification.DELTA_LOW_S, "no non-empty set is null below -n/p'", **context
        )
    if SetFlag.COUNTABLE in flags:
        return NullityVerdict.null(
            Justification.BASIC, "countable sets are null for s >= -n/p'", **context
        )
    if compare(s, upper) > 0 and SetFlag.EMPTY_INTERIOR in flags:
        return NullityVerdict.null(
            Justification.EMPTY_INTERIOR_HIGH_S, "empty interior and s > n/p", **context
        )
    if compare(s, 0) == 0:
        if SetFlag.INNER_MEASURE_ZERO in flags:
            return NullityVerdict.null(
                Justification.BASIC, "(0,p)-null exactly when inner measure is zero", **context
            )
        if SetFlag.INNER_MEASURE_POSITIVE in flags:
            return NullityVerdict.not_null(
                Justification.MEASURE_POSITIVE, "positive inner measure at s = 0", **context
            )
    if SetFlag.INNER_MEASURE_ZERO in flags and compare(s, 0) >= 0:
        return NullityVerdict.null(
            Justification.BASIC, "inner measure zero and s >= 0", **context
        )
    if SetFlag.INNER_MEASURE_POSITIVE in flags and compare(s, 0) <= 0:
        return NullityVerdict.not_null(
            Justification.MEASURE_POSITIVE, "positive inner measure and s <= 0", **context
        )
    return NullityVerdict.unknown("no elementary rule applies", **context)


class BoundaryRegularity(str, Enum):
    C0 = 'C0'
    C0_ALPHA = 'C0alpha'
    LIPSCHITZ = 'Lipschitz'
    COMPLEMENT_HAS_INTERIOR = 'ComplementHasInterior'


def boundary_verdict(reg_class, alpha, n, index):
    """
    Nullity of the boundary of an open set from its regularity class.

    Args:
        reg_class (BoundaryRegularity | str): Regularity of the domain
        alpha (number): Hölder exponent in (0, 1), used by C0alpha only
        n (int): Ambient dimension
        index (SobolevIndex): (s, p)

    Returns:
        NullityVerdict: With the BoundaryFact tag when decided
    """
    try:
        reg_class = BoundaryRegularity(reg_class)
    except ValueError:
        raise ParameterDomainError('known boundary regularity class', f"got {reg_class!r}") from None
    s = index.s
    context = {'s': s, 'p': index.p, 'family': reg_class.value}
    lower = -1 / index.p_conj
    below = compare(s, lower) < 0

    if reg_class is BoundaryRegularity.LIPSCHITZ:
        if below:
            return NullityVerdict.not_null(
                Justification.BOUNDARY_FACT, "Lipschitz boundary, s < -1/p'", **context
            )
        return NullityVerdict.null(
            Justification.BOUNDARY_FACT, "Lipschitz boundary, s >= -1/p'", **context
        )

    if below:
        return NullityVerdict.not_null(
            Justification.BOUNDARY_FACT, "the complement has interior and s < -1/p'", **context
        )
    if reg_class is BoundaryRegularity.C0:
        if compare(s, 0) >= 0:
            return NullityVerdict.null(Justification.BOUNDARY_FACT, "C0 boundary, s >= 0", **context)
        return NullityVerdict.unknown("C0 boundary with -1/p' <= s < 0", **context)
    if reg_class is BoundaryRegularity.C0_ALPHA:
        alpha = as_number(alpha) if alpha is not None else None
        if alpha is None or not 0 < alpha < 1:
            raise ParameterDomainError('0 < alpha < 1', f"got alpha={alpha}")
        if compare(s, -alpha / index.p_conj) > 0:
            return NullityVerdict.null(
                Justification.BOUNDARY_FACT, "C0,alpha boundary, s > -alpha/p'", **context
            )
        return NullityVerdict.unknown("C0,alpha boundary with -1/p' <= s <= -alpha/p'", **context)
    return NullityVerdict.unknown("only complement interior is known", **context)


def union_verdict(verdicts, index):
    """
    Combine verdicts about finitely many closed sets into one about their union.

    A union with a non-null part is not null. A finite union of null closed
    sets is null for s <= 0; for s > 0 subadditivity may fail and the result
    is Unknown.
    """
    verdicts = list(verdicts)
    if not verdicts:
        raise ParameterDomainError('at least one set in the union')
    context = {'s': index.s, 'p': index.p}
    if any(v.is_not_null for v in verdicts):
        return NullityVerdict.not_null(Justification.UNION, "a part of the union is not null",
                                       **context)
    if all(v.is_null for v in verdicts):
        if compare(index.s, 0) <= 0:
            return NullityVerdict.null(Justification.UNION, "finite union of null closed sets",
                                       **context)
        return NullityVerdict.unknown("unions of null sets for s > 0 are not decided", **context)
    return NullityVerdict.unknown("some parts of the union are undecided", **context)


def embedding_implies(s, p, t, q, n):
    """True when (s,p)-nullity implies (t,q)-nullity for every set in R^n."""
    s, p, t, q = (as_number(v) for v in (s, p, t, q))
    SobolevIndex(s, p)
    SobolevIndex(t, q)
    shift = max(n * (1 / q - 1 / p), 0)
    return compare(t, s + shift) >= 0


def threshold_transfer(d, n, s, p, q):
    """
    The (t, q) reached from a threshold-null (s, p) with s p' = d - n.

    For 1 < q < p and t q' = s p' = d - n, (s,p)-nullity of a Borel set with
    0 <= dim_H < n implies (t,q)-nullity.

    Returns:
        Fraction | float: t = (d - n)/q'
    """
    d, s, p, q = (as_number(v) for v in (d, s, p, q))
    if not 0 <= d < n:
        raise ParameterDomainError('0 <= d < n', f"got d={d}, n={n}")
    if not 1 < q < p:
        raise ParameterDomainError('1 < q < p', f"got q={q}, p={p}")
    index = SobolevIndex(s, p)
    if compare(s * index.p_conj, d - n) != 0:
        raise HypothesisError(f"s p' = {s * index.p_conj} differs from d - n = {d - n}")
    return (d - n) / SobolevIndex(s, q).p_conj


@dataclass(frozen=True)
class ThresholdCurve:
    """
    Samples (r, S(r)) of the threshold as a function of r = 1/p.

    ``kind`` is ``'exact'`` when S is the threshold itself and
    ``'lower_bound'`` when only a bound is known.
    """

    samples: tuple
    kind: str

    def __iter__(self):
        return iter(self.samples)

    def __len__(self):
        return len(self.samples)


def _check_curve(samples, n, atol):
    for (r0, s0), (r1, s1) in zip(samples, samples[1:]):
        step = float(s1 - s0)
        if step < -atol:
            raise NullityEngineError(f"threshold curve decreases between r={r0} and r={r1}")
        if step > n * float(r1 - r0) + atol:
            raise NullityEngineError(f"threshold curve slope exceeds n between r={r0} and r={r1}")
    values = [float(value) for _, value in samples]
    if any(v < -atol for v in values) and any(v > atol for v in values):
        raise NullityEngineError("threshold curve changes sign strictly")


def threshold_curve(source, n, r_samples, atol=1e-12):
    """
    Sample S(r) = s_E(1/r) for 0 < r < 1.

    Args:
        source (number | CantorSpec): Hausdorff dimension of a measure-zero set,
            or a zoo, geometric or fat Cantor spec
        n (int): Ambient dimension
        r_samples (iterable): Points of (0, 1)

    Returns:
        ThresholdCurve: Samples in increasing r, checked to be non-decreasing,
            with slopes in [0, n] and without a strict sign change
    """
    r_values = sorted(as_number(r) for r in r_samples)
    if any(not 0 < r < 1 for r in r_values):
        raise ParameterDomainError('0 < r < 1', f"got {r_values}")

    if isinstance(source, CantorSpec):
        if source.family is CantorFamily.FAT:
            base = fat_threshold(source.param('alpha'), 2)
            samples = tuple((r, min(2 * float(r) * base, base)) for r in r_values)
            _check_curve(samples, n, atol)
            return ThresholdCurve(samples, 'lower_bound')
        d = source.dimension
        if d is None or source.has_positive_measure:
            raise ParameterDomainError(
                'zero-measure family with known dimension', f"got {source.family.label}"
            )
    else:
        d = as_number(source)
    if not 0 <= d <= n:
        raise ParameterDomainError('0 <= d <= n', f"got d={d}, n={n}")

    samples = tuple((r, (n - d) * (r - 1)) for r in r_values)
    _check_curve(samples, n, atol)
    logger.debug(f"threshold curve with {len(samples)} samples for d={d}, n={n}")
    return ThresholdCurve(samples, 'exact')
