"""
Convergence of positive series, numerically and from growth profiles.

Terms are handled as log2 values throughout so that double-exponential
sequences never overflow.
"""

import logging

import mpmath

from nullity_engine.classification.verdicts import ConvergenceOutcome, ConvergenceVerdict
from nullity_engine.conf import get_config
from nullity_engine.exceptions import HypothesisError

logger = logging.getLogger(__name__)


def _log2_values(terms, log2_terms, max_index):
    values = []
    for index, term in enumerate(terms, start=1):
        if index > max_index:
            break
        if log2_terms:
            value = mpmath.mpf(term)
        else:
            if not term > 0:
                raise HypothesisError(f"series term {index} is not positive: {term}")
            value = mpmath.log(mpmath.mpf(term), 2)
        if mpmath.isnan(value) or value == mpmath.ninf:
            raise HypothesisError(f"series term {index} is not positive")
        values.append(value)
    return values


def _mean_step(values, start, stop):
    return (values[stop] - values[start]) / (stop - start)


def series_probe(terms, config=None, log2_terms=False):
    """
    Decide convergence of sum(terms) from a finite prefix.

    The tests run on the tail of the prefix, in order: a term test (a tail
    that does not decrease diverges), a ratio test on the extrapolated
    limiting ratio, and a comparison with 1/(j ln^2 j) (convergent) and
    1/(j ln j) (divergent). When none of them is decisive the result is
    Inconclusive rather than a guess.

    Args:
        terms (iterable): Positive terms a_1, a_2, ... (or their log2 values)
        config (dict, optional): ``max_index``, ``window``, ``ratio_tolerance``;
            defaults from SERIES_PROBE_CONFIG
        log2_terms (bool): True when ``terms`` already yields log2(a_j)

    Returns:
        ConvergenceVerdict: Outcome with the evidence used

    Raises:
        HypothesisError: on a non-positive term
    """
    config = {**get_config('SERIES_PROBE_CONFIG'), **(config or {})}
    window = config['window']
    tolerance = config['ratio_tolerance']
    values = _log2_values(terms, log2_terms, config['max_index'])
    last = len(values)

    if last < 2 * window + 1:
        logger.debug(f"series probe got {last} terms, needs {2 * window + 1}")
        return ConvergenceVerdict(ConvergenceOutcome.INCONCLUSIVE, last, 'insufficient')

    tail = values[-(window + 1):]
    if all(later >= earlier for earlier, later in zip(tail, tail[1:])):
        return ConvergenceVerdict(ConvergenceOutcome.DIVERGES, last, 'term', 1.0)

    # mean log2 step on two adjacent windows, extrapolated as mu + c/j
    recent = _mean_step(values, last - 1 - window, last - 1)
    earlier = _mean_step(values, last - 1 - 2 * window, last - 1 - window)
    j_recent = last - window / 2
    j_earlier = last - 3 * window / 2
    limit_step = (j_recent * recent - j_earlier * earlier) / (j_recent - j_earlier)
    ratio = float(mpmath.power(2, limit_step))

    if ratio < 1 - tolerance:
        return ConvergenceVerdict(ConvergenceOutcome.CONVERGES, last, 'ratio', ratio)
    if ratio > 1 + tolerance:
        return ConvergenceVerdict(ConvergenceOutcome.DIVERGES, last, 'ratio', ratio)

    indices = range(last - window, last + 1)
    weighted_conv = [
        values[j - 1] + mpmath.log(j, 2) + 2 * mpmath.log(mpmath.log(j), 2) for j in indices
    ]
    weighted_div = [
        values[j - 1] + mpmath.log(j, 2) + mpmath.log(mpmath.log(j), 2) for j in indices
    ]
    if all(b <= a for a, b in zip(weighted_conv, weighted_conv[1:])):
        return ConvergenceVerdict(ConvergenceOutcome.CONVERGES, last, 'log-comparison', ratio)
    if all(b >= a for a, b in zip(weighted_div, weighted_div[1:])):
        return ConvergenceVerdict(ConvergenceOutcome.DIVERGES, last, 'log-comparison', ratio)

    logger.info(f"series probe inconclusive at index {last}, ratio {ratio!r}")
    return ConvergenceVerdict(ConvergenceOutcome.INCONCLUSIVE, last, 'log-comparison', ratio)


def _snap(value, atol):
    return 0.0 if abs(value) <= atol else value


def asymptotic_outcome(quadratic, linear, sqrt, log, loglog, atol):
    """
    Convergence of sum over j of 2^E(j) with
    E(j) = quadratic*j^2 + linear*j + sqrt*sqrt(j) + log*log2(j) + loglog*log2(ln j).

    The first non-zero coefficient among the power terms decides; otherwise
    the series is j^log (ln j)^loglog, convergent iff log < -1, or log = -1
    and loglog < -1.
    """
    for coefficient in (quadratic, linear, sqrt):
        coefficient = _snap(coefficient, atol)
        if coefficient > 0:
            return ConvergenceOutcome.DIVERGES
        if coefficient < 0:
            return ConvergenceOutcome.CONVERGES
    gap = _snap(log + 1, atol)
    if gap < 0:
        return ConvergenceOutcome.CONVERGES
    if gap > 0:
        return ConvergenceOutcome.DIVERGES
    if _snap(loglog + 1, atol) < 0:
        return ConvergenceOutcome.CONVERGES
    return ConvergenceOutcome.DIVERGES


def profile_series_outcome(profile, n, s, p, logarithmic, atol=None):
    """
    Convergence class of the Cantor nullity series read off a growth profile.

    For -n/p' < s < 0 the terms are 2^{(p-1)(-jn + x L_j)} with x = s p' + n > 0;
    at s = -n/p' they are 2^{-jn(p-1)} L_j ln 2.

    Args:
        profile (GrowthProfile): Shape of L_j = log2(1/l_j)
        n (int): Product dimension
        s (float): Regularity
        p (float): Integrability
        logarithmic (bool): True at the endpoint s = -n/p'
        atol (float, optional): Coefficient snapping tolerance

    Returns:
        ConvergenceOutcome: Converges or Diverges
    """
    if atol is None:
        atol = get_config('CLASSIFIER_CONFIG')['threshold_atol']
    s, p = float(s), float(p)

    if logarithmic:
        if profile.tower:
            return ConvergenceOutcome.DIVERGES
        if profile.exp_rate > 0:
            return asymptotic_outcome(
                0.0, profile.exp_rate - n * (p - 1), 0.0, profile.exp_log_power, 0.0, atol
            )
        # log2(L_j) grows at most logarithmically against a linear decay
        return ConvergenceOutcome.CONVERGES

    x = s * p / (p - 1) + n
    if profile.is_exponential:
        return ConvergenceOutcome.DIVERGES
    scale = p - 1
    return asymptotic_outcome(
        scale * x * profile.quadratic,
        scale * (x * profile.linear - n),
        scale * x * profile.sqrt,
        scale * x * profile.log,
        scale * x * profile.loglog,
        atol,
    )
