"""
Squared H^{2,2}(R) norm of the minimal extension of an even function given on
[-a, a]:

    2 (|u(a)|^2 + |u'(a)|^2 + |u(a) + u'(a)|^2 + int_0^a |u|^2 + 2|u'|^2 + |u''|^2 dt)

Constants give 4 + 2a. Piecewise-polynomial trials are evaluated exactly over
the rationals.
"""

import logging
from fractions import Fraction

import numpy as np
from numpy.polynomial import polynomial as P

from nullity_engine.classification.index import as_number
from nullity_engine.exceptions import ParameterDomainError
from nullity_engine.spectral.quadrature import integrate_callable

logger = logging.getLogger(__name__)


def _boundary_terms(value, slope):
    return value * value + slope * slope + (value + slope) * (value + slope)


def h22_even_interval_norm_sq(u, du, ddu, a, panels=16, points=64):
    """
    Restriction norm by composite Gauss-Legendre quadrature.

    Args:
        u, du, ddu (callable): Vectorized u, u' and u'' on [0, a]
        a (float): Half-width, > 0
        panels (int): Quadrature panels
        points (int): Nodes per panel

    Returns:
        float: The squared norm
    """
    a = float(a)
    if not a > 0:
        raise ParameterDomainError('a > 0', f"got {a}")

    def density(t):
        return u(t) ** 2 + 2 * du(t) ** 2 + ddu(t) ** 2

    edge = np.array([a])
    boundary = _boundary_terms(float(u(edge)[0]), float(du(edge)[0]))
    return 2 * (boundary + integrate_callable(density, 0.0, a, panels, points))


def _poly(coefficients):
    return np.array([as_number(c) for c in coefficients], dtype=object)


def _definite(coefficients, start, end):
    antiderivative = P.polyint(coefficients)
    return P.polyval(end, antiderivative) - P.polyval(start, antiderivative)


def h22_even_polynomial_norm_sq(pieces, a):
    """
    Exact restriction norm of a piecewise polynomial even function.

    Args:
        pieces (list): ``(start, end, coefficients)`` tuples covering [0, a] in
            order, coefficients in increasing degree
        a: Half-width; rationals stay exact

    Returns:
        Fraction | float: The squared norm
    """
    a = as_number(a)
    if not a > 0:
        raise ParameterDomainError('a > 0', f"got {a}")
    if not pieces:
        raise ParameterDomainError('at least one polynomial piece')

    total = 0
    cursor = 0
    for start, end, coefficients in pieces:
        start, end = as_number(start), as_number(end)
        if start != cursor or not end > start:
            raise ParameterDomainError('pieces cover [0, a] in order', f"piece [{start}, {end}]")
        cursor = end
        c0 = _poly(coefficients)
        c1 = P.polyder(c0)
        c2 = P.polyder(c1)
        density = P.polyadd(P.polyadd(P.polymul(c0, c0), 2 * P.polymul(c1, c1)), P.polymul(c2, c2))
        total += _definite(density, start, end)
    if cursor != a:
        raise ParameterDomainError('pieces cover [0, a] in order', f"last piece ends at {cursor}")

    last = _poly(pieces[-1][2])
    boundary = _boundary_terms(P.polyval(a, last), P.polyval(a, P.polyder(last)))
    return 2 * (boundary + total)


def _check_epsilon(eps):
    eps = as_number(eps)
    if not eps > 0:
        raise ParameterDomainError('epsilon > 0', f"got {eps}")
    return eps


def quadratic_trial_pieces(a, eps):
    a, eps = as_number(a), _check_epsilon(eps)
    if not 0 < a or not a * a < 3:
        raise ParameterDomainError('0 < a < sqrt(3)', f"got a={a}")
    return [(0, a, [1 + eps * a * a, 0, -eps])]


def cubicgap_trial_pieces(a, eps):
    a, eps = as_number(a), _check_epsilon(eps)
    if not a > 1:
        raise ParameterDomainError('a > 1', f"got a={a}")
    bump = P.polymul(_poly([a, -1]), P.polymul(_poly([a - 1, -1]), _poly([a - 1, -1])))
    cubic = P.polyadd(_poly([1]), eps * bump)
    return [(0, a - 1, [1]), (a - 1, a, list(cubic))]


def trial_quadratic(a, eps):
    """Norm of u(t) = 1 + eps (a^2 - t^2), which is >= 1 on (-a, a)."""
    return h22_even_polynomial_norm_sq(quadratic_trial_pieces(a, eps), a)


def trial_cubicgap(a, eps):
    """Norm of u = 1 on [0, a-1] and 1 + eps (a - t)(a - 1 - t)^2 on [a-1, a]."""
    return h22_even_polynomial_norm_sq(cubicgap_trial_pieces(a, eps), a)


def constant_norm_sq(a):
    """4 + 2a, the squared norm of the constant one."""
    return h22_even_polynomial_norm_sq([(0, a, [1])], a)


def trial_slope(trial, a, eps=Fraction(1, 10**4)):
    """Forward difference (trial(a, eps) - (4 + 2a)) / eps."""
    return (trial(a, eps) - constant_norm_sq(a)) / as_number(eps)


def best_trial(trial, a, epsilons):
    """
    Smallest trial value over sampled epsilons.

    Returns:
        tuple: (epsilon, value)
    """
    best = min(((eps, trial(a, eps)) for eps in epsilons), key=lambda item: item[1])
    logger.debug(f"best {trial.__name__} at a={a}: eps={best[0]}, value={float(best[1]):.9f}")
    return best
