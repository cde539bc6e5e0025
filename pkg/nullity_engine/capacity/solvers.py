"""
Variational capacities on a spectral grid.

``solve_Cap`` minimizes Q(u) with u = 1 on the mask: an equality-constrained
quadratic problem in the free grid values, solved by conjugate gradients
preconditioned with the inverse symbol.

``solve_cap`` minimizes Q(u) with u >= 1 on the mask. The equality solution is
optimal whenever its multipliers are non-negative; otherwise a dual active-set
iteration grows the contact support point by point, since u = A^{-1} lambda
with lambda >= 0 supported on the contact set.
"""

import logging
from dataclasses import asdict, dataclass

import numpy as np
import scipy.linalg
from scipy.sparse.linalg import LinearOperator, cg

from nullity_engine.capacity.grid import MaskKind
from nullity_engine.conf import get_config
from nullity_engine.exceptions import ParameterDomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolveReport:
    """
    Outcome of one capacity solve.

    Attributes:
        value (float): Q(u*), or None when the solver did not converge
        iterations (int): CG iterations plus active-set rounds
        residual (float): KKT residual of the returned iterate
        active_set_size (int): Mask points held at u = 1
        half_width (float): Grid half-width L
        points (int): Grid size N
        s (float): Regularity of the symbol
        variant (str): 'cap' or 'Cap'
        converged (bool): Whether the tolerances were met
    """

    value: float
    iterations: int
    residual: float
    active_set_size: int
    half_width: float
    points: int
    s: float
    variant: str
    converged: bool

    def to_dict(self):
        return asdict(self)


def _settings(overrides):
    config = get_config('CAPACITY_CONFIG')
    config.update({key: value for key, value in (overrides or {}).items() if value is not None})
    return config


def _operator_scale(grid, u):
    return 2 * grid.dx * float(np.max(grid.symbol)) * max(float(np.max(np.abs(u))), 1.0)


def kkt_residual(grid, mask, u):
    """
    Largest KKT violation of ``u`` for the problem the mask describes.

    Gradient terms are normalized by 2 |A| |u|, so the residual reads as a
    backward error; constraint terms are absolute.

    Args:
        grid (SpectralGrid): The grid
        mask (ConstraintMask): Constraint mask
        u (numpy.ndarray): Grid function

    Returns:
        float: The residual
    """
    gradient = 2 * grid.apply(u)
    scale = _operator_scale(grid, u)
    flags = mask.as_bool(grid.points)
    parts = [0.0]
    if (~flags).any():
        parts.append(float(np.max(np.abs(gradient[~flags]))) / scale)
    slack = u[flags] - 1.0
    if mask.kind == MaskKind.EQUAL_ONE:
        parts.append(float(np.max(np.abs(slack))))
    else:
        multipliers = gradient[flags]
        parts.append(max(0.0, -float(np.min(slack))))
        parts.append(max(0.0, -float(np.min(multipliers))) / scale)
        parts.append(float(np.max(np.abs(multipliers * slack))) / scale)
    return max(parts)


def _solve_equality(grid, fixed, config, initial=None):
    """Minimize Q(u) with u = 1 on ``fixed``; returns (u, iterations, cg_info)."""
    free = ~fixed
    u = fixed.astype(float)
    size = int(free.sum())
    if size == 0:
        return u, 0, 0

    def extend(values):
        full = np.zeros(grid.points)
        full[free] = np.ravel(values)
        return full

    operator = LinearOperator((size, size), matvec=lambda v: grid.apply(extend(v))[free], dtype=float)
    preconditioner = LinearOperator(
        (size, size), matvec=lambda r: grid.apply_inverse(extend(r))[free], dtype=float
    )
    rhs = -grid.apply(u)[free]
    counter = [0]

    def count(_):
        counter[0] += 1

    x0 = None if initial is None else initial[free]
    solution, info = cg(
        operator, rhs, x0=x0, rtol=config['cg_tolerance'], atol=0.0,
        maxiter=config['max_iterations'], M=preconditioner, callback=count,
    )
    u[free] = solution
    logger.debug(f"equality solve: {size} free values, {counter[0]} CG iterations, info={info}")
    return u, counter[0], info


def _check_kind(mask, kind, operation):
    if mask.kind != kind:
        raise ParameterDomainError(f"{operation} needs a {kind.value} mask", f"got {mask.kind.value}")


def _report(grid, mask, u, iterations, active, variant, converged, tolerance):
    residual = kkt_residual(grid, mask, u)
    converged = converged and residual <= tolerance
    value = grid.quadratic_form(u) if converged else None
    if not converged:
        logger.warning(
            f"{variant} solve did not converge on L={grid.half_width}, N={grid.points}, "
            f"s={grid.s}: residual {residual:.3e} after {iterations} iterations"
        )
    return SolveReport(value, iterations, residual, active, grid.half_width, grid.points, grid.s,
                       variant, converged)


def solve_Cap(grid, mask, config=None):  # noqa: N802
    """
    Capacity with the constraint u = 1 on the mask.

    Args:
        grid (SpectralGrid): The grid
        mask (ConstraintMask): An EqualOne mask
        config (dict, optional): Overrides of CAPACITY_CONFIG

    Returns:
        SolveReport: Report with variant 'Cap'
    """
    _check_kind(mask, MaskKind.EQUAL_ONE, 'solve_Cap')
    config = _settings(config)
    u, iterations, info = _solve_equality(grid, mask.as_bool(grid.points), config)
    return _report(grid, mask, u, iterations, len(mask), 'Cap', info == 0, config['kkt_tolerance'])


def _support_weights(kernel, support):
    block = kernel[np.subtract.outer(support, support) % kernel.size]
    return scipy.linalg.solve(block, np.ones(support.size), assume_a='pos')


def _potential(grid, support, weights):
    charge = np.zeros(grid.points)
    charge[support] = weights
    return grid.apply_inverse(charge)


def _dual_active_set(grid, indices, config):
    """
    Lawson-Hanson iteration on max 2 sum(lambda) - lambda.S.lambda, lambda >= 0.

    Returns (u, support, rounds, converged).
    """
    unit = np.zeros(grid.points)
    unit[0] = 1.0
    kernel = grid.apply_inverse(unit)
    support = np.array([], dtype=int)
    weights = np.array([])
    u = np.zeros(grid.points)
    for rounds in range(1, config['max_active_set_rounds'] + 1):
        violation = 1.0 - u[indices]
        violation[np.isin(indices, support)] = -np.inf
        best = int(np.argmax(violation))
        if violation[best] <= config['kkt_tolerance']:
            return u, support, rounds - 1, True
        entering = indices[best]
        support = np.append(support, entering)
        weights = np.append(weights, 0.0)
        for _ in range(support.size):
            target = _support_weights(kernel, support)
            if np.all(target > 0):
                weights = target
                break
            falling = np.flatnonzero(target <= 0)
            ratios = weights[falling] / (weights[falling] - target[falling])
            leaving = falling[int(np.argmin(ratios))]
            if support[leaving] == entering and weights[leaving] == 0:
                logger.warning(f"dual active set stalled at grid index {entering}")
                return u, support[weights > 0], rounds, False
            weights = weights + float(np.min(ratios)) * (target - weights)
            weights[leaving] = 0.0
            keep = weights > 0
            support, weights = support[keep], weights[keep]
        u = _potential(grid, support, weights)
        logger.debug(f"dual active set round {rounds}: support {support.size}")
    return u, support, config['max_active_set_rounds'], False


def solve_cap(grid, mask, config=None):
    """
    Capacity with the obstacle u >= 1 on the mask.

    Args:
        grid (SpectralGrid): The grid
        mask (ConstraintMask): An AtLeastOne mask
        config (dict, optional): Overrides of CAPACITY_CONFIG

    Returns:
        SolveReport: Report with variant 'cap'
    """
    _check_kind(mask, MaskKind.AT_LEAST_ONE, 'solve_cap')
    config = _settings(config)
    flags = mask.as_bool(grid.points)
    u, iterations, info = _solve_equality(grid, flags, config)
    if info != 0:
        return _report(grid, mask, u, iterations, len(mask), 'cap', False, config['kkt_tolerance'])

    multipliers = 2 * grid.apply(u)[flags]
    if np.min(multipliers) >= -config['kkt_tolerance'] * np.max(np.abs(multipliers)):
        logger.debug("equality solution satisfies the obstacle multipliers")
        return _report(grid, mask, u, iterations, len(mask), 'cap', True, config['kkt_tolerance'])

    try:
        u, support, rounds, converged = _dual_active_set(grid, mask.indices, config)
    except scipy.linalg.LinAlgError as exc:
        logger.warning(f"dual active set failed: {exc}")
        return _report(grid, mask, u, iterations, len(mask), 'cap', False, config['kkt_tolerance'])
    logger.info(f"obstacle contact on {support.size} of {len(mask)} mask points after {rounds} rounds")
    return _report(
        grid, mask, u, iterations + rounds, int(support.size), 'cap', converged, config['kkt_tolerance']
    )
