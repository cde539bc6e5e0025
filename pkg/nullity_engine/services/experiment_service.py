"""
Experiment Service - runs the batch experiments behind the CLI and the API

Configs arrive as plain dicts already checked against the schemas in
``api.serializers``; each method returns rows or a document ready for the
export service.
"""

import logging
from fractions import Fraction

import numpy as np

from nullity_engine.capacity import (
    MaskKind,
    best_trial,
    build_grid,
    constant_norm_sq,
    mask_from_ball,
    mask_from_intervals,
    solve_Cap,
    solve_cap,
    trial_cubicgap,
    trial_quadratic,
    trial_slope,
)
from nullity_engine.capacity.scaling import ball_scaling_exponent, estimate_AB_ratio
from nullity_engine.classification import (
    SobolevIndex,
    basic_verdict,
    boundary_verdict,
    cheese_sums,
    cheese_verdict,
    classify_cantor,
    dimension_verdict,
    threshold_curve,
)
from nullity_engine.exceptions import ConfigurationError
from nullity_engine.fractal_sets import (
    CantorSpec,
    IntervalSet,
    fat_cantor_cheese,
    level_set,
    make_cantor,
    make_swiss_cheese,
)
from nullity_engine.services.export_service import spectrum_rows
from nullity_engine.spectral import (
    QuadratureConfig,
    fat_gap_ratio,
    fat_membership_bound,
    gap_sum_terms,
    low_frequency_bound,
    norm_sequence,
)

logger = logging.getLogger(__name__)

CLASSIFY_KINDS = ('cantor', 'dimension', 'boundary', 'basic')
DEFAULT_EPSILONS = tuple(Fraction(1, 10**k) for k in range(1, 7))
COMPARISON_HALF_WIDTHS = (1, 2)


class ExperimentService:
    """
    Service for the experiment commands
    """

    @staticmethod
    def classify(kind, payload):
        """
        Answer one nullity query.

        Args:
            kind (str): One of ``CLASSIFY_KINDS``
            payload (dict): Query fields, always with ``s`` and ``p``

        Returns:
            NullityVerdict: The verdict
        """
        index = SobolevIndex.of(payload['s'], payload['p'])
        n = int(payload.get('n', 1))
        if kind == 'cantor':
            spec = make_cantor(payload['family'], payload.get('params') or {}, n)
            return classify_cantor(spec, n, index)
        if kind == 'dimension':
            return dimension_verdict(payload['d'], n, index)
        if kind == 'boundary':
            return boundary_verdict(payload['regularity'], payload.get('alpha'), n, index)
        if kind == 'basic':
            return basic_verdict(payload.get('flags', []), n, index)
        raise ConfigurationError(f"unknown classify kind {kind!r}; expected one of {CLASSIFY_KINDS}")

    @staticmethod
    def norm_sweep(config):
        """
        Norms of fat Cantor prefractals and the gap-sum series for each s.

        Returns:
            list: Rows with ``kind`` 'norm' (one per s and J) or 'gap_sum'
                (one per s and j)
        """
        spec = make_cantor('fat', {'alpha': config['alpha'], 'beta': config['beta']})
        overrides = {'cutoff': config['cutoff']} if config.get('cutoff') else {}
        quad = QuadratureConfig.from_settings(**overrides)
        rows = []
        for s in config['s_values']:
            s = float(s)
            bound = fat_membership_bound(spec.param('alpha'), spec.param('beta'), s)
            depths = config['depths']
            estimates = norm_sequence([level_set(spec, depth) for depth in depths], s, quad)
            for depth, estimate in zip(depths, estimates):
                rows.append({
                    'kind': 'norm', 's': s, 'index': depth, 'value': estimate.value,
                    'tail_bound': estimate.tail_bound, 'cutoff': estimate.cutoff,
                    'divergent': estimate.divergent,
                    'majorant': bound.value + low_frequency_bound(spec, s, depth),
                })
            gap_depth = config.get('gap_depth')
            if gap_depth and s > 0:
                result = gap_sum_terms(spec, s, gap_depth)
                ratio = fat_gap_ratio(spec.param('alpha'), s)
                for j, (term, partial) in enumerate(zip(result.terms, result.partial_sums), start=2):
                    rows.append({
                        'kind': 'gap_sum', 's': s, 'index': j, 'value': term,
                        'partial_sum': partial, 'ratio': ratio,
                    })
            logger.info(f"norm sweep finished s={s}")
        return rows

    @staticmethod
    def _cantor(source):
        if isinstance(source, CantorSpec):
            return source
        return CantorSpec.from_dict(source)

    @classmethod
    def level_set(cls, config):
        """
        The level-J prefractal of a Cantor spec.

        Returns:
            dict: The spec, the depth, the interval set in its JSON form and
                its total length
        """
        spec = cls._cantor(config['cantor'])
        intervals = level_set(spec, config['depth'])
        logger.info(f"level {config['depth']} of {spec.family.label}: {len(intervals)} intervals")
        return {
            'cantor': spec.to_dict(), 'depth': config['depth'],
            'intervals': intervals.to_json(), 'total_length': intervals.total_length(),
        }

    @classmethod
    def spectrum_intervals(cls, config):
        if 'intervals' in config:
            intervals = config['intervals']
            return intervals if isinstance(intervals, IntervalSet) else IntervalSet.from_json(intervals)
        return level_set(cls._cantor(config['cantor']), config['depth'])

    @classmethod
    def spectrum(cls, config):
        """
        Samples of the Fourier transform of an interval set or a prefractal.

        Frequencies are ``xi`` when given, otherwise ``points`` evenly spaced
        values on [0, xi_max].

        Returns:
            list: Rows ``xi, re, im``
        """
        if config.get('xi'):
            xi = np.array([float(value) for value in config['xi']])
        else:
            xi = np.linspace(0.0, float(config['xi_max']), int(config.get('points', 257)))
        return spectrum_rows(cls.spectrum_intervals(config), xi)

    @staticmethod
    def _mask(grid, mask_config, kind, padding):
        if 'intervals' in mask_config:
            return mask_from_intervals(grid, mask_config['intervals'], kind, padding)
        ball = mask_config['ball']
        return mask_from_ball(grid, ball['center'], ball['radius'], kind, padding)

    @classmethod
    def capacity(cls, config):
        """
        One capacity solve, with an optional refinement on (2L, 2N).

        Returns:
            dict: The SolveReport fields plus ``refinement`` when requested
        """
        variant = config.get('variant', 'cap')
        kind = MaskKind.AT_LEAST_ONE if variant == 'cap' else MaskKind.EQUAL_ONE
        solver = solve_cap if variant == 'cap' else solve_Cap
        solver_config = {'kkt_tolerance': config.get('tol'), 'max_iterations': config.get('max_iter')}

        def run(half_width, points):
            grid = build_grid(half_width, points, config['s'])
            return solver(grid, cls._mask(grid, config['mask'], kind, config.get('padding')),
                          solver_config)

        report = run(config.get('L'), config.get('N'))
        document = report.to_dict()
        if config.get('refine') and report.converged:
            refined = run(2 * report.half_width, 2 * report.points)
            document['refinement'] = {
                'L': refined.half_width, 'N': refined.points, 'value': refined.value,
                'delta': None if refined.value is None else refined.value - report.value,
            }
        return document

    @staticmethod
    def scaling(config):
        grid_cfg = {key: config[key] for key in ('half_width', 'points', 'padding') if config.get(key)}
        fit = ball_scaling_exponent(config['s'], config.get('radii'), grid_cfg)
        rows = fit.rows()
        if config.get('ab_ratio'):
            ratio = estimate_AB_ratio(config['s'], fit.radii, grid_cfg)
            for row in rows:
                row['ab_ratio'] = ratio
        return rows

    @staticmethod
    def _cloud(config):
        if 'fat' in config:
            fat = config['fat']
            spec = make_cantor('fat', {'alpha': fat['alpha'], 'beta': fat['beta']})
            return fat_cantor_cheese(spec, int(fat['depth']))
        cloud = config['cloud']
        inner = cloud['inner_ball']
        return make_swiss_cheese(
            cloud['domain'], cloud.get('centers', []), cloud.get('radii', []),
            (inner['center'], inner['radius']), cloud.get('multiplicities'),
            cloud.get('dense_centers', False),
        )

    @classmethod
    def cheese(cls, config, seed=None):
        """
        Evaluate the Swiss-cheese certificate and, when ``removal_trials`` is
        set, check that it survives random ball removals.

        Returns:
            dict: Sums, certificate, verdict and the removal check summary
        """
        cloud = cls._cloud(config)
        index = SobolevIndex.of(config['s'], config['p'])
        constants = config.get('constants') or {}
        sums = cheese_sums(cloud, index, constants)
        document = {
            'balls': cloud.ball_count, 'condition': sums.condition, 'lhs': sums.lhs, 'rhs': sums.rhs,
            'certificate': sums.holds, 'verdict': cheese_verdict(cloud, index, constants),
        }
        trials = int(config.get('removal_trials') or 0)
        if trials:
            document['removal_check'] = cls._removal_check(
                cloud, index, constants, trials, int(config.get('removals', 5)), seed
            )
        return document

    @staticmethod
    def _removal_check(cloud, index, constants, trials, removals, seed):
        rng = np.random.default_rng(seed)
        base = cheese_sums(cloud, index, constants).holds
        violations = 0
        for _ in range(trials):
            current = cloud
            for _ in range(removals):
                if not current.radii:
                    break
                current = current.without_ball(int(rng.integers(len(current.radii))))
                if base and not cheese_sums(current, index, constants).holds:
                    violations += 1
                    break
        logger.info(f"cheese removal check: {violations} violations in {trials} trials")
        return {'trials': trials, 'removals': removals, 'seed': seed, 'violations': violations}

    @classmethod
    def cap_comparison(cls, epsilons=None, include_grid=True, grid_config=None):
        """
        The cap < Cap comparison for Omega = (-a, a), s = 2, a in {1, 2}.

        Returns:
            list: One document per a with the exact Cap, the best sampled trial,
                the trial slopes and, with ``include_grid``, grid cap and Cap
        """
        epsilons = tuple(epsilons or DEFAULT_EPSILONS)
        grid_config = grid_config or {}
        documents = []
        for a in COMPARISON_HALF_WIDTHS:
            exact = constant_norm_sq(a)
            trial = trial_quadratic if a * a < 3 else trial_cubicgap
            eps, value = best_trial(trial, a, epsilons)
            document = {
                'a': a, 'Cap_exact': exact, 'trial': trial.__name__, 'best_epsilon': eps,
                'best_trial_value': value, 'margin': exact - value,
                'cubicgap_slope': float(trial_slope(trial_cubicgap, a)) if a > 1 else None,
                'quadratic_slope': float(trial_slope(trial_quadratic, a)) if a * a < 3 else None,
            }
            if include_grid:
                grid = build_grid(grid_config.get('L'), grid_config.get('N'), 2)
                capped = solve_cap(grid, mask_from_intervals(grid, [(-a, a)], MaskKind.AT_LEAST_ONE))
                pinned = solve_Cap(grid, mask_from_intervals(grid, [(-a, a)], MaskKind.EQUAL_ONE))
                document.update({
                    'cap_grid_value': capped.value, 'Cap_grid_value': pinned.value,
                    'grid_converged': capped.converged and pinned.converged,
                })
            documents.append(document)
        return documents

    @staticmethod
    def threshold_curve(config):
        source = config['source']
        n = int(config.get('n', 1))
        if 'family' in source:
            source = make_cantor(source['family'], source.get('params') or {}, n)
        else:
            source = source['d']
        curve = threshold_curve(source, n, config['r_values'])
        return [{'r': r, 'S': value, 'kind': curve.kind} for r, value in curve]
