import math
from fractions import Fraction

import mpmath
import numpy as np
from django.test import SimpleTestCase

from nullity_engine.exceptions import HypothesisError, ParameterDomainError
from nullity_engine.fractal_sets import IntervalSet, level_set, make_cantor
from nullity_engine.spectral import (
    QuadratureConfig,
    QuadratureRule,
    chi_hat,
    fat_gap_ratio,
    fat_gap_sum_term,
    fat_membership_bound,
    gap_sum_terms,
    hs2_norm_sq,
    low_frequency_bound,
    norm_sequence,
    shift_diff_norm_sq,
    shift_identity_quadrature,
    sinc,
    spectrum_samples,
)
from nullity_engine.spectral.quadrature import integrate_callable

INV_SQRT_2PI = 1 / math.sqrt(2 * math.pi)
QUARTER = Fraction(1, 4)


class FourierTestCase(SimpleTestCase):
    """Transforms of characteristic functions"""

    def test_symmetric_interval(self):
        unit = IntervalSet.from_pairs([(-1, 1)])
        self.assertAlmostEqual(chi_hat(unit, 0.0), 2 * INV_SQRT_2PI)
        value = chi_hat(unit, 3.0)
        self.assertAlmostEqual(value.real, 2 * math.sin(3.0) / 3.0 * INV_SQRT_2PI)
        self.assertAlmostEqual(value.imag, 0.0)

    def test_translation_is_a_phase(self):
        unit = IntervalSet.from_pairs([(0, 1)])
        xi = np.linspace(-20, 20, 41)
        shifted = chi_hat(unit.shift(Fraction(5, 2)), xi)
        np.testing.assert_allclose(shifted, np.exp(-2.5j * xi) * chi_hat(unit, xi), atol=1e-12)

    def test_sinc_is_continuous_at_the_switch(self):
        below, above = sinc(np.array([0.99e-4, 1.01e-4]))
        self.assertAlmostEqual(below, 1.0, places=8)
        self.assertAlmostEqual(above, math.sin(1.01e-4) / 1.01e-4, places=14)
        self.assertEqual(sinc(0.0), 1.0)

    def test_spectrum_samples(self):
        rows = spectrum_samples(IntervalSet.from_pairs([(0, 1)]), [0.0, 1.0, 2.0])
        self.assertEqual(rows.shape, (3, 3))
        self.assertAlmostEqual(rows[0, 1], INV_SQRT_2PI)
        self.assertAlmostEqual(rows[0, 2], 0.0)


class NormTestCase(SimpleTestCase):
    """Sobolev norms by quadrature"""

    def setUp(self):
        self.quad = QuadratureConfig.from_settings(cutoff=2.0**10)

    def test_plancherel_on_random_interval_sets(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            count = int(rng.integers(1, 9))
            ends = sorted(Fraction(int(k), 64) for k in rng.choice(129, size=2 * count, replace=False))
            intervals = IntervalSet.from_pairs(zip(ends[::2], ends[1::2]))
            estimate = hs2_norm_sq(intervals, 0, self.quad)
            length = float(intervals.total_length())
            self.assertLessEqual(estimate.value, length + 1e-6)
            self.assertGreaterEqual(estimate.value, length - estimate.tail_bound - 1e-9)

    def test_fat_level_at_zero_regularity(self):
        spec = make_cantor('fat', {'alpha': '1/4', 'beta': '1/4'})
        level = level_set(spec, 4)
        estimate = hs2_norm_sq(level, 0, self.quad)
        self.assertAlmostEqual(float(level.total_length()), float(16 * spec.length(4)))
        self.assertLessEqual(abs(estimate.value - float(level.total_length())),
                             estimate.tail_bound + 1e-9)

    def test_intervals_have_no_half_derivative(self):
        estimate = hs2_norm_sq(IntervalSet.from_pairs([(0, 1)]), 0.5, self.quad)
        self.assertTrue(estimate.divergent)
        self.assertEqual(estimate.value, math.inf)
        self.assertEqual(hs2_norm_sq(IntervalSet.empty(), 0.25, self.quad).value, 0.0)

    def test_norm_grows_with_regularity(self):
        unit = IntervalSet.from_pairs([(0, 1)])
        values = [hs2_norm_sq(unit, s, self.quad).value for s in (-0.5, 0.0, 0.25)]
        self.assertEqual(values, sorted(values))

    def test_simpson_rule_agrees(self):
        unit = IntervalSet.from_pairs([(0, 1)])
        simpson = QuadratureConfig.from_settings(cutoff=2.0**8, rule='adaptive-simpson')
        gauss = QuadratureConfig.from_settings(cutoff=2.0**8)
        self.assertEqual(simpson.rule, QuadratureRule.ADAPTIVE_SIMPSON)
        self.assertAlmostEqual(hs2_norm_sq(unit, 0.25, simpson).value,
                               hs2_norm_sq(unit, 0.25, gauss).value, places=6)

    def test_shift_identity(self):
        intervals = IntervalSet.from_pairs([(0, 1), (2, 3)])
        t = Fraction(1, 4)
        exact = shift_diff_norm_sq(intervals, t)
        self.assertEqual(exact, 1)
        estimate = shift_identity_quadrature(intervals, t, self.quad)
        self.assertLessEqual(abs(estimate.value - float(exact)), estimate.tail_bound + 1e-9)

    def test_config_validation(self):
        with self.assertRaises(ParameterDomainError):
            QuadratureConfig(cutoff=0)
        with self.assertRaises(ParameterDomainError):
            QuadratureConfig(points_per_panel=1)

    def test_integrate_callable(self):
        self.assertAlmostEqual(integrate_callable(np.sin, 0, math.pi), 2.0, places=12)

    def test_fat_norms_stay_below_the_majorant(self):
        spec = make_cantor('fat', {'alpha': '1/4', 'beta': '1/4'})
        quad = QuadratureConfig.from_settings(cutoff=2.0**12)
        bound = fat_membership_bound(QUARTER, QUARTER, 0.2)
        self.assertFalse(bound.divergent)
        depths = range(2, 11)
        estimates = norm_sequence([level_set(spec, depth) for depth in depths], 0.2, quad)
        self.assertEqual(len(estimates), len(depths))
        for depth, estimate in zip(depths, estimates):
            self.assertLessEqual(estimate.value, bound.value + low_frequency_bound(spec, 0.2, depth))
        values = [estimate.value for estimate in estimates]
        self.assertLess(abs(values[-1] - values[-2]), 0.05)


class GapSumTestCase(SimpleTestCase):
    """The gap-sum membership criterion"""

    def setUp(self):
        self.spec = make_cantor('fat', {'alpha': '1/4', 'beta': '1/4'})

    def test_consecutive_ratio(self):
        for s in (0.1, 0.2, 0.3):
            with self.subTest(s=s):
                result = gap_sum_terms(self.spec, s, 30)
                expected = fat_gap_ratio(QUARTER, s)
                for ratio in result.ratios():
                    self.assertLess(abs(float(ratio) - expected), 1e-9)

    def test_closed_form_terms(self):
        result = gap_sum_terms(self.spec, 0.2, 6)
        for j, term in enumerate(result.terms, start=2):
            closed = fat_gap_sum_term(QUARTER, QUARTER, 0.2, j)
            self.assertLess(abs(term - closed), mpmath.mpf(10) ** -12 * closed)

    def test_telescoped_tails_agree(self):
        closed = gap_sum_terms(self.spec, 0.2, 12)
        telescoped = gap_sum_terms(self.spec, 0.2, 12, use_closed_form=False)
        for a, b in zip(closed.terms, telescoped.terms):
            self.assertLess(abs(a - b), mpmath.mpf(10) ** -12 * a)

    def test_ratio_is_one_at_the_threshold(self):
        self.assertEqual(fat_gap_ratio(QUARTER, 0.25), 1.0)
        self.assertTrue(fat_membership_bound(QUARTER, QUARTER, 0.25).divergent)

    def test_divergence_above_threshold(self):
        result = gap_sum_terms(self.spec, 0.27, 200)
        self.assertGreater(result.partial_sums[-1], 10**6)

    def test_convergence_below_threshold(self):
        result = gap_sum_terms(self.spec, 0.23, 400)
        self.assertLess(result.partial_sums[-1] - result.partial_sums[-2], 1e-8)

    def test_hypotheses(self):
        with self.assertRaises(ParameterDomainError):
            gap_sum_terms(self.spec, 0, 10)
        with self.assertRaises(ParameterDomainError):
            gap_sum_terms(self.spec, 0.2, 1)
        wide = make_cantor('explicit', {'lengths': [1, '1/3', '1/100', '1/1000']})
        with self.assertRaises(HypothesisError):
            gap_sum_terms(wide, 0.2, 3)
