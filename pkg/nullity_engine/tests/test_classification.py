from fractions import Fraction
from itertools import combinations

import numpy as np
from django.test import SimpleTestCase

from nullity_engine.classification import (
    BoundaryRegularity,
    ConvergenceOutcome,
    Justification,
    SobolevIndex,
    Verdict,
    basic_verdict,
    boundary_verdict,
    cantor_term,
    classify_cantor,
    compare,
    dimension_verdict,
    embedding_implies,
    factor_nullity_transfer,
    fat_beta_range,
    fat_threshold,
    hausdorff_threshold,
    product_bounds,
    series_probe,
    superfat_params,
    tensor_lower,
    tensor_upper,
    threshold_curve,
    threshold_transfer,
    union_verdict,
)
from nullity_engine.classification.verdicts import NullityVerdict
from nullity_engine.exceptions import HypothesisError, ParameterDomainError
from nullity_engine.fractal_sets import make_cantor


class SobolevIndexTestCase(SimpleTestCase):
    """Exact and tolerant threshold comparisons"""

    def test_rationals_stay_exact(self):
        index = SobolevIndex.of('1/3', 3)
        self.assertTrue(index.is_exact)
        self.assertEqual(index.p_conj, Fraction(3, 2))
        self.assertEqual(index.delta_threshold(2), Fraction(-4, 3))
        self.assertEqual(index.interior_threshold(1), Fraction(1, 3))

    def test_compare(self):
        self.assertEqual(compare(Fraction(1, 3), Fraction(1, 3)), 0)
        self.assertEqual(compare(1 / 3, Fraction(1, 3)), 0)
        self.assertEqual(compare(0.5, 0.25), 1)
        self.assertEqual(compare(0.25, 0.25 + 1e-6), -1)

    def test_domain(self):
        for p in (1, 0.5, float('inf')):
            with self.subTest(p=p):
                with self.assertRaises(ParameterDomainError):
                    SobolevIndex.of(0, p)
        with self.assertRaises(TypeError):
            SobolevIndex.of(True, 2)


class BasicFactsTestCase(SimpleTestCase):
    """Elementary facts, dimension and boundary rules"""

    def test_hausdorff_threshold(self):
        self.assertEqual(hausdorff_threshold('1/2', 1, 2), Fraction(-1, 4))
        self.assertEqual(hausdorff_threshold(1, 1, 3), 0)
        with self.assertRaises(ParameterDomainError):
            hausdorff_threshold(2, 1, 2)

    def test_dimension_verdict(self):
        above = dimension_verdict('1/2', 1, SobolevIndex.of(0, 2))
        self.assertEqual(above.justification, Justification.HAUSDORFF_ABOVE)
        below = dimension_verdict('1/2', 1, SobolevIndex.of('-1/2', 2))
        self.assertEqual(below.verdict, Verdict.NOT_NULL)
        at = dimension_verdict('1/2', 1, SobolevIndex.of('-1/4', 2))
        self.assertEqual(at.verdict, Verdict.UNKNOWN)
        self.assertIsNone(at.justification)

    def test_basic_verdicts(self):
        index = SobolevIndex.of(0, 2)
        self.assertTrue(basic_verdict(['countable'], 1, index).is_null)
        self.assertTrue(basic_verdict(['nonempty_interior'], 1, index).is_not_null)
        self.assertTrue(basic_verdict(['inner_measure_zero'], 1, index).is_null)
        positive = basic_verdict(['inner_measure_positive'], 1, index)
        self.assertEqual(positive.justification, Justification.MEASURE_POSITIVE)
        low = basic_verdict(['countable'], 1, SobolevIndex.of(-1, 2))
        self.assertEqual(low.justification, Justification.DELTA_LOW_S)
        high = basic_verdict(['empty_interior'], 2, SobolevIndex.of('3/2', 2))
        self.assertEqual(high.justification, Justification.EMPTY_INTERIOR_HIGH_S)
        self.assertEqual(basic_verdict(['nonempty'], 1, SobolevIndex.of('1/4', 2)).verdict,
                         Verdict.UNKNOWN)

    def test_basic_flags_are_checked(self):
        with self.assertRaises(HypothesisError):
            basic_verdict(['countable', 'nonempty_interior'], 1, SobolevIndex.of(0, 2))
        with self.assertRaises(HypothesisError):
            basic_verdict(['purple'], 1, SobolevIndex.of(0, 2))

    def test_boundary_verdicts(self):
        index = SobolevIndex.of('-1/4', 2)
        self.assertTrue(boundary_verdict('Lipschitz', None, 1, index).is_null)
        self.assertTrue(boundary_verdict(BoundaryRegularity.LIPSCHITZ, None, 1,
                                         SobolevIndex.of(-1, 2)).is_not_null)
        self.assertEqual(boundary_verdict('C0', None, 1, index).verdict, Verdict.UNKNOWN)
        self.assertTrue(boundary_verdict('C0', None, 1, SobolevIndex.of(0, 2)).is_null)
        self.assertTrue(boundary_verdict('C0alpha', '3/4', 1, index).is_null)
        self.assertEqual(boundary_verdict('C0alpha', '1/4', 1, index).verdict, Verdict.UNKNOWN)
        with self.assertRaises(ParameterDomainError):
            boundary_verdict('C0alpha', None, 1, index)
        with self.assertRaises(ParameterDomainError):
            boundary_verdict('smooth', None, 1, index)

    def test_union_verdict(self):
        null = NullityVerdict.null(Justification.BASIC)
        not_null = NullityVerdict.not_null(Justification.BASIC)
        unknown = NullityVerdict.unknown()
        self.assertTrue(union_verdict([null, not_null], SobolevIndex.of(1, 2)).is_not_null)
        self.assertTrue(union_verdict([null, null], SobolevIndex.of(0, 2)).is_null)
        self.assertEqual(union_verdict([null, null], SobolevIndex.of('1/4', 2)).verdict,
                         Verdict.UNKNOWN)
        self.assertEqual(union_verdict([null, unknown], SobolevIndex.of(0, 2)).verdict,
                         Verdict.UNKNOWN)

    def test_embedding_monotonicity(self):
        self.assertTrue(embedding_implies('1/4', 2, '1/2', 2, 1))
        self.assertFalse(embedding_implies('1/2', 2, '1/4', 2, 1))
        # q < p costs n(1/q - 1/p) regularity
        self.assertTrue(embedding_implies(0, 2, '1/6', '3/2', 1))
        self.assertFalse(embedding_implies(0, 2, '1/7', '3/2', 1))
        self.assertTrue(embedding_implies(0, '3/2', 0, 2, 1))

    def test_threshold_transfer(self):
        self.assertEqual(threshold_transfer('1/2', 1, '-1/4', 2, '3/2'), Fraction(-1, 6))
        with self.assertRaises(HypothesisError):
            threshold_transfer('1/2', 1, '-1/5', 2, '3/2')

    def test_threshold_curve_constraints(self):
        r_values = [Fraction(k, 10) for k in range(1, 10)]
        for d in ('0', '1/3', '1/2', '9/10'):
            for n in (1, 2):
                with self.subTest(d=d, n=n):
                    curve = threshold_curve(d, n, r_values)
                    values = [value for _, value in curve]
                    self.assertEqual(curve.kind, 'exact')
                    self.assertEqual(values, sorted(values))
                    self.assertTrue(all(value <= 0 for value in values))
        fat = threshold_curve(make_cantor('fat', {'alpha': '1/4', 'beta': '1/4'}), 1, r_values)
        self.assertEqual(fat.kind, 'lower_bound')
        with self.assertRaises(ParameterDomainError):
            threshold_curve('1/2', 1, [1])


class CantorClassifierTestCase(SimpleTestCase):
    """Nullity of Cantor products"""

    def test_middle_third_threshold(self):
        spec = make_cantor('geometric', {'ratio': '1/3'})
        self.assertTrue(classify_cantor(spec, 1, SobolevIndex.of('-1/10', 2)).is_null)
        self.assertTrue(classify_cantor(spec, 1, SobolevIndex.of('-1/4', 2)).is_not_null)
        self.assertEqual(classify_cantor(spec, 1, SobolevIndex.of(0, 2)).justification,
                         Justification.BASIC)
        self.assertEqual(classify_cantor(spec, 1, SobolevIndex.of(-1, 2)).justification,
                         Justification.DELTA_LOW_S)

    def test_zoo_threshold_rows(self):
        for d in ('1/3', '1/2'):
            for p in (Fraction(3, 2), Fraction(2), Fraction(3)):
                with self.subTest(d=d, p=p):
                    spec = make_cantor('f_d_inf', {'d': d})
                    threshold = hausdorff_threshold(d, 1, p)
                    self.assertTrue(classify_cantor(spec, 1, SobolevIndex(threshold, p)).is_null)
                    spec = make_cantor('f_d_one', {'d': d})
                    verdict = classify_cantor(spec, 1, SobolevIndex(threshold, p))
                    self.assertTrue(verdict.is_not_null)
                    self.assertEqual(verdict.justification, Justification.ZOO_CLOSED_FORM)

    def test_fat_cantor_fourier_membership(self):
        spec = make_cantor('fat', {'alpha': '1/4', 'beta': '1/4'})
        verdict = classify_cantor(spec, 1, SobolevIndex.of('1/5', 2))
        self.assertEqual(verdict.justification, Justification.FOURIER_MEMBERSHIP)
        self.assertEqual(classify_cantor(spec, 1, SobolevIndex.of('3/10', 2)).verdict,
                         Verdict.UNKNOWN)
        self.assertTrue(classify_cantor(spec, 1, SobolevIndex.of('3/4', 2)).is_null)
        self.assertTrue(classify_cantor(spec, 1, SobolevIndex.of(0, 2)).is_not_null)

    def test_explicit_sequences_are_probed(self):
        lengths = [Fraction(1, 3**j) for j in range(60)]
        spec = make_cantor('explicit', {'lengths': lengths})
        self.assertTrue(classify_cantor(spec, 1, SobolevIndex.of('-1/10', 2)).is_null)
        self.assertTrue(classify_cantor(spec, 1, SobolevIndex.of('-3/10', 2)).is_not_null)

    def test_cantor_term(self):
        spec = make_cantor('geometric', {'ratio': '1/4'})
        # (2^-j 4^{j(sp'+1)})^{p-1} with s = -1/4, p = 2: 2^{-j} 4^{j/2} = 1
        self.assertAlmostEqual(float(cantor_term(spec, 1, '-1/4', 2, 5)), 1.0)
        with self.assertRaises(ParameterDomainError):
            cantor_term(spec, 1, 0, 2, 1)
        with self.assertRaises(ParameterDomainError):
            classify_cantor(spec, 2, SobolevIndex.of(0, 2))


class SeriesProbeTestCase(SimpleTestCase):
    """Numeric convergence tests"""

    def test_geometric_series(self):
        result = series_probe(0.5**j for j in range(1, 200))
        self.assertEqual(result.outcome, ConvergenceOutcome.CONVERGES)
        self.assertAlmostEqual(result.measured_ratio, 0.5, places=6)
        self.assertTrue(series_probe(1.01**j for j in range(1, 200)).diverges)

    def test_logarithmic_comparison(self):
        self.assertTrue(series_probe(1.0 / j**2 for j in range(1, 2000)).converges)
        self.assertTrue(series_probe(1 / j for j in range(1, 2000)).diverges)

    def test_short_prefix_is_inconclusive(self):
        result = series_probe([1.0, 0.5, 0.25])
        self.assertEqual(result.outcome, ConvergenceOutcome.INCONCLUSIVE)
        self.assertEqual(result.test, 'insufficient')

    def test_non_positive_terms(self):
        with self.assertRaises(HypothesisError):
            series_probe([1.0, 0.0, 1.0])


class CertificatesTestCase(SimpleTestCase):
    """Closed forms of the fat and super-fat certificates"""

    def test_fat_threshold(self):
        self.assertAlmostEqual(fat_threshold('1/4', 2), 0.25)
        self.assertAlmostEqual(fat_threshold('1/8', 3), (1 - 1 / 3) / 3)
        with self.assertRaises(ParameterDomainError):
            fat_threshold('1/2', 2)

    def test_fat_beta_range(self):
        self.assertAlmostEqual(fat_beta_range('1/4', '1/8', 2), 0.1945, places=4)
        self.assertLess(fat_beta_range('1/4', '1/8', 2, ratio_ab='1/2'),
                        fat_beta_range('1/4', '1/8', 2))
        with self.assertRaises(ParameterDomainError):
            fat_beta_range('1/4', '1/4', 2)

    def test_superfat_parameters(self):
        params = superfat_params(2, 2, 1)
        self.assertEqual(params.delta_min, 2.0)
        gamma = params.gamma_max(4)
        self.assertAlmostEqual(gamma, 4.0 ** -2)
        self.assertTrue(0 < gamma < 1)
        with self.assertRaises(ParameterDomainError):
            params.gamma_max(2)
        with self.assertRaises(ParameterDomainError):
            superfat_params(2, 1, 1)

    def test_superfat_capacity_constant_admits_one(self):
        self.assertEqual(superfat_params(2, 2, 1).C, 1.0)
        self.assertEqual(superfat_params(2, 2, 3).C, 3.0)
        with self.assertRaises(ParameterDomainError) as caught:
            superfat_params(2, 2, 0.5)
        self.assertEqual(caught.exception.constraint, 'C >= 1')


class ProductsTestCase(SimpleTestCase):
    """Product thresholds"""

    def test_point_times_point(self):
        p = Fraction(2)
        point = hausdorff_threshold(0, 1, p)
        bounds = product_bounds(point, point, 1, 1, p, False)
        self.assertEqual(bounds.s_minus, 2 * point)
        self.assertEqual(bounds.s_minus, hausdorff_threshold(0, 2, p))

    def test_dimension_zero_factors_reach_upper_bound(self):
        p = Fraction(3)
        s1 = hausdorff_threshold(0, 1, p)
        bounds = product_bounds(s1, s1, 1, 1, p, False)
        self.assertEqual(bounds.s_plus, s1)
        self.assertEqual(hausdorff_threshold(1, 2, p), bounds.s_plus)

    def test_positive_measure_bounds(self):
        bounds = product_bounds('1/4', '1/2', 1, 1, 2, True)
        self.assertEqual(bounds, (Fraction(1, 4), Fraction(3, 4)))

    def test_tensor_formulas_match_subset_sums(self):
        rng = np.random.default_rng(7)
        for _ in range(1000):
            size = int(rng.integers(1, 13))
            values = [int(v) for v in rng.integers(-5, 6, size=size)]
            sums = [sum(subset) for k in range(1, size + 1) for subset in combinations(values, k)]
            self.assertEqual(tensor_lower(values), min(sums))
            self.assertEqual(tensor_upper(values), max(sums))

    def test_factor_nullity_transfer(self):
        transfer = factor_nullity_transfer('1/4', 1, 2)
        self.assertEqual(transfer.t, Fraction(3, 4))
        self.assertTrue(transfer.inclusive)
        self.assertTrue(transfer.admits(Fraction(3, 4)))
        self.assertFalse(factor_nullity_transfer('1/4', 1, 3).inclusive)
        negative = factor_nullity_transfer('-1/4', 2, 2)
        self.assertEqual(negative.t, Fraction(-1, 4))
        self.assertFalse(negative.admits(Fraction(-1, 4)))
