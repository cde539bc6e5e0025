import json
import math
from fractions import Fraction

from django.test import SimpleTestCase

from nullity_engine.exceptions import ParameterDomainError, PrecisionError
from nullity_engine.fractal_sets import (
    CantorFamily,
    CantorSpec,
    ZOO_FAMILIES,
    gap,
    level_set,
    make_cantor,
    measure_limit,
)


class CantorConstructionTestCase(SimpleTestCase):
    """Length sequences and prefractals"""

    def test_middle_third_set(self):
        spec = make_cantor('geometric', {'ratio': '1/3'})
        self.assertEqual(spec.length(2), Fraction(1, 9))
        self.assertEqual(gap(spec, 1), Fraction(1, 3))
        level = level_set(spec, 2)
        self.assertEqual(len(level), 4)
        self.assertEqual(level.total_length(), Fraction(4, 9))
        self.assertEqual(level.intervals[1], (Fraction(2, 9), Fraction(1, 3)))
        self.assertAlmostEqual(spec.dimension, math.log(2) / math.log(3))

    def test_prefractals_are_nested(self):
        spec = make_cantor('fat', {'alpha': '1/3', 'beta': '1/6'})
        for depth in range(1, 6):
            with self.subTest(depth=depth):
                self.assertTrue(level_set(spec, depth - 1).contains(level_set(spec, depth)))

    def test_fat_level_measure_matches_bookkeeping(self):
        spec = make_cantor('fat', {'alpha': '1/4', 'beta': '1/4'})
        for depth in (0, 3, 8):
            with self.subTest(depth=depth):
                self.assertEqual(level_set(spec, depth).total_length(),
                                 2**depth * spec.length(depth))
        self.assertEqual(measure_limit(spec).value, Fraction(1, 2))
        self.assertTrue(spec.has_positive_measure)

    def test_zoo_rows_have_measure_zero(self):
        spec = make_cantor('f_d_inf', {'d': '1/2'}, n=1)
        limit = measure_limit(spec)
        self.assertTrue(limit.closed_form)
        self.assertEqual(limit.value, 0)
        self.assertIn(CantorFamily.F_D_INF, ZOO_FAMILIES)
        self.assertEqual(spec.length(3), Fraction(1, 64))

    def test_double_exponential_lengths_stay_in_log_space(self):
        spec = make_cantor('f_zero_inf')
        self.assertEqual(spec.length(3), Fraction(1, 2**256))
        with self.assertRaises(PrecisionError):
            spec.length(5)
        self.assertEqual(spec.log2_inverse_length(5), 2**32)

    def test_e_zero_log_lengths(self):
        spec = make_cantor('e_zero', {'p_star': '3/2'})
        self.assertFalse(spec.is_exact)
        self.assertAlmostEqual(float(spec.log2_inverse_length(1)), 2.0, places=12)
        self.assertAlmostEqual(float(spec.log2_inverse_length(2)), 2 / (math.sqrt(2) - 1), places=10)

    def test_f_d_pstar_first_length_below_half(self):
        for d in ('1/3', '1/2', '9/10'):
            with self.subTest(d=d):
                spec = make_cantor('f_d_pstar', {'d': d, 'p_star': '3/2'})
                self.assertGreater(spec.log2_inverse_length(1), 1)

    def test_explicit_sequence(self):
        spec = make_cantor('explicit', {'lengths': [1, '1/3', '1/10']})
        self.assertEqual(spec.max_depth, 2)
        with self.assertRaises(PrecisionError):
            spec.length(3)
        with self.assertRaises(ParameterDomainError):
            make_cantor('explicit', {'lengths': [1, '1/2']})

    def test_parameter_domains(self):
        cases = [
            ('geometric', {'ratio': '1/2'}, '0 < ratio < 1/2'),
            ('fat', {'alpha': '1/4', 'beta': '1/2'}, '0 < beta < 1 - 2*alpha'),
            ('e_d', {'d': 1, 'p_star': 2}, '0 < d < n'),
            ('e_zero', {'p_star': 1}, '1 < p_star'),
            ('fat', {'alpha': '1/4'}, 'needs alpha, beta'),
            ('f_zero_one', {'d': '1/2'}, 'takes only'),
            ('hilbert', {}, 'known Cantor family'),
        ]
        for family, params, constraint in cases:
            with self.subTest(family=family, params=params):
                with self.assertRaises(ParameterDomainError) as caught:
                    make_cantor(family, params)
                self.assertIn(constraint, caught.exception.constraint)

    def test_level_depth_limit(self):
        spec = make_cantor('geometric', {'ratio': '1/3'})
        with self.assertRaises(PrecisionError):
            level_set(spec, 33)


class CantorSpecJsonTestCase(SimpleTestCase):
    """JSON form of Cantor specs"""

    def test_fat_spec(self):
        spec = make_cantor('fat', {'alpha': '1/4', 'beta': '1/8'}, n=2)
        data = spec.to_dict()
        self.assertEqual(data, {'family': 'fat', 'params': {'alpha': '1/4', 'beta': '1/8'}, 'n': 2})
        self.assertEqual(CantorSpec.from_dict(json.loads(json.dumps(data))), spec)

    def test_explicit_lengths(self):
        spec = make_cantor('explicit', {'lengths': [1, '1/3', '1/10']})
        data = spec.to_dict()
        self.assertEqual(data['params'], {'lengths': ['1', '1/3', '1/10']})
        self.assertEqual(CantorSpec.from_dict(data).max_depth, 2)

    def test_log_space_spec_and_its_level_set(self):
        spec = make_cantor('e_d', {'d': '1/3', 'p_star': '3/2'})
        restored = CantorSpec.from_dict(spec.to_dict())
        self.assertEqual(restored, spec)
        level = level_set(restored, 3)
        self.assertFalse(level.is_exact)
        self.assertEqual(level.to_json()['precision_bits'], level.precision_bits)

    def test_from_dict_revalidates(self):
        with self.assertRaises(ParameterDomainError):
            CantorSpec.from_dict({'family': 'geometric', 'params': {'ratio': '1/2'}})
