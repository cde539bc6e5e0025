import json
from fractions import Fraction

import mpmath
from django.test import SimpleTestCase

from nullity_engine.exceptions import ParameterDomainError
from nullity_engine.fractal_sets import IntervalSet, gap, level_set, make_cantor
from nullity_engine.spectral import shift_diff_norm_sq


class IntervalSetTestCase(SimpleTestCase):
    """Exact interval arithmetic"""

    def test_from_pairs_merges_touching_and_overlapping(self):
        intervals = IntervalSet.from_pairs([(3, 4), (1, 2), (0, 1), ('1/2', '3/2')])
        self.assertEqual(intervals.intervals, ((0, 2), (3, 4)))
        self.assertEqual(intervals.total_length(), 3)
        self.assertTrue(intervals.is_exact)

    def test_constructor_rejects_unsorted(self):
        with self.assertRaises(ValueError):
            IntervalSet(((Fraction(2), Fraction(3)), (Fraction(0), Fraction(1))))
        with self.assertRaises(ValueError):
            IntervalSet.from_pairs([(1, 0)])

    def test_symmetric_difference_drops_boundary_points(self):
        first = IntervalSet.from_pairs([(0, 1)])
        second = IntervalSet.from_pairs([('1/2', '3/2')])
        difference = first.symmetric_difference(second)
        self.assertEqual(difference.intervals, ((0, Fraction(1, 2)), (1, Fraction(3, 2))))
        self.assertEqual(difference.total_length(), 1)

    def test_union_intersection_and_nesting(self):
        first = IntervalSet.from_pairs([(0, 1), (2, 3)])
        second = IntervalSet.from_pairs([('1/2', '5/2')])
        self.assertEqual(first.union(second).intervals, ((0, 3),))
        self.assertEqual(first.intersection(second).total_length(), 1)
        self.assertTrue(first.union(second).contains(first))
        self.assertFalse(first.contains(second))

    def test_covers_and_span(self):
        intervals = IntervalSet.from_pairs([(0, 1), (2, 3)])
        self.assertTrue(intervals.covers(Fraction(1)))
        self.assertFalse(intervals.covers(Fraction(3, 2)))
        self.assertEqual(intervals.span(), (0, 3))
        self.assertIsNone(IntervalSet.empty().span())

    def test_mixed_precision_becomes_float_backed(self):
        exact = IntervalSet.from_pairs([(0, 1)])
        backed = IntervalSet.from_pairs([(Fraction(1, 2), 2)], precision_bits=128)
        union = exact.union(backed)
        self.assertFalse(union.is_exact)
        self.assertAlmostEqual(float(union.total_length()), 2.0, places=12)

    def test_shift_difference_of_fat_prefractals(self):
        spec = make_cantor('fat', {'alpha': '1/4', 'beta': '1/4'})
        for j in range(1, 7):
            with self.subTest(j=j):
                step = gap(spec, j)
                self.assertEqual(shift_diff_norm_sq(level_set(spec, j), step), 2 ** (j + 1) * step)


class IntervalSetJsonTestCase(SimpleTestCase):
    """JSON form of interval sets"""

    def test_exact_sets_use_numerator_denominator_pairs(self):
        intervals = IntervalSet.from_pairs([(0, '1/3'), ('2/3', 1)])
        data = intervals.to_json()
        self.assertEqual(data, [[[0, 1], [1, 3]], [[2, 3], [1, 1]]])
        self.assertEqual(json.loads(json.dumps(data)), data)
        self.assertEqual(IntervalSet.from_json(data), intervals)

    def test_level_set_round_trip(self):
        level = level_set(make_cantor('fat', {'alpha': '1/4', 'beta': '1/4'}), 4)
        restored = IntervalSet.from_json(json.loads(json.dumps(level.to_json())))
        self.assertEqual(restored, level)
        self.assertTrue(restored.is_exact)

    def test_float_backed_sets_keep_precision_bits(self):
        intervals = IntervalSet.from_pairs([(0, '1/3'), ('2/3', 1)], precision_bits=128)
        data = json.loads(json.dumps(intervals.to_json()))
        self.assertEqual(data['precision_bits'], 128)
        self.assertTrue(all(isinstance(endpoint, str) for pair in data['intervals'] for endpoint in pair))
        restored = IntervalSet.from_json(data)
        self.assertEqual(restored.precision_bits, 128)
        self.assertEqual(len(restored), 2)
        for (left, right), (left_back, right_back) in zip(intervals, restored):
            self.assertLessEqual(abs(left - left_back), mpmath.mpf(2) ** -120)
            self.assertLessEqual(abs(right - right_back), mpmath.mpf(2) ** -120)

    def test_malformed_json(self):
        for data in ([[[1, 0], [1, 1]]], [[[1, 2], [1, 3]]], {'intervals': [['0', '1']]}, [[[0, 1]]]):
            with self.subTest(data=data):
                with self.assertRaises(ParameterDomainError):
                    IntervalSet.from_json(data)
