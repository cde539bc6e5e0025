from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase

from nullity_engine.classification import (
    SobolevIndex,
    cheese_certificate,
    cheese_sums,
    cheese_verdict,
    fat_cheese_sum,
)
from nullity_engine.exceptions import ParameterDomainError
from nullity_engine.fractal_sets import fat_cantor_cheese, make_cantor, make_swiss_cheese


def _cloud(radii, multiplicities=None):
    centers = [Fraction(1, 2)] * len(radii)
    return make_swiss_cheese((0, 1), centers, radii, (Fraction(1, 2), Fraction(1, 2)),
                             multiplicities)


class SwissCheeseTestCase(SimpleTestCase):
    """Ball clouds and the cheese certificate"""

    def test_build_and_remove_balls(self):
        cloud = _cloud(['1/8', '1/16'], [1, 3])
        self.assertEqual(cloud.n, 1)
        self.assertEqual(cloud.ball_count, 4)
        self.assertTrue(cloud.positive_measure)

        smaller = cloud.without_ball(1)
        self.assertEqual(smaller.multiplicities, (1, 2))
        emptier = cloud.without_ball(0)
        self.assertEqual(emptier.radii, (Fraction(1, 16),))
        with self.assertRaises(IndexError):
            cloud.without_ball(2)

    def test_invalid_clouds(self):
        with self.assertRaises(ParameterDomainError):
            _cloud(['3/2'])
        with self.assertRaises(ParameterDomainError):
            make_swiss_cheese((0, 1), [], [], (Fraction(9, 10), Fraction(1, 2)))
        with self.assertRaises(ParameterDomainError):
            make_swiss_cheese(((0, 0), (1, 1)), [0.5], ['1/8'], ((0.5, 0.5), '1/4'))

    def test_two_dimensional_cloud(self):
        cloud = make_swiss_cheese(((0, 0), (1, 1)), [(0.25, 0.25)], ['1/16'], ((0.5, 0.5), '1/4'))
        self.assertEqual(cloud.n, 2)
        self.assertAlmostEqual(float(cloud.total_ball_measure), np.pi / 256)

    def test_fat_cantor_cheese_matches_closed_form(self):
        spec = make_cantor('fat', {'alpha': '1/4', 'beta': '1/100'})
        cloud = fat_cantor_cheese(spec, 40)
        self.assertEqual(cloud.ball_count, 2**40 - 1)
        self.assertEqual(cloud.inner_ball.radius, Fraction(1, 2))
        numeric = cloud.radius_power_sum(Fraction(3, 4))
        closed = fat_cheese_sum('1/4', '1/100', '1/8', 2, depth=40)
        self.assertLess(abs(float(numeric - closed)), 1e-10)

    def test_empty_cloud_is_certified(self):
        cloud = make_swiss_cheese((0, 1), [], [], (Fraction(1, 2), Fraction(1, 2)))
        index = SobolevIndex.of('1/4', 2)
        self.assertTrue(cheese_certificate(cloud, index, {'A': 1, 'B': 2}))
        self.assertTrue(cheese_verdict(cloud, index, {'ratio_ab': '1/2'}).is_not_null)

    def test_logarithmic_condition_at_critical_s(self):
        cloud = _cloud(['1/1000'])
        sums = cheese_sums(cloud, SobolevIndex.of('1/2', 2), {'c': 2, 'C': 1})
        self.assertEqual(sums.condition, 'logarithmic')
        self.assertAlmostEqual(float(sums.lhs), 1 / np.log(2000))
        self.assertAlmostEqual(float(sums.rhs), 1 / np.log(4))
        self.assertTrue(sums.holds)

    def test_constants_are_required(self):
        cloud = _cloud(['1/8'])
        with self.assertRaises(ParameterDomainError):
            cheese_sums(cloud, SobolevIndex.of('1/4', 2), {})
        with self.assertRaises(ParameterDomainError):
            cheese_sums(cloud, SobolevIndex.of('1/2', 2), {'c': 1, 'C': 1})
        with self.assertRaises(ParameterDomainError):
            cheese_sums(cloud, SobolevIndex.of('3/4', 2), {'ratio_ab': 1})

    def test_certificate_survives_ball_removal(self):
        rng = np.random.default_rng(20240517)
        index = SobolevIndex.of('1/4', 2)
        constants = {'ratio_ab': 1}
        for _ in range(100):
            count = int(rng.integers(1, 12))
            radii = [Fraction(int(k), 4096) for k in rng.integers(1, 64, size=count)]
            cloud = _cloud(radii)
            if not cheese_certificate(cloud, index, constants):
                continue
            while cloud.radii:
                cloud = cloud.without_ball(int(rng.integers(len(cloud.radii))))
                self.assertTrue(cheese_certificate(cloud, index, constants))
