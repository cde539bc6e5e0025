from fractions import Fraction
from unittest.mock import patch

from django.test import SimpleTestCase
from rest_framework import status
from rest_framework.test import APIClient

from api.serializers import CantorSpecSerializer, IntervalSetField, SpectrumConfigSerializer
from nullity_engine.fractal_sets import IntervalSet, make_cantor


class APIEndpointsTestCase(SimpleTestCase):
    """Test case for the nullity engine API endpoints"""

    def setUp(self):
        self.client = APIClient()

    def test_hausdorff_threshold_is_exact(self):
        response = self.client.get('/api/hausdorff-threshold/', {'d': '1/2', 'n': 1, 'p': 2})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.json()['threshold'], '-1/4')

    def test_hausdorff_threshold_rejects_dimension_above_n(self):
        response = self.client.get('/api/hausdorff-threshold/', {'d': 2, 'n': 1, 'p': 2})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('0 <= d <= n', response.json()['error'])

    def test_product_bounds(self):
        query = {'s1': '1/4', 's2': '1/2', 'n1': 1, 'n2': 1, 'p': 2}
        response = self.client.get('/api/product-bounds/', query)
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.json(), {'s_minus': '1/4', 's_plus': '1/4'})

        response = self.client.get('/api/product-bounds/', {**query, 'positive_measure': 'true'})
        self.assertEqual(response.json()['s_plus'], '3/4')

    def test_classify_cantor(self):
        payload = {'kind': 'cantor', 'family': 'geometric', 'params': {'ratio': '1/3'},
                   's': 0, 'p': 2}
        response = self.client.post('/api/classify/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.json()['verdict'], 'Null')
        self.assertEqual(response.json()['justification'], 'Basic')

    def test_classify_dimension_below_threshold(self):
        payload = {'kind': 'dimension', 'd': '1/2', 's': '-1/2', 'p': 2}
        response = self.client.post('/api/classify/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.json()['verdict'], 'NotNull')
        self.assertEqual(response.json()['justification'], 'HausdorffBelow')

    def test_classify_requires_fields_of_its_kind(self):
        response = self.client.post('/api/classify/', {'kind': 'cantor', 's': 0, 'p': 2},
                                    format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

    def test_unknown_fields_are_rejected(self):
        payload = {'kind': 'dimension', 'd': '1/2', 's': 0, 'p': 2, 'colour': 'red'}
        response = self.client.post('/api/classify/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('colour', response.json())

    def test_booleans_are_not_numbers(self):
        payload = {'kind': 'dimension', 'd': '1/2', 's': True, 'p': 2}
        response = self.client.post('/api/classify/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('s', response.json())

    def test_engine_errors_become_400(self):
        payload = {'kind': 'cantor', 'family': 'geometric', 'params': {'ratio': '3/5'},
                   's': 0, 'p': 2}
        response = self.client.post('/api/classify/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('0 < ratio < 1/2', response.json()['error'])

    def test_threshold_curve(self):
        payload = {'source': {'d': '1/2'}, 'n': 1, 'r_values': ['1/2', '1/4']}
        response = self.client.post('/api/threshold-curve/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        rows = response.json()
        self.assertEqual([row['r'] for row in rows], ['1/4', '1/2'])
        self.assertEqual(rows[1]['S'], '-1/4')
        self.assertTrue(all(row['kind'] == 'exact' for row in rows))

    def test_threshold_curve_needs_one_source(self):
        payload = {'source': {'d': '1/2', 'family': 'geometric'}, 'r_values': ['1/2']}
        response = self.client.post('/api/threshold-curve/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

    def test_cheese_certificate_for_fat_cantor(self):
        payload = {
            'fat': {'alpha': '1/8', 'beta': '1/10', 'depth': 4},
            's': '1/4', 'p': 2, 'constants': {'ratio_ab': 1},
        }
        response = self.client.post('/api/cheese-certificate/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        body = response.json()
        self.assertEqual(body['condition'], 'power')
        self.assertTrue(body['certificate'])
        self.assertEqual(body['verdict']['verdict'], 'NotNull')
        self.assertLess(body['lhs'], body['rhs'])

    def test_cheese_certificate_missing_constants(self):
        payload = {'fat': {'alpha': '1/8', 'beta': '1/10', 'depth': 4}, 's': '1/4', 'p': 2}
        response = self.client.post('/api/cheese-certificate/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('ratio_ab', response.json()['error'])

    def test_cap_comparison_without_grid(self):
        response = self.client.get('/api/cap-comparison/')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        first, second = response.json()
        self.assertEqual(Fraction(str(first['Cap_exact'])), 6)
        self.assertEqual(Fraction(str(second['Cap_exact'])), 8)
        self.assertEqual(first['trial'], 'trial_quadratic')
        self.assertEqual(second['trial'], 'trial_cubicgap')
        self.assertGreater(Fraction(first['margin']), 0)
        self.assertGreater(Fraction(second['margin']), 0)
        self.assertAlmostEqual(second['cubicgap_slope'], -11 / 3, places=2)
        self.assertNotIn('cap_grid_value', first)

    def test_cap_comparison_epsilon_list(self):
        response = self.client.get('/api/cap-comparison/', {'epsilons': '1/10,1/100'})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.json()[0]['best_epsilon'], '1/10')

    def test_appendix_b_route(self):
        primary = self.client.get('/api/appendix-b/', {'epsilons': '1/10'})
        alias = self.client.get('/api/cap-comparison/', {'epsilons': '1/10'})
        self.assertEqual(primary.status_code, status.HTTP_200_OK)
        self.assertEqual(primary.json(), alias.json())

    def test_level_set(self):
        payload = {'cantor': {'family': 'geometric', 'params': {'ratio': '1/3'}}, 'depth': 1}
        response = self.client.post('/api/level-set/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        data = response.json()
        self.assertEqual(data['intervals'], [[[0, 1], [1, 3]], [[2, 3], [1, 1]]])
        self.assertEqual(data['total_length'], '2/3')

    def test_level_set_rejects_invalid_spec(self):
        payload = {'cantor': {'family': 'geometric', 'params': {'ratio': '1/2'}}, 'depth': 1}
        response = self.client.post('/api/level-set/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('cantor', response.json())

    @patch('api.views.ExperimentService.classify')
    def test_unexpected_failures_become_500(self, mock_classify):
        mock_classify.side_effect = RuntimeError('boom')
        payload = {'kind': 'dimension', 's': 0, 'p': 2, 'd': '1/2'}
        with self.assertLogs('api.views', level='ERROR'):
            response = self.client.post('/api/classify/', payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_500_INTERNAL_SERVER_ERROR)
        self.assertEqual(response.json(), {'error': 'Internal error'})


class SetSerializersTestCase(SimpleTestCase):
    """Test case for the interval set and Cantor spec serializers"""

    def test_interval_set_field(self):
        serializer = SpectrumConfigSerializer(data={'intervals': [[[0, 1], [1, 2]]], 'xi': [0]})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        intervals = serializer.validated_data['intervals']
        self.assertEqual(intervals, IntervalSet.from_pairs([(0, '1/2')]))
        self.assertEqual(IntervalSetField().to_representation(intervals), [[[0, 1], [1, 2]]])

    def test_interval_set_field_with_precision_bits(self):
        payload = {'intervals': [['0.25', '0.5']], 'precision_bits': 64}
        intervals = IntervalSetField().to_internal_value(payload)
        self.assertEqual(intervals.precision_bits, 64)
        self.assertEqual(float(intervals.total_length()), 0.25)

    def test_interval_set_field_rejects_unsorted(self):
        serializer = SpectrumConfigSerializer(
            data={'intervals': [[[2, 1], [3, 1]], [[0, 1], [1, 1]]], 'xi': [0]}
        )
        self.assertFalse(serializer.is_valid())
        self.assertIn('intervals', serializer.errors)

    def test_cantor_spec_serializer_round_trip(self):
        serializer = CantorSpecSerializer(data={'family': 'fat', 'params': {'alpha': '1/4', 'beta': '1/4'}})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        spec = serializer.validated_data
        self.assertEqual(spec, make_cantor('fat', {'alpha': '1/4', 'beta': '1/4'}))
        self.assertEqual(CantorSpecSerializer(spec).data,
                         {'family': 'fat', 'params': {'alpha': '1/4', 'beta': '1/4'}, 'n': 1})

    def test_cantor_spec_serializer_rejects_unknown_keys(self):
        serializer = CantorSpecSerializer(data={'family': 'fat', 'params': {}, 'depth': 3})
        self.assertFalse(serializer.is_valid())
        self.assertIn('depth', serializer.errors)
