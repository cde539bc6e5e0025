import csv
import json
import math
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase


class NullityCommandTestCase(SimpleTestCase):
    """Test case for the nullity management command"""

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)
        self.root = Path(self.directory.name)

    def config(self, name, payload):
        path = self.root / name
        path.write_text(json.dumps(payload))
        return str(path)

    def test_zoo_subset(self):
        out = StringIO()
        path = self.config('zoo.json', {'filters': {'family': ['f_d_inf'], 'p': ['2']}})
        call_command('nullity', 'zoo', '--config', path, '--threads', '2', stdout=out)
        lines = out.getvalue().splitlines()
        self.assertTrue(lines[0].startswith('family,d,p_star,n,p,s_rule,s_offset,s,expected,verdict'))
        self.assertGreater(len(lines), 1)
        self.assertTrue(all(line.endswith(',True') for line in lines[1:]))

    def test_zoo_mismatch_exit_code(self):
        table = self.root / 'zoo.csv'
        table.write_text(
            'family,d,p_star,n,p,s_rule,s_offset,expected\n'
            'e_zero,0,1.5,1,1.25,threshold,0,NotNull\n'
        )
        err = StringIO()
        path = self.config('zoo.json', {'table': str(table)})
        with self.assertRaises(CommandError) as context:
            call_command('nullity', 'zoo', '--config', path, stdout=StringIO(), stderr=err)
        self.assertEqual(context.exception.returncode, 2)
        self.assertIn('e_zero', err.getvalue())

    def test_classify(self):
        out = StringIO()
        path = self.config('classify.json', {
            'kind': 'cantor', 's': 0, 'p': 2, 'family': 'geometric', 'params': {'ratio': '1/3'},
        })
        call_command('nullity', 'classify', '--config', path, stdout=out)
        report = json.loads(out.getvalue())
        self.assertEqual(report['verdict'], 'Null')
        self.assertEqual(report['justification'], 'Basic')

    def test_classify_as_csv(self):
        out = StringIO()
        path = self.config('classify.json', {'kind': 'dimension', 's': '-1/2', 'p': 2, 'd': '1/2'})
        call_command('nullity', 'classify', '--config', path, '--format', 'csv', stdout=out)
        rows = list(csv.DictReader(StringIO(out.getvalue())))
        self.assertEqual(len(rows), 1)
        self.assertEqual(rows[0]['verdict'], 'NotNull')

    def test_invalid_config(self):
        path = self.config('classify.json', {'kind': 'cantor', 's': 0, 'p': 2})
        with self.assertRaises(CommandError) as context:
            call_command('nullity', 'classify', '--config', path, stdout=StringIO())
        self.assertEqual(context.exception.returncode, 4)

    def test_unreadable_config(self):
        broken = self.root / 'broken.json'
        broken.write_text('{not json')
        with self.assertRaises(CommandError) as context:
            call_command('nullity', 'classify', '--config', str(broken), stdout=StringIO())
        self.assertEqual(context.exception.returncode, 4)

    def test_parameter_domain_exit_code(self):
        path = self.config('classify.json', {
            'kind': 'cantor', 's': 0, 'p': 2, 'family': 'geometric', 'params': {'ratio': '3/5'},
        })
        with self.assertRaises(CommandError) as context:
            call_command('nullity', 'classify', '--config', path, stdout=StringIO())
        self.assertEqual(context.exception.returncode, 4)

    def test_appendix_b_to_file(self):
        target = self.root / 'out' / 'comparison.json'
        path = self.config('comparison.json', {'include_grid': False})
        call_command('nullity', 'appendix-b', '--config', path, '--out', str(target),
                     stdout=StringIO())
        documents = json.loads(target.read_text())
        self.assertEqual([doc['a'] for doc in documents], [1, 2])
        self.assertEqual(documents[0]['Cap_exact'], '6')

    def test_cap_comparison_alias(self):
        path = self.config('comparison.json', {'include_grid': False, 'epsilons': ['1/10', '1/100']})
        primary, alias = StringIO(), StringIO()
        call_command('nullity', 'appendix-b', '--config', path, stdout=primary)
        call_command('nullity', 'cap-comparison', '--config', path, stdout=alias)
        self.assertEqual(primary.getvalue(), alias.getvalue())

    def test_level_set_as_json(self):
        out = StringIO()
        path = self.config('level.json', {
            'cantor': {'family': 'geometric', 'params': {'ratio': '1/3'}}, 'depth': 2,
        })
        call_command('nullity', 'level-set', '--config', path, stdout=out)
        document = json.loads(out.getvalue())
        self.assertEqual(document['cantor'], {'family': 'geometric', 'params': {'ratio': '1/3'}, 'n': 1})
        self.assertEqual(document['intervals'], [
            [[0, 1], [1, 9]], [[2, 9], [1, 3]], [[2, 3], [7, 9]], [[8, 9], [1, 1]],
        ])
        self.assertEqual(document['total_length'], '4/9')

    def test_level_set_as_csv(self):
        out = StringIO()
        path = self.config('level.json', {
            'cantor': {'family': 'geometric', 'params': {'ratio': '1/3'}}, 'depth': 1,
        })
        call_command('nullity', 'level-set', '--config', path, '--format', 'csv', stdout=out)
        lines = out.getvalue().splitlines()
        self.assertEqual(lines, ['index,left,right,length', '0,0,1/3,1/3', '1,2/3,1,1/3'])

    def test_level_set_rejects_unknown_family(self):
        path = self.config('level.json', {'cantor': {'family': 'vicsek'}, 'depth': 1})
        with self.assertRaises(CommandError) as context:
            call_command('nullity', 'level-set', '--config', path, stdout=StringIO())
        self.assertEqual(context.exception.returncode, 4)

    def test_spectrum_csv(self):
        out = StringIO()
        path = self.config('spectrum.json', {'intervals': [[[0, 1], [1, 1]]], 'xi': [0, 1]})
        call_command('nullity', 'spectrum', '--config', path, stdout=out)
        rows = list(csv.DictReader(StringIO(out.getvalue())))
        self.assertEqual(out.getvalue().splitlines()[0], 'xi,re,im')
        self.assertEqual(len(rows), 2)
        scale = 1 / math.sqrt(2 * math.pi)
        self.assertAlmostEqual(float(rows[0]['re']), scale, places=12)
        self.assertEqual(float(rows[0]['im']), 0.0)
        self.assertAlmostEqual(float(rows[1]['re']), math.sin(1) * scale, places=12)
        self.assertAlmostEqual(float(rows[1]['im']), -(1 - math.cos(1)) * scale, places=12)

    def test_spectrum_of_a_prefractal(self):
        out = StringIO()
        path = self.config('spectrum.json', {
            'cantor': {'family': 'fat', 'params': {'alpha': '1/4', 'beta': '1/4'}},
            'depth': 3, 'xi_max': 8, 'points': 5,
        })
        call_command('nullity', 'spectrum', '--config', path, stdout=out)
        rows = list(csv.DictReader(StringIO(out.getvalue())))
        self.assertEqual([float(row['xi']) for row in rows], [0.0, 2.0, 4.0, 6.0, 8.0])
        # 2^3 intervals of length l_3 = 9/128
        self.assertAlmostEqual(float(rows[0]['re']), 8 * 9 / 128 / math.sqrt(2 * math.pi), places=12)

    def test_spectrum_needs_one_source(self):
        path = self.config('spectrum.json', {'xi': [0]})
        with self.assertRaises(CommandError) as context:
            call_command('nullity', 'spectrum', '--config', path, stdout=StringIO())
        self.assertEqual(context.exception.returncode, 4)

    def test_capacity_non_convergence(self):
        out = StringIO()
        path = self.config('capacity.json', {
            's': 2, 'L': 8, 'N': 1024, 'mask': {'intervals': [[-1, 1]]}, 'variant': 'Cap', 'max_iter': 1,
        })
        with self.assertRaises(CommandError) as context:
            call_command('nullity', 'capacity', '--config', path, stdout=out)
        self.assertEqual(context.exception.returncode, 3)
        self.assertFalse(json.loads(out.getvalue())['converged'])
