# -*- coding: utf-8 -*-
"""
Test script for plasmabox/experiments/drivers.py
"""

#==============================================================================
# Importations
#==============================================================================

import io
import os
import json
import math
import shutil
import tempfile
import unittest
import plasmabox.experiments as experiments
from plasmabox.experiments import drivers
from plasmabox.utilities import NumericalError


#==============================================================================
# Functions
#==============================================================================

def make_config(experiment, **kwargs):
    data = {'experiment': experiment}
    data.update(kwargs)
    return experiments.ExperimentConfig.from_dict(data)


#==============================================================================
# Test Class
#==============================================================================

class ShrinksTestCase(unittest.TestCase):

    def test_values(self):
        tests_map = {(3., 2., 1.): True,
                     (1., 2.): False,
                     (1., 1.): False,
                     (1e-12, 2e-12): True,
                     (-3., 2., -1.): True,
                     (): True,
                     (0.5,): True}
        for values, expected in tests_map.items():
            with self.subTest(values=values):
                self.assertEqual(experiments.shrinks(list(values)), expected)


class ExperimentResultTestCase(unittest.TestCase):

    def test_verdict(self):
        result = experiments.ExperimentResult('rotate', ['N'], [],
                                              {'passed': True})
        self.assertTrue(result.passed)
        self.assertEqual(result.exit_code, 0)
        result.summary['passed'] = False
        self.assertEqual(result.exit_code, 1)

    def test_non_finite_rows(self):
        self.assertRaises(NumericalError, drivers._finish, 'rotate',
                          [{'N': 100, 'residual': float('nan')}],
                          {'passed': True})


class RunTranslateTestCase(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.config = make_config('translate', scale_grid=[50, 100],
                                 kernel_mode='infinite')
        cls.result = experiments.run_translate(cls.config)

    def test_rows(self):
        translations = self.config.sweep['translations']
        self.assertEqual(len(self.result.rows), 2 * len(translations))
        self.assertEqual([row['N'] for row in self.result.rows],
                         [50] * len(translations) + [100] * len(translations))
        self.assertEqual([row['M'] for row in self.result.rows[::5]], [1, 2])

    def test_zero_translation(self):
        for row in self.result.rows:
            if row['abs_a'] == 0.:
                with self.subTest(N=row['N']):
                    self.assertEqual(row['residual'], 0.)

    def test_invariance(self):
        for row in self.result.rows:
            with self.subTest(N=row['N'], a=(row['a_re'], row['a_im'])):
                self.assertLess(abs(row['residual']), 1e-7)

    def test_forced_failure(self):
        config = self.config.with_overrides(
            tolerances={'final_residual': 0.})
        result = experiments.run_translate(config)
        self.assertFalse(result.passed)
        self.assertEqual(result.exit_code, 1)

    def test_workers(self):
        result = experiments.run_translate(
            self.config.with_overrides(workers=2))
        self.assertEqual(result.rows, self.result.rows)


class RunTranslateFiniteTestCase(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.result = experiments.run_translate(make_config('translate'))

    def test_residuals_above_floor(self):
        residuals = self.result.summary['max_residual']
        self.assertEqual(len(residuals), 3)
        for N, value in zip([100, 200, 400], residuals):
            with self.subTest(N=N):
                self.assertGreater(value, 1e-10)

    def test_strict_decrease(self):
        residuals = self.result.summary['max_residual']
        for i in range(len(residuals) - 1):
            with self.subTest(i=i):
                self.assertLess(residuals[i + 1], residuals[i])
        self.assertLess(residuals[-1], 0.05)
        self.assertTrue(self.result.passed)


class RunRotateTestCase(unittest.TestCase):

    def test_invariance(self):
        result = experiments.run_rotate(make_config('rotate',
                                                    scale_grid=[50, 100]))
        self.assertEqual(len(result.rows), 2 * 5)
        for row in result.rows:
            with self.subTest(N=row['N'], phi=row['phi']):
                self.assertLess(abs(row['residual']), 1e-8)
        self.assertTrue(result.passed)


class RunDecoupleTestCase(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.config = make_config('decouple', scale_grid=[50, 100])
        cls.result = experiments.run_decouple(cls.config)

    def test_order(self):
        separations = self.config.sweep['separations']
        self.assertEqual([(row['N'], row['d']) for row in self.result.rows],
                         [(N, d) for N in [50, 100] for d in separations])

    def test_nonpositive(self):
        for row in self.result.rows:
            with self.subTest(N=row['N'], d=row['d']):
                self.assertLessEqual(row['gap'], 1e-10)
        self.assertTrue(self.result.summary['nonpositive_gap'])

    def test_single_points(self):
        for row in self.result.rows:
            if row['N'] == 50:
                with self.subTest(d=row['d']):
                    self.assertEqual((row['M_a'], row['M_b']), (1, 1))
                    self.assertAlmostEqual(row['gap'], row['two_point_gap'],
                                           delta=1e-10)


class RunMultiholeTestCase(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.config = make_config('multihole', scale_grid=[100, 200])
        cls.result = experiments.run_multihole(cls.config)

    def test_columns(self):
        for row in self.result.rows:
            with self.subTest(N=row['N']):
                self.assertAlmostEqual(row['lhs'], row['f_corr_all'] -
                                       row['f_corr_sum'], places=10)
                terms = [row[key] for key in self.result.columns
                         if key.startswith('term_')]
                self.assertEqual(len(terms), 7)
                self.assertAlmostEqual(row['prediction'], math.fsum(terms),
                                       places=10)
                self.assertAlmostEqual(row['residual'],
                                       row['lhs'] - row['prediction'],
                                       places=10)

    def test_charge_term(self):
        expected = (math.log1p(0.02) - 2 * math.log1p(0.01)) / 24
        for row in self.result.rows:
            with self.subTest(N=row['N']):
                self.assertAlmostEqual(row['term_charges'], expected,
                                       places=15)

    def test_cluster_order(self):
        centers = self.config.cluster['centers']
        swapped = self.config.with_overrides(
            cluster={'generator': 'lattice', 'centers': centers[::-1]})
        result = experiments.run_multihole(swapped)
        for row, other in zip(self.result.rows, result.rows):
            with self.subTest(N=row['N']):
                self.assertAlmostEqual(row['lhs'], other['lhs'], delta=1e-8)


class RunGinibreAsymptoticsTestCase(unittest.TestCase):

    def test_default(self):
        result = experiments.run_ginibre_asymptotics(
            make_config('ginibre-asymptotics'))
        self.assertEqual([row['N'] for row in result.rows],
                         [50, 100, 200, 400, 800])
        self.assertTrue(result.summary['shrinking'])
        self.assertTrue(result.passed)


class RunOracleBatteryTestCase(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.config = make_config('oracle-battery', samples=10**4,
                                 tolerances={'trace': 0.})
        cls.first = experiments.run_oracle_battery(cls.config)
        cls.second = experiments.run_oracle_battery(cls.config)

    def test_items(self):
        names = [row['name'] for row in self.first.rows]
        self.assertEqual(len(names), 26)
        self.assertEqual(len(set(names)), 26)
        self.assertEqual(self.first.summary['items'], 26)
        self.assertIn('mc_partition.ginibre', names)
        self.assertIn('lowdet_bound_check[N=400]', names)

    def test_forced_failure(self):
        failed = self.first.summary['failed']
        self.assertIn('kernel_trace[N=1.0]', failed)
        self.assertIn('kernel_trace[N=10.0]', failed)
        self.assertFalse(self.first.passed)
        self.assertEqual(self.first.exit_code, 1)

    def test_deterministic_items(self):
        rows = {row['name']: row for row in self.first.rows}
        for name in ['decoupling_gap_two_points', 'brute_force_det_expansion',
                     'cancellation_check', 'mf_identity_check',
                     'lowdet_bound_check[N=100]',
                     'lowdet_bound_check[N=200]']:
            with self.subTest(name=name):
                self.assertTrue(rows[name]['passed'])

    def test_reproducible(self):
        self.assertEqual(experiments.render_result(self.first, self.config),
                         experiments.render_result(self.second, self.config))

    def test_json_output(self):
        record = json.loads(experiments.render_result(self.first,
                                                      self.config))
        self.assertEqual(record['experiment'], 'oracle-battery')
        self.assertEqual(record['header']['configuration']['seed'], 0)
        self.assertIn('numpy', record['header']['dependencies'])


class WriteResultTestCase(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.config = make_config('decouple', scale_grid=[50, 100])
        cls.result = experiments.run_decouple(cls.config)

    def setUp(self):
        self.folder = tempfile.mkdtemp()

    def test_stream(self):
        stream = io.StringIO()
        self.assertIsNone(experiments.write_result(self.result, self.config,
                                                   stream))
        lines = stream.getvalue().splitlines()
        header = [line for line in lines if line.startswith('#')]
        body = [line for line in lines if not line.startswith('#')]
        self.assertTrue(any(line.startswith('# Summary: ')
                            for line in header))
        self.assertEqual(body[0], ','.join(self.result.columns))
        self.assertEqual(len(body), 1 + len(self.result.rows))

    def test_file(self):
        output = os.path.join(self.folder, 'runs', 'decouple.csv')
        config = self.config.with_overrides(output=output)
        path = experiments.write_result(self.result, config)
        self.assertEqual(path, output)
        with open(path, 'r', encoding='utf-8') as file:
            self.assertEqual(file.read(), experiments.render_result(
                self.result, config))

    def tearDown(self):
        shutil.rmtree(self.folder, ignore_errors=True)


#==============================================================================
# Main script
#==============================================================================

if __name__ == '__main__':
    """
    Main script for testing.
    """

    unittest.main()
