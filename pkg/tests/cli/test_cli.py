# -*- coding: utf-8 -*-
"""
Test script for plasmabox/cli.py
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
import contextlib
import plasmabox.cli as cli
from plasmabox.configuration import PointCluster
from plasmabox.freeenergy import log_z_pinned


#==============================================================================
# Test Class
#==============================================================================

class MainTestCase(unittest.TestCase):

    def setUp(self):
        self.folder = tempfile.mkdtemp()

    def run_main(self, *argv):
        stdout, stderr = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(stdout), \
                contextlib.redirect_stderr(stderr):
            code = cli.main(list(argv))
        return code, stdout.getvalue(), stderr.getvalue()

    def write_config(self, data, name='config.json'):
        path = os.path.join(self.folder, name)
        with open(path, 'w', encoding='utf-8') as file:
            json.dump(data, file)
        return path

    def test_freeenergy_exact(self):
        code, out, _ = self.run_main('freeenergy', 'exact', '--J', '2',
                                     '--N', '1')
        self.assertEqual(code, 0)
        record = json.loads(out)
        self.assertAlmostEqual(record['log_z'], math.log(2 * math.pi**2),
                               places=13)

    def test_csv_record(self):
        code, out, _ = self.run_main('freeenergy', 'exact', '--J', '2',
                                     '--N', '1', '--format', 'csv')
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], 'key,value')
        self.assertIn('J,2', lines)

    def test_kernel_eval(self):
        code, out, _ = self.run_main('kernel', 'eval', '--N', '10',
                                     '--z', '0', '--w', '0')
        self.assertEqual(code, 0)
        record = json.loads(out)
        self.assertAlmostEqual(record['log_mag'], math.log(10 / math.pi),
                               places=14)
        self.assertIsNone(record['j_top'])

    def test_pinned(self):
        code, out, _ = self.run_main('freeenergy', 'pinned', '--N', '2',
                                     '--points', '0.3')
        self.assertEqual(code, 0)
        expected = log_z_pinned(PointCluster([0.3]), 2)
        self.assertAlmostEqual(json.loads(out)['log_z'],
                               expected.log_z.log_mag, places=12)

    def test_output_file(self):
        path = os.path.join(self.folder, 'exact.json')
        code, out, _ = self.run_main('freeenergy', 'exact', '--J', '3',
                                     '--N', '3', '--out', path)
        self.assertEqual(code, 0)
        self.assertEqual(out, '')
        with open(path, 'r', encoding='utf-8') as file:
            self.assertEqual(json.load(file)['J'], 3)

    def test_split_needs_two_clusters(self):
        code, _, err = self.run_main('meanfield', 'split', '--N', '100',
                                     '--points', '0.1', '0.2')
        self.assertEqual(code, 2)
        self.assertIn('ConfigurationError', err)

    def test_experiment_passes(self):
        path = self.write_config({'experiment': 'rotate',
                                  'scale_grid': [50, 100]})
        out_path = os.path.join(self.folder, 'rotate.csv')
        code, _, err = self.run_main('experiment', 'rotate', '--config',
                                     path, '--out', out_path)
        self.assertEqual(code, 0)
        self.assertIn('rotate N=50', err)
        with open(out_path, 'r', encoding='utf-8') as file:
            lines = file.read().splitlines()
        self.assertTrue(lines[0].startswith('#'))
        self.assertEqual(len([line for line in lines
                              if not line.startswith('#')]), 1 + 2 * 5)

    def test_acceptance_failure(self):
        path = self.write_config({'experiment': 'translate',
                                  'scale_grid': [50, 100],
                                  'kernel_mode': 'infinite',
                                  'tolerances': {'final_residual': 0.}})
        code, out, err = self.run_main('experiment', 'translate',
                                       '--config', path)
        self.assertEqual(code, 1)
        self.assertTrue(out.startswith('#'))
        self.assertIn('AcceptanceFailure', err)

    def test_invalid_configurations(self):
        tests_map = {
            'mismatched experiment': (
                'translate', {'experiment': 'rotate'}, []),
            'grid not increasing': (
                'rotate', {'experiment': 'rotate',
                           'scale_grid': [100, 100]}, []),
            'negative seed': (
                'rotate', {'experiment': 'rotate'}, ['--seed', '-1']),
            'workers': (
                'rotate', {'experiment': 'rotate'}, ['--workers', '0'])}
        for name, (command, data, extra) in tests_map.items():
            with self.subTest(case=name):
                path = self.write_config(data)
                code, _, _ = self.run_main('experiment', command,
                                           '--config', path, *extra)
                self.assertEqual(code, 2)

    def test_missing_config(self):
        code, _, _ = self.run_main('experiment', 'rotate', '--config',
                                   os.path.join(self.folder, 'none.json'))
        self.assertEqual(code, 2)

    def tearDown(self):
        shutil.rmtree(self.folder, ignore_errors=True)


class BuildParserTestCase(unittest.TestCase):

    def test_groups(self):
        parser = cli.build_parser()
        tests_map = {('kernel', 'eval', '--N', '1', '--z', '0', '--w', '0'):
                     'kernel',
                     ('oracle', 'battery'): 'oracle',
                     ('experiment', 'ginibre-asymptotics'): 'experiment'}
        for argv, group in tests_map.items():
            with self.subTest(argv=argv):
                args = parser.parse_args(list(argv))
                self.assertEqual(args.group, group)
                self.assertTrue(callable(args.handler))

    def test_unknown_command(self):
        with contextlib.redirect_stderr(io.StringIO()):
            self.assertRaises(SystemExit, cli.build_parser().parse_args,
                              ['experiment', 'melt'])


#==============================================================================
# Main script
#==============================================================================

if __name__ == '__main__':
    """
    Main script for testing.
    """

    unittest.main()
