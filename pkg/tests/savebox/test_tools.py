# -*- coding: utf-8 -*-
"""
Test script for plasmabox/savebox/tools.py
"""

#==============================================================================
# Importations
#==============================================================================

import unittest
import os
import shutil
import tempfile
import warnings
import plasmabox.savebox as savebox


#==============================================================================
# Test Class
#==============================================================================

class CheckPathTestCase(unittest.TestCase):

    def setUp(self):
        self.old_cwd = os.getcwd()
        self.folder = tempfile.mkdtemp()
        os.chdir(self.folder)
        self.cwd = os.getcwd()

    def test_run_folders(self):
        tests_map = {'none': (None, self.cwd),
                     'empty hierarchy': ([], self.cwd),
                     'name': ('runs', os.path.join(self.cwd, 'runs')),
                     'hierarchy': (['runs', 'translate', 'N400'],
                                   os.path.join(self.cwd, 'runs',
                                                'translate', 'N400')),
                     'tuple': (('runs', 'battery'),
                               os.path.join(self.cwd, 'runs', 'battery'))}
        for name, (path, expected) in tests_map.items():
            with self.subTest(case=name):
                result = savebox._check_path(path)
                self.assertEqual(result, expected)
                self.assertTrue(os.path.isabs(result))
                self.assertTrue(os.path.isdir(result))

    def test_existing_folder(self):
        first = savebox._check_path(['runs', 'decouple'])
        self.assertEqual(savebox._check_path(first), first)

    def test_wrong_type(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            self.assertIsNone(savebox._check_path(400))
        self.assertTrue(any(issubclass(w.category, UserWarning)
                            for w in caught))

    def tearDown(self):
        os.chdir(self.old_cwd)
        shutil.rmtree(self.folder, ignore_errors=True)


class SplitOutputPathTestCase(unittest.TestCase):

    def setUp(self):
        self.old_cwd = os.getcwd()
        self.folder = tempfile.mkdtemp()
        os.chdir(self.folder)
        self.cwd = os.getcwd()

    def test_split(self):
        tests_map = {'run.csv': (self.cwd, 'run', '.csv'),
                     os.path.join('out', 'run'):
                     (os.path.join(self.cwd, 'out'), 'run', ''),
                     os.path.join('out', 'run.v2.json'):
                     (os.path.join(self.cwd, 'out'), 'run.v2', '.json')}
        for file_path, expected in tests_map.items():
            with self.subTest(i=file_path):
                self.assertEqual(savebox._split_output_path(file_path),
                                 expected)

    def test_folder_created(self):
        folder, _, _ = savebox._split_output_path(
            os.path.join('a', 'b', 'run.csv'))
        self.assertTrue(os.path.isdir(folder))

    def tearDown(self):
        os.chdir(self.old_cwd)
        shutil.rmtree(self.folder, ignore_errors=True)


#==============================================================================
# Main script
#==============================================================================

if __name__ == '__main__':
    """
    Main script for testing.
    """

    unittest.main()
