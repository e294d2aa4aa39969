# -*- coding: utf-8 -*-
"""
Test script for plasmabox/numerics/special.py
"""

#==============================================================================
# Importations
#==============================================================================

import math
import unittest
import numpy as np
import plasmabox.numerics as numerics


#==============================================================================
# Test Class
#==============================================================================

class LogGammaTestCase(unittest.TestCase):

    def test_values(self):
        tests_map = {'one': (1., 0.),
                     'five': (5., math.log(24.)),
                     'half': (0.5, 0.5723649429247001)}
        for name, (x, expected) in tests_map.items():
            with self.subTest(name=name):
                self.assertAlmostEqual(numerics.log_gamma(x), expected,
                                       places=13)

    def test_factorials(self):
        for n in range(1, 30):
            with self.subTest(i=n):
                expected = math.log(math.factorial(n))
                self.assertLessEqual(
                    abs(numerics.log_gamma(n + 1.) - expected),
                    1e-13 * max(1., expected))

    def test_domain_error(self):
        for x in [0., -1.5]:
            with self.subTest(x=x):
                self.assertRaises(ValueError, numerics.log_gamma, x)


class LogFactorialRatioTestCase(unittest.TestCase):

    def test_values(self):
        tests_map = {'empty': ((10, 0), 0.),
                     'single': ((10, 1), math.log(11.)),
                     'three': ((5, 3), math.log(336.))}
        for name, ((n, m), expected) in tests_map.items():
            with self.subTest(name=name):
                self.assertAlmostEqual(numerics.log_factorial_ratio(n, m),
                                       expected, places=13)

    def test_matches_log_gamma(self):
        for i, (n, m) in enumerate([(0, 5), (12, 7), (100, 40)]):
            with self.subTest(i=i):
                expected = (numerics.log_gamma(n + m + 1.) -
                            numerics.log_gamma(n + 1.))
                self.assertLessEqual(
                    abs(numerics.log_factorial_ratio(n, m) - expected),
                    1e-12 * max(1., expected))

    def test_additivity(self):
        rng = np.random.default_rng(3)
        for i in range(20):
            n, m, k = (int(x) for x in rng.integers(0, 1001, size=3))
            with self.subTest(i=i):
                left = (numerics.log_factorial_ratio(n, m) +
                        numerics.log_factorial_ratio(n + m, k))
                right = numerics.log_factorial_ratio(n, m + k)
                self.assertLessEqual(abs(left - right),
                                     1e-12 * max(1., abs(right)))

    def test_negative(self):
        self.assertRaises(ValueError, numerics.log_factorial_ratio, -1, 2)


class SumLogFactorialsTestCase(unittest.TestCase):

    def test_values(self):
        for J in range(1, 12):
            with self.subTest(i=J):
                expected = math.fsum(math.log(math.factorial(k))
                                     for k in range(1, J + 1))
                self.assertAlmostEqual(numerics.sum_log_factorials(J),
                                       expected, places=11)

    def test_empty(self):
        self.assertEqual(numerics.sum_log_factorials(0), 0.)


class ZetaPrimeTestCase(unittest.TestCase):

    def test_value(self):
        self.assertAlmostEqual(numerics.zeta_prime_minus_one(),
                               -0.16542114370045092, places=13)

    def test_glaisher(self):
        self.assertAlmostEqual(math.exp(numerics.glaisher_log()),
                               1.2824271291006226, places=13)

    def test_consistency(self):
        A = math.exp(numerics.glaisher_log())
        self.assertAlmostEqual(
            math.exp(12 * (1 / 12 - numerics.zeta_prime_minus_one())),
            A**12, places=10)


#==============================================================================
# Main script
#==============================================================================

if __name__ == '__main__':
    """
    Main script for testing.
    """

    unittest.main()
