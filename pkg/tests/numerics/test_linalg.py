# -*- coding: utf-8 -*-
"""
Test script for plasmabox/numerics/linalg.py
"""

#==============================================================================
# Importations
#==============================================================================

import math
import cmath
import unittest
import numpy as np
import plasmabox.numerics as numerics
from plasmabox.utilities import NotHermitianError, SingularMatrixError


#==============================================================================
# Test Class
#==============================================================================

class HermitianLogdetTestCase(unittest.TestCase):

    def test_identity(self):
        logdet = numerics.hermitian_logdet(np.eye(3))
        self.assertEqual(logdet.sign, 1)
        self.assertAlmostEqual(logdet.log_mag, 0., places=15)

    def test_diagonal(self):
        logdet = numerics.hermitian_logdet(np.diag([2., 3.]))
        self.assertEqual(logdet.sign, 1)
        self.assertAlmostEqual(logdet.log_mag, math.log(6.), places=15)

    def test_near_identity(self):
        q = math.exp(-8) * cmath.exp(0.3j)
        matrix = np.array([[1, q], [q.conjugate(), 1]])
        logdet = numerics.hermitian_logdet(matrix)
        self.assertAlmostEqual(logdet.log_mag, math.log1p(-math.exp(-16)),
                               places=15)

    def test_empty(self):
        logdet = numerics.hermitian_logdet(np.zeros((0, 0)))
        self.assertEqual((logdet.log_mag, logdet.sign), (0., 1))

    def test_indefinite_fallback(self):
        logdet = numerics.hermitian_logdet(np.diag([2., -3.]))
        self.assertEqual(logdet.sign, -1)
        self.assertAlmostEqual(logdet.log_mag, math.log(6.), places=14)

    def test_not_hermitian(self):
        matrix = np.array([[1., 0.5], [0.2, 1.]])
        self.assertRaises(NotHermitianError, numerics.hermitian_logdet,
                          matrix)

    def test_singular(self):
        self.assertRaises(SingularMatrixError, numerics.hermitian_logdet,
                          np.ones((2, 2)))

    def test_rank_deficient_message(self):
        repeated = np.array([[2., 1., 2.], [1., 2., 1.], [2., 1., 2.]])
        self.assertRaisesRegex(SingularMatrixError, 'rank deficient',
                               numerics.hermitian_logdet, repeated)

    def test_scaled_gram(self):
        rng = np.random.default_rng(7)
        for i in range(3):
            V = (rng.normal(size=(8, 6)) + 1j * rng.normal(size=(8, 6)))
            base = V.conj().T @ V
            s = rng.uniform(0, 100, size=6)
            D = np.diag(np.exp(-s))
            gram = D @ base @ D
            expected = np.linalg.slogdet(base)[1] - 2 * s.sum()
            with self.subTest(i=i):
                logdet = numerics.hermitian_logdet(gram)
                self.assertEqual(logdet.sign, 1)
                self.assertLessEqual(abs(logdet.log_mag - expected),
                                     1e-8 * abs(expected))


#==============================================================================
# Main script
#==============================================================================

if __name__ == '__main__':
    """
    Main script for testing.
    """

    unittest.main()
