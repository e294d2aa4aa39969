# -*- coding: utf-8 -*-
"""
Test script for plasmabox/kernel/kernel.py
"""

#==============================================================================
# Importations
#==============================================================================

import math
import cmath
import unittest
import numpy as np
import plasmabox.kernel as kernel
import plasmabox.numerics as numerics
from plasmabox.utilities import (ConfigurationError, DuplicatePointsError,
                                 OutsideDropletError)


#==============================================================================
# Test Class
#==============================================================================

class BackgroundScaleTestCase(unittest.TestCase):

    def test_positive(self):
        for N in [0., -1.]:
            with self.subTest(N=N):
                self.assertRaises(ConfigurationError,
                                  kernel.BackgroundScale, N)

    def test_as_scale(self):
        scale = kernel.as_scale(3)
        self.assertEqual(scale.N, 3.)
        self.assertIs(kernel.as_scale(scale), scale)


class GinibreKernelTestCase(unittest.TestCase):

    def test_convention(self):
        K = kernel.GinibreKernel.for_particles(10., 12)
        self.assertEqual(K.j_top, 11)
        self.assertEqual(K.particles, 12)
        self.assertFalse(K.is_infinite)
        self.assertTrue(kernel.GinibreKernel.infinite(10.).is_infinite)

    def test_negative_order(self):
        self.assertRaises(ConfigurationError, kernel.GinibreKernel, 1., -1)


class EvalInfiniteTestCase(unittest.TestCase):

    def test_origin(self):
        value = kernel.eval_infinite(1., 0j, 0j)
        self.assertAlmostEqual(value.magnitude, 1 / math.pi, places=15)
        self.assertEqual(value.phase, 0.)

    def test_modulus_and_phase(self):
        value = kernel.eval_infinite(2., 1., 1j)
        self.assertAlmostEqual(value.log_mag, math.log(2 / math.pi) - 2.,
                               places=14)
        self.assertAlmostEqual(value.phase, -2., places=14)

    def test_against_exponential(self):
        N, z, w = 3., 0.2 + 0.4j, -0.3 + 0.1j
        expected = N / math.pi * cmath.exp(
            -N / 2 * (abs(z)**2 + abs(w)**2 - 2 * z * w.conjugate()))
        self.assertAlmostEqual(kernel.eval_infinite(N, z, w).to_complex(),
                               expected, places=14)

    def test_translation_covariance(self):
        rng = np.random.default_rng(5)
        N = 20.
        for i in range(5):
            z, w, a = rng.normal(size=3) + 1j * rng.normal(size=3)
            theta = lambda x: N * (x * a.conjugate()).imag
            moved = kernel.eval_infinite(N, z + a, w + a)
            base = kernel.eval_infinite(N, z, w)
            with self.subTest(i=i):
                self.assertLessEqual(abs(moved.log_mag - base.log_mag),
                                     1e-12 * max(1., abs(base.log_mag)))
                gap = numerics.wrap_phase(moved.phase - base.phase -
                                          theta(z) + theta(w))
                self.assertLess(abs(gap), 1e-10)

    def test_rotation_invariance(self):
        z, w, phi = 0.3 + 0.2j, -0.1 + 0.5j, 0.7
        rotation = cmath.exp(1j * phi)
        base = kernel.eval_infinite(10., z, w)
        rotated = kernel.eval_infinite(10., rotation * z, rotation * w)
        self.assertAlmostEqual(rotated.log_mag, base.log_mag, places=13)
        self.assertAlmostEqual(rotated.phase, base.phase, places=13)


class EvalFiniteTestCase(unittest.TestCase):

    def test_single_term(self):
        N, z, w = 2., 0.3 + 0.1j, -0.5j
        K = kernel.GinibreKernel(N, 0)
        expected = N / math.pi * math.exp(-N / 2 * (abs(z)**2 + abs(w)**2))
        self.assertAlmostEqual(kernel.eval_finite(K, z, w).to_complex(),
                               expected, places=14)

    def test_converges_to_infinite(self):
        K = kernel.GinibreKernel(1., 60)
        finite = kernel.eval_finite(K, 0.5, 0.5).to_complex()
        infinite = kernel.eval_infinite(1., 0.5, 0.5).to_complex()
        self.assertLess(abs(finite - infinite), 1e-12)

    def test_dispatch(self):
        K = kernel.GinibreKernel.for_particles(4., 3)
        self.assertEqual(kernel.eval_kernel(K, 0.1, 0.2),
                         kernel.eval_finite(K, 0.1, 0.2))
        K = kernel.GinibreKernel.infinite(4.)
        self.assertEqual(kernel.eval_kernel(K, 0.1, 0.2),
                         kernel.eval_infinite(4., 0.1, 0.2))

    def test_modulus_bound(self):
        rng = np.random.default_rng(8)
        N = 30.
        K = kernel.GinibreKernel.for_particles(N, 33)
        for i in range(20):
            z, w = rng.uniform(-1, 1, size=2) + 1j * rng.uniform(-1, 1,
                                                                 size=2)
            value = kernel.eval_finite(K, z, w)
            with self.subTest(i=i):
                self.assertLessEqual(
                    value.magnitude * math.pi / N,
                    kernel.kernel_modulus_bound(N, z, w) * (1 + 1e-12))


class KernelMatrixTestCase(unittest.TestCase):

    def test_single_point(self):
        matrix = kernel.kernel_matrix(kernel.GinibreKernel.infinite(1.), [0j])
        self.assertEqual(matrix.dim, 1)
        self.assertAlmostEqual(matrix.to_complex()[0, 0], 1., places=15)

    def test_off_diagonal(self):
        N, d = 5., 0.4
        for i, K in enumerate([kernel.GinibreKernel.infinite(N),
                               kernel.GinibreKernel.for_particles(N, 200)]):
            with self.subTest(i=i):
                matrix = kernel.kernel_matrix(K, [0.1, 0.1 + d])
                self.assertAlmostEqual(matrix.entry(0, 1).magnitude,
                                       math.exp(-N * d**2 / 2), places=12)

    def test_hermitian(self):
        rng = np.random.default_rng(2)
        points = rng.uniform(-0.5, 0.5, 6) + 1j * rng.uniform(-0.5, 0.5, 6)
        for i, K in enumerate([kernel.GinibreKernel.infinite(10.),
                               kernel.GinibreKernel.for_particles(10., 12)]):
            matrix = kernel.kernel_matrix(K, points)
            with self.subTest(i=i):
                np.testing.assert_array_equal(matrix.log_mag,
                                              matrix.log_mag.T)
                np.testing.assert_array_equal(matrix.phase, -matrix.phase.T)
                values = matrix.to_complex()
                self.assertTrue(np.all(np.abs(values.diagonal()) <= 1 +
                                       1e-12))

    def test_gram_positive(self):
        # 50 points in the unit droplet of N = 400, well below its rank
        rng = np.random.default_rng(4)
        radius = np.sqrt(rng.uniform(size=50))
        points = radius * np.exp(2j * np.pi * rng.uniform(size=50))
        matrix = kernel.kernel_matrix(kernel.GinibreKernel.infinite(400.),
                                      points)
        self.assertEqual(numerics.hermitian_logdet(matrix).sign, 1)

    def test_duplicates(self):
        self.assertRaises(DuplicatePointsError, kernel.kernel_matrix,
                          kernel.GinibreKernel.infinite(1.), [0.1, 0.1])

    def test_clamp(self):
        matrix = kernel.kernel_matrix(kernel.GinibreKernel.infinite(100.),
                                      [0j, 10. + 0j])
        self.assertEqual(matrix.to_complex()[0, 1], 0j)


class BoundFiniteVsInfiniteTestCase(unittest.TestCase):

    def test_origin(self):
        expected = 10 * math.exp(-200)
        self.assertLessEqual(
            abs(kernel.bound_finite_vs_infinite(100., 0, 0j, 0j) - expected),
            1e-14 * expected)

    def test_monotone(self):
        values = [kernel.bound_finite_vs_infinite(50., 5, r, r)
                  for r in [0.9, 0.6, 0.3, 0.]]
        self.assertTrue(all(a > b for a, b in zip(values, values[1:])))

    def test_empirical(self):
        N = 50.
        finite = kernel.eval_finite(kernel.GinibreKernel.for_particles(N, 50),
                                    0.3, 0.3).to_complex()
        infinite = kernel.eval_infinite(N, 0.3, 0.3).to_complex()
        self.assertLessEqual(abs(finite - infinite),
                             kernel.bound_finite_vs_infinite(N, 0, 0.3, 0.3,
                                                             C=0.25))

    def test_outside(self):
        self.assertRaises(OutsideDropletError,
                          kernel.bound_finite_vs_infinite, 10., 0, 1.5, 0.)


#==============================================================================
# Main script
#==============================================================================

if __name__ == '__main__':
    """
    Main script for testing.
    """

    unittest.main()
