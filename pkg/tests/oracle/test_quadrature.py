# -*- coding: utf-8 -*-
"""
Test script for plasmabox/oracle/quadrature.py
"""

#==============================================================================
# Importations
#==============================================================================

import math
import unittest
import numpy as np
import plasmabox.oracle as oracle
import plasmabox.meanfield as meanfield
from plasmabox.kernel import GinibreKernel, eval_kernel
from plasmabox.configuration import generate_lattice_disk
from plasmabox.utilities import NonIntegerTraceError


#==============================================================================
# Functions
#==============================================================================

def kernel_values(kernel, z, points):
    """K(z, u) for every u in ``points``."""
    evaluate = np.vectorize(lambda u: eval_kernel(kernel, z, u).to_complex(),
                            otypes=[complex])
    return evaluate(points)


#==============================================================================
# Test Class
#==============================================================================

class PolarQuadratureTestCase(unittest.TestCase):

    def test_polynomials(self):
        for cutoff in [0.5, 2.]:
            with self.subTest(cutoff=cutoff):
                self.assertAlmostEqual(
                    oracle.polar_quadrature(lambda z: np.ones(z.shape),
                                            cutoff),
                    math.pi * cutoff**2, places=12)
                self.assertAlmostEqual(
                    oracle.polar_quadrature(lambda z: np.abs(z)**2, cutoff),
                    math.pi * cutoff**4 / 2, places=12)
                self.assertAlmostEqual(
                    abs(oracle.polar_quadrature(lambda z: z**3, cutoff)),
                    0., places=12)

    def test_reproducing_property(self):
        z, w = 0.2 + 0.1j, -0.15 + 0.05j
        for kernel in [GinibreKernel.infinite(10.),
                       GinibreKernel.for_particles(10., 12)]:
            with self.subTest(infinite=kernel.is_infinite):
                value = oracle.polar_quadrature(
                    lambda u: (kernel_values(kernel, z, u) *
                               np.conj(kernel_values(kernel, w, u))),
                    3., n_radial=128, n_angular=128)
                expected = eval_kernel(kernel, z, w).to_complex()
                self.assertAlmostEqual(abs(value - expected), 0., places=8)


class KernelTraceTestCase(unittest.TestCase):

    def test_integer(self):
        for N in [1., 10.]:
            for j_top in range(11):
                with self.subTest(N=N, j_top=j_top):
                    trace = oracle.kernel_trace(GinibreKernel(N, j_top))
                    self.assertAlmostEqual(trace, j_top + 1, delta=1e-6)

    def test_scale_independence(self):
        first = oracle.kernel_trace(GinibreKernel(1., 4))
        second = oracle.kernel_trace(GinibreKernel(10., 4))
        self.assertAlmostEqual(first, second, delta=1e-9)

    def test_short_cutoff(self):
        self.assertRaises(NonIntegerTraceError, oracle.kernel_trace,
                          GinibreKernel(1., 4), 1.5)

    def test_infinite(self):
        self.assertRaises(AssertionError, oracle.kernel_trace,
                          GinibreKernel.infinite(1.))


class FiniteDifferenceGradientTestCase(unittest.TestCase):

    def test_square_norm(self):
        gradient = oracle.finite_difference_gradient(
            lambda a: a[0]**2 + a[1]**2, [1., 0.])
        self.assertEqual(gradient.shape, (2,))
        self.assertAlmostEqual(gradient[0], 2., delta=1e-9)
        self.assertAlmostEqual(gradient[1], 0., delta=1e-9)

    def test_constant(self):
        gradient = oracle.finite_difference_gradient(lambda a: 3.,
                                                     [0.4, -2.])
        np.testing.assert_array_equal(gradient, np.zeros(2))

    def test_mean_field_gradient(self):
        N = 100.
        cluster = generate_lattice_disk(N, 3, 0.3 - 0.2j)
        problem = meanfield.MeanFieldProblem.from_clusters([cluster], N)

        def energy(a):
            moved = problem.translated(0, complex(a[0], a[1]))
            return meanfield.emf_energy(moved).energy

        numeric = oracle.finite_difference_gradient(energy, [0., 0.])
        exact = meanfield.emf_gradient(problem, 0)
        self.assertLess(abs(complex(*numeric) - exact), 1e-6 * abs(exact))


#==============================================================================
# Main script
#==============================================================================

if __name__ == '__main__':
    """
    Main script for testing.
    """

    unittest.main()
