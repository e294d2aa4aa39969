# -*- coding: utf-8 -*-
"""
Deterministic quadratures and finite differences used as oracles.

Functions
---------
polar_quadrature :
    Integral of f over the disk D(0, cutoff) in polar coordinates.
kernel_trace :
    Integral of K(z, z) over the plane for a finite kernel.
finite_difference_gradient :
    Central-difference gradient of a function of a 2-vector.
"""

#==============================================================================
# Importations
#==============================================================================

import math
import numpy as np
from ..kernel import eval_kernel
from ..utilities.errors import NonIntegerTraceError


#==============================================================================
# Global variables
#==============================================================================

_TRACE_TOL = 1e-3


#==============================================================================
# Functions
#==============================================================================

def polar_quadrature(f, cutoff, n_radial=64, n_angular=64):
    """
    Integral of f over the disk D(0, cutoff) in polar coordinates.

    Parameters
    ----------
    f : callable
        Vectorized function of complex points.
    cutoff : float
        Outer radius.
    n_radial : int, optional (default=64)
        Gauss-Legendre nodes on [0, cutoff].
    n_angular : int, optional (default=64)
        Equispaced angles (exact for trigonometric polynomials of degree
        below n_angular).

    Returns
    -------
    value : float or complex
    """

    nodes, weights = np.polynomial.legendre.leggauss(n_radial)
    r = cutoff * (nodes + 1) / 2
    radial_weights = cutoff / 2 * weights * r
    theta = 2 * np.pi * np.arange(n_angular) / n_angular
    points = r[:, None] * np.exp(1j * theta)[None, :]
    values = np.asarray(f(points))
    total = (2 * np.pi / n_angular) * np.sum(radial_weights[:, None] * values)
    return complex(total) if np.iscomplexobj(total) else float(total)


def kernel_trace(kernel, radial_cutoff=None, quadrature_nodes=200):
    """
    Integral of K(z, z) over the plane for a finite kernel.

    Parameters
    ----------
    kernel : GinibreKernel
        Finite kernel.
    radial_cutoff : None or float, optional (default=None)
        Upper radius; if None, sqrt((J + 12 sqrt(J) + 30) / N) with
        J = j_top + 1, which leaves a Gaussian tail below 1e-10.
    quadrature_nodes : int, optional (default=200)
        Gauss-Legendre nodes in the radius.

    Returns
    -------
    trace : float
        Close to j_top + 1.

    Raises
    ------
    NonIntegerTraceError
        If the result is more than 1e-3 away from an integer.
    """

    assert not kernel.is_infinite, 'The infinite kernel has no finite trace'
    N = kernel.scale.N
    J = kernel.j_top + 1
    if radial_cutoff is None:
        radial_cutoff = math.sqrt((J + 12 * math.sqrt(J) + 30) / N)

    nodes, weights = np.polynomial.legendre.leggauss(quadrature_nodes)
    r = radial_cutoff * (nodes + 1) / 2
    diagonal = np.array([math.exp(eval_kernel(kernel, x, x).log_mag)
                         for x in r])
    trace = math.fsum(radial_cutoff / 2 * 2 * math.pi * weights * r *
                      diagonal)
    if abs(trace - round(trace)) > _TRACE_TOL:
        raise NonIntegerTraceError(
            'Kernel trace {:.8f} is not an integer'.format(trace))
    return trace


def finite_difference_gradient(f, at, step=1e-5):
    """
    Central-difference gradient of a function of a 2-vector.

    Parameters
    ----------
    f : callable
        Real function of a 2-vector (numpy.ndarray of shape (2,)).
    at : array_like
        Point of evaluation.
    step : float, optional (default=1e-5)

    Returns
    -------
    gradient : numpy.ndarray
        Shape (2,), error O(step^2).
    """

    at = np.asarray(at, dtype=float)
    gradient = np.zeros(2)
    for k in range(2):
        shift = np.zeros(2)
        shift[k] = step
        gradient[k] = (f(at + shift) - f(at - shift)) / (2 * step)
    return gradient
