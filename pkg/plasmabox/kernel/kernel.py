# -*- coding: utf-8 -*-
"""
Ginibre correlation kernels and the scaled kernel matrices.

Class
-----
BackgroundScale :
    Background charge-density scale N.
GinibreKernel :
    Finite (truncated at j_top) or infinite Ginibre kernel.
KernelMatrix :
    Hermitian matrix of prescaled kernel values in log-polar form.

Functions
---------
eval_infinite :
    Translation-covariant kernel K_inf(z, w).
eval_finite :
    Finite kernel K_J(z, w) summed up to j_top.
eval_kernel :
    Evaluates a GinibreKernel, finite or infinite.
kernel_matrix :
    Assembles the prescaled matrix [(pi/N) K(z_i, z_j)].
bound_finite_vs_infinite :
    Edge-decay bound shape of |K_{N+M} - K_inf|.
kernel_modulus_bound :
    Bound exp(-N (|z| - |w|)^2 / 2) on the prescaled finite kernel.

Notes
-----
Index convention: the kernel of J particles sums j = 0..J-1, so that
j_top = J - 1 and the trace of the kernel equals J.
"""

#==============================================================================
# Importations
#==============================================================================

import math
from dataclasses import dataclass
from typing import Optional
import numpy as np
from .incgamma import truncated_exponential_log
from ..numerics.logvalues import PhaseValue, wrap_phase
from ..utilities.errors import (ConfigurationError, DuplicatePointsError,
                                OutsideDropletError)


#==============================================================================
# Global variables
#==============================================================================

KERNEL_INDEX_CONVENTION = 'K_J sums j = 0..J-1 (j_top = J - 1, trace J)'
_CLAMP_LOG_MAG = -745.
_DUPLICATE_TOL = 1e-14


#==============================================================================
# Class
#==============================================================================

@dataclass(frozen=True)
class BackgroundScale:
    """
    Background charge-density scale N.

    Parameters
    ----------
    N : float
        Positive factor of |x|^2 in the confining potential.
    """

    N: float

    def __post_init__(self):
        if not self.N > 0:
            raise ConfigurationError(
                'Background scale must be positive (got {})'.format(self.N))
        object.__setattr__(self, 'N', float(self.N))


def as_scale(scale):
    """Returns ``scale`` as a BackgroundScale."""
    if isinstance(scale, BackgroundScale):
        return scale
    return BackgroundScale(scale)


@dataclass(frozen=True)
class GinibreKernel:
    """
    Finite (truncated at j_top) or infinite Ginibre kernel.

    Parameters
    ----------
    scale : BackgroundScale
    j_top : None or int
        Largest retained index; None for the infinite kernel.
    """

    scale: BackgroundScale
    j_top: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, 'scale', as_scale(self.scale))
        if self.j_top is not None and self.j_top < 0:
            raise ConfigurationError(
                'Kernel top index must be >= 0 (got {})'.format(self.j_top))

    @classmethod
    def for_particles(cls, scale, particles):
        """Kernel of ``particles`` particles (j_top = particles - 1)."""
        return cls(scale, int(particles) - 1)

    @classmethod
    def infinite(cls, scale):
        return cls(scale, None)

    @property
    def is_infinite(self):
        return self.j_top is None

    @property
    def particles(self):
        return None if self.j_top is None else self.j_top + 1


@dataclass(frozen=True)
class KernelMatrix:
    """
    Hermitian matrix of prescaled kernel values in log-polar form.

    Parameters
    ----------
    log_mag : numpy.ndarray
        Logs of the entry moduli, prescale included.
    phase : numpy.ndarray
        Entry arguments; antisymmetric.
    prescale : float
        The factor pi/N applied to every kernel value.
    """

    log_mag: np.ndarray
    phase: np.ndarray
    prescale: float

    @property
    def dim(self):
        return self.log_mag.shape[0]

    def entry(self, i, j):
        return PhaseValue(self.log_mag[i, j], self.phase[i, j])

    def to_complex(self, clamp=_CLAMP_LOG_MAG):
        """
        Returns the complex matrix; entries below ``clamp`` are set to 0.
        """

        with np.errstate(under='ignore'):
            values = np.exp(self.log_mag + 1j * self.phase)
        values[~(self.log_mag >= clamp)] = 0
        return values


#==============================================================================
# Functions
#==============================================================================

def eval_infinite(scale, z, w):
    """
    Translation-covariant kernel K_inf(z, w).

    Parameters
    ----------
    scale : BackgroundScale or float
    z : complex
    w : complex

    Returns
    -------
    value : PhaseValue
        Modulus (N/pi) exp(-N |z - w|^2 / 2), phase N Im(z conj(w)).
    """

    N = as_scale(scale).N
    z, w = complex(z), complex(w)
    log_mag = math.log(N / math.pi) - N / 2 * abs(z - w)**2
    return PhaseValue(log_mag, N * (z * w.conjugate()).imag)


def eval_finite(kernel, z, w):
    """
    Finite kernel K_J(z, w) summed up to j_top.

    Parameters
    ----------
    kernel : GinibreKernel
        Kernel with finite ``j_top``.
    z : complex
    w : complex

    Returns
    -------
    value : PhaseValue
        exp(-N (|z|^2 + |w|^2) / 2) sum_{j <= j_top} N^{j+1} (z conj(w))^j
        / (pi j!).
    """

    assert not kernel.is_infinite, 'eval_finite needs a finite kernel'
    N = kernel.scale.N
    z, w = complex(z), complex(w)
    prefactor = math.log(N / math.pi) - N / 2 * (abs(z)**2 + abs(w)**2)
    series = truncated_exponential_log(kernel.j_top + 1, N * z * w.conjugate())
    return PhaseValue(prefactor + series.log_mag, series.phase)


def eval_kernel(kernel, z, w):
    """
    Evaluates a GinibreKernel, finite or infinite.
    """

    if kernel.is_infinite:
        return eval_infinite(kernel.scale, z, w)
    return eval_finite(kernel, z, w)


def _check_distinct(points):
    if len(points) < 2:
        return
    gaps = np.abs(points[:, None] - points[None, :])
    gaps[np.diag_indices(len(points))] = np.inf
    if gaps.min() <= _DUPLICATE_TOL:
        raise DuplicatePointsError(
            'Kernel matrix points coincide within {}'.format(_DUPLICATE_TOL))


def kernel_matrix(kernel, points):
    """
    Assembles the prescaled matrix [(pi/N) K(z_i, z_j)].

    Parameters
    ----------
    kernel : GinibreKernel
    points : array_like
        Pairwise distinct complex points.

    Returns
    -------
    matrix : KernelMatrix
        Upper triangle evaluated, lower triangle mirrored by conjugation.

    Raises
    ------
    DuplicatePointsError
        If two points coincide within 1e-14.
    """

    points = np.asarray(points, dtype=complex).ravel()
    _check_distinct(points)
    N = kernel.scale.N
    size = len(points)
    prescale = math.pi / N

    if kernel.is_infinite:
        log_mag = -N / 2 * np.abs(points[:, None] - points[None, :])**2
        upper = np.triu(N * (points[:, None] * points[None, :].conj()).imag, 1)
        if size:
            upper = np.vectorize(wrap_phase, otypes=[float])(upper)
        return KernelMatrix(log_mag, upper - upper.T, prescale)

    log_mag = np.empty((size, size))
    phase = np.zeros((size, size))
    shift = math.log(prescale)
    for i in range(size):
        for j in range(i, size):
            value = eval_finite(kernel, points[i], points[j])
            log_mag[i, j] = value.log_mag + shift
            if i != j:
                log_mag[j, i] = log_mag[i, j]
                phase[i, j] = value.phase
                phase[j, i] = -value.phase
    return KernelMatrix(log_mag, phase, prescale)


def bound_finite_vs_infinite(scale, M, z, w, C=1.):
    """
    Edge-decay bound shape of |K_{N+M} - K_inf|.

    Parameters
    ----------
    scale : BackgroundScale or float
    M : int
        Number of pinned charges; the droplet radius is sqrt(1 + M/N).
    z : complex
    w : complex
    C : float, optional (default=1.)
        Unspecified constant of the bound, used as a fitted diagnostic.

    Returns
    -------
    bound : float
        C sqrt(N) exp(-C N (||z| - R| + ||w| - R|)).
    """

    N = as_scale(scale).N
    radius = math.sqrt(1 + M / N)
    if abs(z) >= radius or abs(w) >= radius:
        raise OutsideDropletError(
            'Points must lie inside the droplet of radius {}'.format(radius))
    distance = abs(abs(z) - radius) + abs(abs(w) - radius)
    return C * math.sqrt(N) * math.exp(-C * N * distance)


def kernel_modulus_bound(scale, z, w):
    """
    Bound exp(-N (|z| - |w|)^2 / 2) on the prescaled finite kernel.
    """

    N = as_scale(scale).N
    return math.exp(-N / 2 * (abs(z) - abs(w))**2)
