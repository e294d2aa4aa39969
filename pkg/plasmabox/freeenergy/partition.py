# -*- coding: utf-8 -*-
"""
Exact and asymptotic partition functions, with or without pinned charges.

Class
-----
FreeEnergyReport :
    log Z, F = -log(Z)/2, correlation energy and the named decomposition.

Functions
---------
ginibre_log_z_exact :
    log Z_J of J free particles at scale N.
ginibre_log_z_asymptotic :
    Large-J expansion of -log Z_J.
ginibre_constant_estimate :
    Constant term of -log Z_N isolated from the exact value.
a_mn :
    A(M, N) = log((N+M)!/N!) - M log(N/pi), exact or asymptotic.
log_z_pinned :
    log Z_N with pinned charges, from the determinantal formula.
correlation_energy :
    F^Corr = -log(Z)/2 - E^MF.

Notes
-----
Z_J is the integral of prod_{j<k} |z_j - z_k|^2 exp(-N sum |z_j|^2) against
Lebesgue measure. With ``area_measure='reduced'`` the asymptotic expansions
are written for d^2z / pi, which removes J log(pi) from -log Z_J.

With pinned charges w (M of them) and N free particles,
    log Z_N(w) = log Z_{N+M} + 2 H_N(w) - A(M, N)
                 + log det[(pi/N) K_{N+M}(w_i, w_j)],
where H_N is pinned_hamiltonian. The infinite kernel may replace K_{N+M}.
"""

#==============================================================================
# Importations
#==============================================================================

import math
from dataclasses import dataclass, field
from .series import ExpansionSeries
from ..numerics import (LogValue, sum_log_factorials, log_factorial_ratio,
                        hermitian_logdet, zeta_prime_minus_one)
from ..kernel import GinibreKernel, as_scale, kernel_matrix
from ..configuration import PointCluster, all_effective_points, \
    pinned_hamiltonian
from ..meanfield import MeanFieldProblem, emf_energy
from ..utilities.errors import ConfigurationError, SingularMatrixError


#==============================================================================
# Global variables
#==============================================================================

_AREA_MEASURES = ('lebesgue', 'reduced')
_KERNEL_MODES = ('finite', 'infinite')
_INTEGER_TOL = 1e-9


#==============================================================================
# Class
#==============================================================================

@dataclass(frozen=True)
class FreeEnergyReport:
    """
    log Z, F = -log(Z)/2, correlation energy and the named decomposition.

    Parameters
    ----------
    log_z : LogValue
    f : float
        F_N = -log(Z)/2.
    f_corr : float
        F_N - E^MF (E^MF at scale N^2, J = N).
    decomposition : dict(str: float)
        'log_z_ginibre', 'two_hamiltonian', 'a_mn', 'log_det' and
        'mean_field'.
    kernel_mode : str
    """

    log_z: LogValue
    f: float
    f_corr: float
    decomposition: dict = field(default_factory=dict)
    kernel_mode: str = 'finite'

    def to_dict(self):
        return {'log_z': self.log_z.log_mag, 'log_z_sign': self.log_z.sign,
                'f': self.f, 'f_corr': self.f_corr,
                'kernel_mode': self.kernel_mode,
                'decomposition': dict(self.decomposition)}


#==============================================================================
# Functions
#==============================================================================

def _check_area_measure(area_measure):
    if area_measure not in _AREA_MEASURES:
        raise ConfigurationError(
            "Unknown area measure '{}' (expected one of {})".format(
                area_measure, _AREA_MEASURES))


def _as_count(N):
    """Returns N as an int, checking that it is integral."""

    count = int(round(N))
    if abs(N - count) > _INTEGER_TOL or count < 1:
        raise ConfigurationError(
            'N must be a positive integer here (got {})'.format(N))
    return count


def ginibre_log_z_exact(J, scale):
    """
    log Z_J of J free particles at scale N.

    Parameters
    ----------
    J : int
        Number of particles (J >= 1).
    scale : BackgroundScale or float

    Returns
    -------
    value : float
        J log(pi) + sum_{k=1}^J log k! - (J(J+1)/2) log N.
    """

    N = as_scale(scale).N
    assert J >= 1, 'At least one particle is needed (got J={})'.format(J)
    return (J * math.log(math.pi) + sum_log_factorials(J) -
            J * (J + 1) / 2 * math.log(N))


def ginibre_log_z_asymptotic(J, scale, area_measure='lebesgue'):
    """
    Large-J expansion of -log Z_J.

    Parameters
    ----------
    J : int
        Number of particles (J >= 2).
    scale : BackgroundScale or float
    area_measure : {'lebesgue', 'reduced'}, optional (default='lebesgue')

    Returns
    -------
    value : float
        Expansion evaluated at J, to compare with -ginibre_log_z_exact.
    series : ExpansionSeries
        Series in the variable J, for the fixed ratio t = J/N:
        -(J(J+1)/2) log t + 3J^2/4 - (J/2) log J - (log(2 pi)/2 - 1) J
        - (5/12) log J - zeta'(-1) - log(2 pi)/2, minus J log(pi) for the
        Lebesgue measure.
    """

    _check_area_measure(area_measure)
    assert J >= 2, 'The expansion needs J >= 2 (got J={})'.format(J)
    log_t = math.log(J / as_scale(scale).N)
    coeff_N = -(math.log(2 * math.pi) / 2 - 1) - log_t / 2
    if area_measure == 'lebesgue':
        coeff_N -= math.log(math.pi)
    series = ExpansionSeries(
        coeff_N2=0.75 - log_t / 2, coeff_NlogN=-0.5, coeff_N=coeff_N,
        coeff_logN=-5 / 12,
        coeff_const=-zeta_prime_minus_one() - math.log(2 * math.pi) / 2,
        scale=J)
    return series.evaluate(), series


def ginibre_constant_estimate(N, area_measure='lebesgue'):
    """
    Constant term of -log Z_N isolated from the exact value.

    Parameters
    ----------
    N : int
        Number of particles, equal to the scale.
    area_measure : {'lebesgue', 'reduced'}, optional (default='lebesgue')

    Returns
    -------
    estimate : float
        -log Z_N minus the non-constant terms of the expansion; it tends to
        -zeta'(-1) - log(2 pi)/2.
    """

    _, series = ginibre_log_z_asymptotic(N, N, area_measure)
    exact = -ginibre_log_z_exact(N, N)
    if area_measure == 'reduced':
        exact += N * math.log(math.pi)
    return exact - series.without_constant().evaluate()


def a_mn(M, N, mode='exact'):
    """
    A(M, N) = log((N+M)!/N!) - M log(N/pi), exact or asymptotic.

    Parameters
    ----------
    M : int
    N : int
    mode : {'exact', 'asymptotic'}, optional (default='exact')
        The asymptotic form is (1+c) N log(1+c) - c N (1 - log pi)
        + log(1+c)/2 with c = M/N.

    Returns
    -------
    value : float
    """

    if mode == 'exact':
        return log_factorial_ratio(N, M) - M * math.log(N / math.pi)
    if mode == 'asymptotic':
        c = M / N
        return ((1 + c) * N * math.log1p(c) - c * N * (1 - math.log(math.pi))
                + math.log1p(c) / 2)
    raise ConfigurationError("Unknown A(M, N) mode '{}'".format(mode))


def _kernel_for(mode, N, particles):
    if mode == 'finite':
        return GinibreKernel.for_particles(N, particles)
    if mode == 'infinite':
        return GinibreKernel.infinite(N)
    raise ConfigurationError(
        "Unknown kernel mode '{}' (expected one of {})".format(
            mode, _KERNEL_MODES))


def log_z_pinned(clusters, scale, kernel_mode='finite'):
    """
    log Z_N with pinned charges, from the determinantal formula.

    Parameters
    ----------
    clusters : PointCluster or list(PointCluster)
    scale : BackgroundScale or float
        Scale N, also the number of free particles (integral).
    kernel_mode : {'finite', 'infinite'}, optional (default='finite')
        K_{N+M} or its translation-covariant limit.

    Returns
    -------
    report : FreeEnergyReport

    Raises
    ------
    DuplicatePointsError
    SingularMatrixError
        If the pinned-charge determinant is not positive.
    """

    if isinstance(clusters, PointCluster):
        clusters = [clusters]
    clusters = list(clusters)
    N = _as_count(as_scale(scale).N)
    points = all_effective_points(clusters)
    M = len(points)

    log_z_ginibre = ginibre_log_z_exact(N + M, N)
    two_hamiltonian = 2 * pinned_hamiltonian(clusters, N) if M else 0.
    a_term = a_mn(M, N, 'exact')
    kernel = _kernel_for(kernel_mode, N, N + M)
    logdet = hermitian_logdet(kernel_matrix(kernel, points))
    if logdet.sign != 1:
        raise SingularMatrixError(
            'Pinned-charge determinant is not positive (sign {})'.format(
                logdet.sign))

    log_z = LogValue(math.fsum([log_z_ginibre, two_hamiltonian, -a_term,
                                logdet.log_mag]), 1)
    mean_field = emf_energy(MeanFieldProblem.from_clusters(clusters, N))
    f = -log_z.log_mag / 2
    decomposition = {'log_z_ginibre': log_z_ginibre,
                     'two_hamiltonian': two_hamiltonian,
                     'a_mn': a_term,
                     'log_det': logdet.log_mag,
                     'mean_field': mean_field.energy}
    return FreeEnergyReport(log_z, f, f - mean_field.energy, decomposition,
                            kernel_mode)


def correlation_energy(clusters, scale, kernel_mode='finite'):
    """
    F^Corr = -log(Z)/2 - E^MF.
    """

    return log_z_pinned(clusters, scale, kernel_mode).f_corr
