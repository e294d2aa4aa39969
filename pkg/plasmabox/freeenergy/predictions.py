# -*- coding: utf-8 -*-
"""
Predicted large-N expansions of correlation energies with several holes.

Functions
---------
multihole_prediction_terms :
    Termwise prediction of F^Corr(all holes) - sum_j F^Corr(hole j).
multihole_prediction :
    Sum of multihole_prediction_terms.
conjectured_hole_terms :
    Conjectured expansion of F^Corr for a droplet with n disk holes.
interaction_sums :
    I_Int between every pair of clusters.
multihole_residual :
    F_N(all) minus its splitting into single-cluster free energies.

Notes
-----
Predictions are written in F units (F = -log(Z)/2). With the default
``area_measure='lebesgue'`` every single-droplet F^Corr carries an extra
-(N/2) log(pi), so the multi-hole prediction gains (n - 1)(N/2) log(pi).
"""

#==============================================================================
# Importations
#==============================================================================

import math
import itertools as itr
from .series import ExpansionSeries
from .partition import log_z_pinned, _check_area_measure
from ..numerics import zeta_prime_minus_one
from ..kernel import as_scale
from ..meanfield import interaction_energy, split_bracket
from ..utilities.errors import ChargeMismatchError


#==============================================================================
# Global variables
#==============================================================================

_CHARGE_TOL = 1e-12
_DET_ZETA_WEIGHT = 0.25


#==============================================================================
# Functions
#==============================================================================

def multihole_prediction_terms(N, c_total, c_list, area_measure='lebesgue'):
    """
    Termwise prediction of F^Corr(all holes) - sum_j F^Corr(hole j).

    Parameters
    ----------
    N : float
    c_total : float
        Total charge c, equal to sum(c_list).
    c_list : list(float)
        Charges c_j = M_j / N of the holes.
    area_measure : {'lebesgue', 'reduced'}, optional (default='lebesgue')

    Returns
    -------
    terms : dict(str: float)
        Keys 'NlogN', 'N', 'area_measure', 'logN', 'zeta', 'log2pi' and
        'charges'.

    Raises
    ------
    ChargeMismatchError
        If c_total differs from sum(c_list) by more than 1e-12.
    """

    _check_area_measure(area_measure)
    if abs(c_total - math.fsum(c_list)) > _CHARGE_TOL:
        raise ChargeMismatchError(
            'Total charge {} differs from sum of charges {}'.format(
                c_total, math.fsum(c_list)))
    k = len(c_list) - 1
    log_2pi = math.log(2 * math.pi)
    area = k * N / 2 * math.log(math.pi) if area_measure == 'lebesgue' \
        else 0.
    charges = math.fsum([math.log1p(c_total)] +
                        [-math.log1p(cj) for cj in c_list]) / 24
    return {'NlogN': k / 4 * N * math.log(N),
            'N': k / 2 * (log_2pi / 2 - 1) * N,
            'area_measure': area,
            'logN': 5 * k / 24 * math.log(N),
            'zeta': k * zeta_prime_minus_one() / 2,
            'log2pi': k * log_2pi / 4,
            'charges': charges}


def multihole_prediction(N, c_total, c_list, area_measure='lebesgue'):
    """
    Sum of multihole_prediction_terms.
    """

    return math.fsum(multihole_prediction_terms(N, c_total, c_list,
                                                area_measure).values())


def conjectured_hole_terms(N, n_holes, R, area_measure='lebesgue',
                           hole_labels=None):
    """
    Conjectured expansion of F^Corr for a droplet with n disk holes.

    Parameters
    ----------
    N : float
    n_holes : int
        Number of holes; the Euler characteristic is 1 - n_holes.
    R : float
        Outer radius of the droplet.
    area_measure : {'lebesgue', 'reduced'}, optional (default='lebesgue')
    hole_labels : None or list(str), optional (default=None)
        Labels of the opaque hole determinants; 'H1', 'H2', ... if None.

    Returns
    -------
    series : ExpansionSeries
        Scale N. Each hole contributes log det_zeta(Delta_H) / 4 as an
        opaque symbol.
    """

    _check_area_measure(area_measure)
    assert R > 0, 'Outer radius must be positive (got {})'.format(R)
    assert n_holes >= 0, 'Number of holes must be >= 0'
    if hole_labels is None:
        hole_labels = ['H{}'.format(k + 1) for k in range(n_holes)]
    assert len(hole_labels) == n_holes, 'One label per hole is needed'

    chi = 1 - n_holes
    log_2pi = math.log(2 * math.pi)
    coeff_N = -(log_2pi / 2 - 1) / 2
    if area_measure == 'lebesgue':
        coeff_N -= math.log(math.pi) / 2
    symbols = {}
    for label in hole_labels:
        key = 'log_det_zeta[{}]'.format(label)
        symbols[key] = symbols.get(key, 0.) + _DET_ZETA_WEIGHT
    return ExpansionSeries(
        coeff_NlogN=-0.25, coeff_N=coeff_N, coeff_sqrtN=0.,
        coeff_logN=-(6 - chi) / 24,
        coeff_const=(-log_2pi / 4 - chi * zeta_prime_minus_one() / 2 +
                     math.log(R) / 12),
        symbols=tuple(sorted(symbols.items())), scale=N)


def interaction_sums(clusters):
    """
    I_Int between every pair of clusters.

    Parameters
    ----------
    clusters : list(PointCluster)

    Returns
    -------
    sums : dict(tuple(int, int): float)
        Pairs (j, k) with j < k.
    """

    return {(j, k): interaction_energy(clusters[j], clusters[k])
            for j, k in itr.combinations(range(len(clusters)), 2)}


def multihole_residual(clusters, scale, kernel_mode='finite',
                       area_measure='lebesgue'):
    """
    F_N(all) minus its splitting into single-cluster free energies.

    Parameters
    ----------
    clusters : list(PointCluster)
    scale : BackgroundScale or float
        Scale N, also the number of free particles.
    kernel_mode : {'finite', 'infinite'}, optional (default='finite')
    area_measure : {'lebesgue', 'reduced'}, optional (default='lebesgue')

    Returns
    -------
    residual : float
        F(all) - [sum_j F(j) + N^2 split_bracket(c_list) - sum I_Int
        + multihole_prediction]; it vanishes for a single cluster and is
        expected to decay with N otherwise.
    """

    clusters = list(clusters)
    N = as_scale(scale).N
    c_list = [cluster.count / N for cluster in clusters]
    c_total = math.fsum(c_list)

    f_all = log_z_pinned(clusters, N, kernel_mode).f
    f_each = [log_z_pinned([cluster], N, kernel_mode).f
              for cluster in clusters]
    rhs = f_each + [N**2 * split_bracket(c_list),
                    -math.fsum(interaction_sums(clusters).values()),
                    multihole_prediction(N, c_total, c_list, area_measure)]
    return f_all - math.fsum(rhs)
