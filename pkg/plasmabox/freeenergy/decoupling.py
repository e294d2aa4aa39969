# -*- coding: utf-8 -*-
"""
Decoupling of the pinned-charge determinant between separated clusters.

Functions
---------
decoupled_logdet :
    Sum of per-cluster log-determinants against the full log-determinant.
decoupling_gap_two_points :
    Exact gap log(1 - exp(-N d^2)) of two single-point clusters.
brute_force_det_expansion :
    Determinant of two clusters summed over the exchange number m.
det_expansion_terms :
    Per-m partial sums of the exchange expansion.
hadamard_bound :
    Hadamard bound on the m >= 1 part of the exchange expansion.
lowdet_bound_check :
    Checks the lower bound det >= exp(-C (c - c log c) N).

Notes
-----
The exchange expansion is the generalized Laplace expansion along the rows
of cluster A. A column subset S of size M_A contributes
    (-1)^(sum rows + sum S) det K[A, S] det K[B, S^c],
and m counts the B-columns in S. Scaling both off-diagonal blocks by t makes
the m-th partial sum the coefficient of t^(2m) in a Hermitian determinant,
so every partial sum is real.
"""

#==============================================================================
# Importations
#==============================================================================

import math
import itertools as itr
import numpy as np
from .partition import _kernel_for
from ..numerics import hermitian_logdet
from ..kernel import GinibreKernel, as_scale, kernel_matrix
from ..configuration import all_effective_points, separation_check
from ..utilities.errors import (AssumptionError, TooLargeError,
                                TooFewPointsError, SingularMatrixError)


#==============================================================================
# Global variables
#==============================================================================

_MAX_EXPANSION_SIZE = 8


#==============================================================================
# Functions
#==============================================================================

def decoupled_logdet(clusters, scale, require_separation=False):
    """
    Sum of per-cluster log-determinants against the full log-determinant.

    Parameters
    ----------
    clusters : list(PointCluster)
        At least two clusters.
    scale : BackgroundScale or float
    require_separation : boolean, optional (default=False)
        If True, the clusters must pass separation_check.

    Returns
    -------
    sum_blocks : float
        Sum over clusters of log det[(pi/N) K_inf] on the cluster alone.
    full : float
        log det[(pi/N) K_inf] on all the points.
    gap : float
        full - sum_blocks.

    Raises
    ------
    AssumptionError
        If ``require_separation`` and the clusters are not separated.
    """

    clusters = list(clusters)
    if len(clusters) < 2:
        raise TooFewPointsError('Decoupling needs at least two clusters')
    N = as_scale(scale).N
    if require_separation and not separation_check(clusters, N).separation_ok:
        raise AssumptionError('Clusters fail the separation check')

    kernel = GinibreKernel.infinite(N)
    blocks = [hermitian_logdet(kernel_matrix(kernel, c.effective_points))
              for c in clusters]
    sum_blocks = math.fsum(block.log_mag for block in blocks)
    full = hermitian_logdet(kernel_matrix(kernel,
                                          all_effective_points(clusters)))
    return sum_blocks, full.log_mag, full.log_mag - sum_blocks


def decoupling_gap_two_points(N, d):
    """
    Exact gap log(1 - exp(-N d^2)) of two single-point clusters.
    """

    assert d > 0, 'Distance must be positive (got {})'.format(d)
    return math.log1p(-math.exp(-N * d**2))


def _two_cluster_matrix(cluster_a, cluster_b, scale, kernel_mode):
    size_a, size_b = cluster_a.count, cluster_b.count
    if size_a < 1 or size_b < 1:
        raise TooFewPointsError('Both clusters need at least one point')
    if size_a + size_b > _MAX_EXPANSION_SIZE:
        raise TooLargeError(
            'Exchange expansion limited to M_A + M_B <= {} (got {})'.format(
                _MAX_EXPANSION_SIZE, size_a + size_b))
    N = as_scale(scale).N
    kernel = _kernel_for(kernel_mode, N, N + size_a + size_b)
    points = all_effective_points([cluster_a, cluster_b])
    return kernel_matrix(kernel, points).to_complex(), size_a


def _minor_det(matrix, rows, cols):
    if len(rows) == 0:
        return 1.
    return np.linalg.det(matrix[np.ix_(rows, cols)])


def _row_norms(matrix, rows, cols):
    if len(rows) == 0:
        return 1.
    block = matrix[np.ix_(rows, cols)]
    return float(np.prod(np.linalg.norm(block, axis=1)))


def _laplace_terms(matrix, size_a):
    """
    Yields (m, S, term, hadamard) for each column subset S of size M_A.
    """

    size = matrix.shape[0]
    rows_a = list(range(size_a))
    rows_b = list(range(size_a, size))
    row_sum = sum(rows_a)
    for cols in itr.combinations(range(size), size_a):
        complement = [k for k in range(size) if k not in cols]
        m = sum(1 for k in cols if k >= size_a)
        sign = -1 if (row_sum + sum(cols)) % 2 else 1
        term = sign * (_minor_det(matrix, rows_a, list(cols)) *
                       _minor_det(matrix, rows_b, complement))
        hadamard = (_row_norms(matrix, rows_a, list(cols)) *
                    _row_norms(matrix, rows_b, complement))
        yield m, cols, term, hadamard


def det_expansion_terms(cluster_a, cluster_b, scale, kernel_mode='infinite'):
    """
    Per-m partial sums of the exchange expansion.

    Parameters
    ----------
    cluster_a : PointCluster
    cluster_b : PointCluster
    scale : BackgroundScale or float
    kernel_mode : {'infinite', 'finite'}, optional (default='infinite')

    Returns
    -------
    partial_sums : list(float)
        Entry m is the sum over subsets exchanging m columns, for
        m = 0, ..., min(M_A, M_B).

    Raises
    ------
    TooLargeError
        If M_A + M_B > 8.
    """

    matrix, size_a = _two_cluster_matrix(cluster_a, cluster_b, scale,
                                         kernel_mode)
    size_b = matrix.shape[0] - size_a
    partial = [[] for _ in range(min(size_a, size_b) + 1)]
    for m, _, term, _ in _laplace_terms(matrix, size_a):
        partial[m].append(term)
    return [math.fsum(complex(t).real for t in terms) for terms in partial]


def brute_force_det_expansion(cluster_a, cluster_b, scale,
                              kernel_mode='infinite'):
    """
    Determinant of two clusters summed over the exchange number m.

    Parameters
    ----------
    cluster_a : PointCluster
    cluster_b : PointCluster
    scale : BackgroundScale or float
    kernel_mode : {'infinite', 'finite'}, optional (default='infinite')

    Returns
    -------
    det : float
        det[(pi/N) K] on the concatenated points.

    Raises
    ------
    TooLargeError
        If M_A + M_B > 8.
    """

    return math.fsum(det_expansion_terms(cluster_a, cluster_b, scale,
                                         kernel_mode))


def hadamard_bound(cluster_a, cluster_b, scale, kernel_mode='infinite'):
    """
    Hadamard bound on the m >= 1 part of the exchange expansion.

    Returns
    -------
    bound : float
        Sum over subsets with m >= 1 of the products of row norms of both
        minors; it dominates |sum_{m >= 1} partial_sums[m]|.
    """

    matrix, size_a = _two_cluster_matrix(cluster_a, cluster_b, scale,
                                         kernel_mode)
    return math.fsum(hadamard for m, _, _, hadamard in
                     _laplace_terms(matrix, size_a) if m >= 1)


def lowdet_bound_check(cluster, scale, C=5., kernel_mode='finite'):
    """
    Checks the lower bound det >= exp(-C (c - c log c) N).

    Parameters
    ----------
    cluster : PointCluster
    scale : BackgroundScale or float
    C : float, optional (default=5.)
    kernel_mode : {'finite', 'infinite'}, optional (default='finite')

    Returns
    -------
    passed : bool
        False as well when the cluster fails the spacing assumption or the
        determinant is not positive.
    """

    N = as_scale(scale).N
    M = cluster.count
    if not separation_check([cluster], N).spacing_ok:
        return False
    kernel = _kernel_for(kernel_mode, N, N + M)
    try:
        logdet = hermitian_logdet(kernel_matrix(kernel,
                                                cluster.effective_points))
    except SingularMatrixError:
        return False
    if logdet.sign != 1:
        return False
    c = M / N
    return bool(logdet.log_mag >= -C * (c - c * math.log(c)) * N)
