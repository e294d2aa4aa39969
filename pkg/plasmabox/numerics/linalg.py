# -*- coding: utf-8 -*-
"""
Log-determinants of Hermitian matrices.

Functions
---------
hermitian_logdet :
    Log-determinant of a Hermitian matrix as a LogValue.

Notes
-----
The primary path is a diagonally pivoted Cholesky factorization that
accumulates the log of each pivot. Matrices that are not positive
semidefinite are handed to the pivoted LDL* factorization of scipy.
"""

#==============================================================================
# Importations
#==============================================================================

import math
import numpy as np
import scipy.linalg as sc_la
from .logvalues import LogValue
from ..utilities.errors import NotHermitianError, SingularMatrixError


#==============================================================================
# Global variables
#==============================================================================

_HERMITIAN_TOL = 1e-12
_PIVOT_TOL = 1e-300
_PSD_REL_TOL = 1e-12


#==============================================================================
# Functions
#==============================================================================

def _as_array(matrix):
    if hasattr(matrix, 'to_complex'):
        return matrix.to_complex()
    return np.asarray(matrix)


def _pivoted_cholesky(schur, pivot_tol, psd_tol):
    """
    Pivoted Cholesky on a copy; returns the list of log-pivots, or None when
    a Schur complement diagonal goes below -psd_tol.
    """

    log_pivots = []
    size = schur.shape[0]
    for k in range(size):
        diag = schur.diagonal().real
        if diag.min() < -psd_tol:
            return None
        p = int(np.argmax(diag))
        pivot = diag[p]
        if pivot < pivot_tol:
            raise SingularMatrixError(
                'Gram matrix is numerically rank deficient: pivot {:.3e} '
                'below tolerance at step {} of {}'.format(pivot, k, size))
        log_pivots.append(math.log(pivot))
        # Eliminate row/column p
        column = schur[:, p].copy()
        keep = np.arange(schur.shape[0]) != p
        column = column[keep]
        schur = schur[np.ix_(keep, keep)] - \
            np.outer(column, column.conj()) / pivot
    return log_pivots


def _ldl_logdet(matrix):
    _, d, _ = sc_la.ldl(matrix, hermitian=True)
    size = d.shape[0]
    log_mag = 0.
    sign = 1
    i = 0
    while i < size:
        if i + 1 < size and d[i, i + 1] != 0:
            block = (d[i, i].real * d[i + 1, i + 1].real -
                     abs(d[i, i + 1])**2)
            i += 2
        else:
            block = d[i, i].real
            i += 1
        if block == 0:
            return LogValue.zero()
        log_mag += math.log(abs(block))
        sign *= 1 if block > 0 else -1
    return LogValue(log_mag, sign)


def hermitian_logdet(matrix, hermitian_tol=_HERMITIAN_TOL,
                     pivot_tol=_PIVOT_TOL, psd_tol=_PSD_REL_TOL):
    """
    Log-determinant of a Hermitian matrix as a LogValue.

    Parameters
    ----------
    matrix : KernelMatrix or array_like
        Square Hermitian matrix.
    hermitian_tol : float, optional (default=1e-12)
        Tolerance on max|A - A^H| relative to max(1, max|A|).
    pivot_tol : float, optional (default=1e-300)
        Absolute pivot breakdown tolerance.
    psd_tol : float, optional (default=1e-12)
        Negative pivots below -psd_tol * max|diag| send the matrix to the
        LDL* fallback.

    Returns
    -------
    logdet : LogValue
        log|det| and sign (+1 for positive semidefinite input).
    """

    array = np.array(_as_array(matrix), dtype=complex)
    assert array.ndim == 2 and array.shape[0] == array.shape[1], \
        'Matrix is not square (has shape {})'.format(array.shape)
    if array.shape[0] == 0:
        return LogValue(0., 1)

    scale = max(1., float(np.abs(array).max()))
    asymmetry = float(np.abs(array - array.conj().T).max())
    if asymmetry > hermitian_tol * scale:
        raise NotHermitianError(
            'Matrix asymmetry {:.3e} exceeds tolerance'.format(asymmetry))
    array = (array + array.conj().T) / 2

    diag_scale = float(np.abs(array.diagonal()).max())
    log_pivots = _pivoted_cholesky(array.copy(), pivot_tol,
                                   psd_tol * max(diag_scale, pivot_tol))
    if log_pivots is not None:
        return LogValue(math.fsum(log_pivots), 1)
    return _ldl_logdet(array)
