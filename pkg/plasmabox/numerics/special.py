# -*- coding: utf-8 -*-
"""
Special functions and constants.

Functions
---------
log_gamma :
    Returns ln Gamma(x) for x > 0.
log_factorial_ratio :
    Exact log((n+m)!/n!) by summation of logs.
sum_log_factorials :
    Exact sum of log k! for k = 1..J.
glaisher_log :
    Returns ln A, A the Glaisher-Kinkelin constant.
zeta_prime_minus_one :
    Returns the derivative of the Riemann zeta function at -1.
"""

#==============================================================================
# Importations
#==============================================================================

import math
import functools
import numpy as np
import scipy.special as sc_sp


#==============================================================================
# Global variables
#==============================================================================

_EULER_MACLAURIN_CUT = 10
_EULER_MACLAURIN_ORDER = 8


#==============================================================================
# Functions
#==============================================================================

def log_gamma(x):
    """
    Returns ln Gamma(x) for x > 0.

    Parameters
    ----------
    x : float or numpy.ndarray
        Positive argument(s).

    Returns
    -------
    value : float or numpy.ndarray
    """

    if np.any(np.asarray(x) <= 0):
        raise ValueError('log_gamma is only defined here for x > 0')
    return sc_sp.gammaln(x)


def log_factorial_ratio(n, m):
    """
    Exact log((n+m)!/n!) by summation of logs.

    Parameters
    ----------
    n : int
    m : int

    Returns
    -------
    value : float
        Sum of log(k) for k = n+1..n+m; 0 when m = 0.
    """

    if n < 0 or m < 0:
        raise ValueError('log_factorial_ratio needs n, m >= 0')
    if m == 0:
        return 0.
    return math.fsum(np.log(np.arange(n + 1, n + m + 1, dtype=float)))


def sum_log_factorials(J):
    """
    Exact sum of log k! for k = 1..J.

    Parameters
    ----------
    J : int

    Returns
    -------
    value : float
        Computed as the sum of (J - i + 1) log(i), i = 1..J.
    """

    if J < 1:
        return 0.
    i = np.arange(1, J + 1, dtype=float)
    return math.fsum((J - i + 1) * np.log(i))


@functools.lru_cache(maxsize=None)
def glaisher_log():
    """
    Returns ln A, A the Glaisher-Kinkelin constant.

    Euler-Maclaurin summation of k log k with Bernoulli corrections.

    Returns
    -------
    value : float
        ln A ~ 0.2487544770337843.
    """

    n = _EULER_MACLAURIN_CUT
    k = np.arange(1, n + 1, dtype=float)
    terms = list(k * np.log(k))
    terms.append(-(n**2 / 2 + n / 2 + 1 / 12) * math.log(n))
    terms.append(n**2 / 4)
    bernoulli = sc_sp.bernoulli(2 * _EULER_MACLAURIN_ORDER)
    for j in range(2, _EULER_MACLAURIN_ORDER + 1):
        b = bernoulli[2 * j]
        terms.append(b / ((2 * j) * (2 * j - 1) * (2 * j - 2) *
                          n**(2 * j - 2)))
    return math.fsum(terms)


def zeta_prime_minus_one():
    """
    Returns the derivative of the Riemann zeta function at -1.

    Returns
    -------
    value : float
        1/12 - ln A ~ -0.16542114370045092.
    """

    return 1 / 12 - glaisher_log()
