# -*- coding: utf-8 -*-
"""
Truncated exponential series at complex argument, in log-polar form.

Functions
---------
truncated_exponential_log :
    Returns log-polar form of sum_{j<n} u^j / j!.
regularized_upper_gamma_log :
    Returns log-polar form of the regularized upper gamma Q(n, u).
upper_gamma_continued_fraction :
    Lentz continued fraction for Gamma(n, u) e^u u^-n.
lower_gamma_series :
    Series for gamma(n, u) e^u u^-n.

Notes
-----
The truncated sum equals e^u Q(n, u), with Q the regularized upper
incomplete gamma function. Three paths are used:
    - direct summation anchored at the largest term, when |u| <= 0.9 (n-1)
      or when none of the others applies;
    - the modified Lentz continued fraction of Gamma(n, u) when Re u > 0;
    - the complement of the lower series, e^u - u^n sum / Gamma(n), when
      Re u <= 0 and |u| <= n.
Series and continued fraction follow "Numerical Recipes in C", chapter 6,
extended to complex arguments.
"""

#==============================================================================
# Importations
#==============================================================================

import cmath
import math
import warnings
import numpy as np
import scipy.special as sc_sp
from ..numerics.logvalues import PhaseValue, log_sum_phases
from ..utilities.errors import OverflowGuardError


#==============================================================================
# Global variables
#==============================================================================

_ACCURACY = 1e-15
_MAX_ITERATION = 10000
_FPMIN = 1e-300
_SWITCH_RATIO = 0.9


#==============================================================================
# Functions
#==============================================================================

def upper_gamma_continued_fraction(n, u, accuracy=_ACCURACY,
                                   max_iteration=_MAX_ITERATION):
    """
    Lentz continued fraction for Gamma(n, u) e^u u^-n.

    Parameters
    ----------
    n : int
        Positive order.
    u : complex
        Argument, away from the negative real axis.
    accuracy : float, optional (default=1e-15)
    max_iteration : int, optional (default=10000)

    Returns
    -------
    h : complex or None
        Value of the continued fraction; None if accuracy is not reached.
    """

    b = u + 1 - n
    c = 1 / _FPMIN
    d = 1 / b if b != 0 else 1 / _FPMIN
    h = d
    for i in range(1, max_iteration + 1):
        an = -i * (i - n)
        b += 2
        d = an * d + b
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = b + an / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1 / d
        delta = d * c
        h *= delta
        if abs(delta - 1) < accuracy:
            return h
    return None


def lower_gamma_series(n, u, accuracy=_ACCURACY,
                       max_iteration=_MAX_ITERATION):
    """
    Series for gamma(n, u) e^u u^-n.

    Parameters
    ----------
    n : int
        Positive order.
    u : complex
        Argument with |u| not much larger than n.
    accuracy : float, optional (default=1e-15)
    max_iteration : int, optional (default=10000)

    Returns
    -------
    total : complex or None
        Sum of u^k / (n (n+1) ... (n+k)); None if accuracy is not reached.
    """

    ap = n
    delta = 1 / n
    total = delta
    for _ in range(max_iteration):
        ap += 1
        delta *= u / ap
        total += delta
        if abs(delta) < abs(total) * accuracy:
            return total
    return None


def _direct_sum(n, u):
    j = np.arange(n, dtype=float)
    log_mags = j * math.log(abs(u)) - sc_sp.gammaln(j + 1)
    phases = j * cmath.phase(u)
    return log_sum_phases(log_mags, phases)


def truncated_exponential_log(n, u, switch_ratio=_SWITCH_RATIO):
    """
    Returns log-polar form of sum_{j<n} u^j / j!.

    Parameters
    ----------
    n : int
        Number of retained terms (n >= 1).
    u : complex
    switch_ratio : float, optional (default=0.9)
        Direct summation is used while |u| <= switch_ratio * (n - 1).

    Returns
    -------
    value : PhaseValue
    """

    assert n >= 1, 'At least one term is needed (got n={})'.format(n)
    u = complex(u)
    if u == 0:
        return PhaseValue(0., 0.)
    modulus = abs(u)
    if n == 1:
        return PhaseValue(0., 0.)
    if modulus <= switch_ratio * (n - 1):
        return _check(_direct_sum(n, u), n, u)

    log_u = cmath.log(u)
    if u.real > 0:
        h = upper_gamma_continued_fraction(n, u)
        if h is not None and h != 0:
            log_value = (n * log_u - sc_sp.gammaln(n) + cmath.log(h))
            return _check(PhaseValue(log_value.real, log_value.imag), n, u)
    elif modulus <= n:
        total = lower_gamma_series(n, u)
        if total is not None and total != 0:
            log_tail = n * log_u - sc_sp.gammaln(n) + cmath.log(total)
            value = (PhaseValue(u.real, u.imag) -
                     PhaseValue(log_tail.real, log_tail.imag))
            return _check(value, n, u)
    else:
        return _check(_direct_sum(n, u), n, u)

    message = 'Incomplete gamma evaluation did not converge for ' + \
        'n={}, u={}; falling back to direct summation.'
    warnings.warn(message.format(n, u), UserWarning)
    return _check(_direct_sum(n, u), n, u)


def regularized_upper_gamma_log(n, u, switch_ratio=_SWITCH_RATIO):
    """
    Returns log-polar form of Q(n, u) = e^-u sum_{j<n} u^j / j!.
    """

    value = truncated_exponential_log(n, u, switch_ratio=switch_ratio)
    u = complex(u)
    return PhaseValue(value.log_mag - u.real, value.phase - u.imag)


def _check(value, n, u):
    if math.isnan(value.log_mag) or value.log_mag == math.inf:
        raise OverflowGuardError(
            'Truncated exponential left the representable range '
            '(n={}, u={})'.format(n, u))
    return value
