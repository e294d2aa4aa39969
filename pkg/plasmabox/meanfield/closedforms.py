# -*- coding: utf-8 -*-
"""
Closed-form potentials and Coulomb energies of uniformly charged disks.

Functions
---------
newton_potential_disk :
    Potential -(1/pi) (log|.| * 1_{D(0,R)})(x).
disk_self_energy :
    D(1_{D(0,R)}, 1_{D(0,R)}) = pi^2 R^4 / 4 - pi^2 R^4 log R.
disk_second_moment :
    Integral of |x|^2 over D(z0, r).
disk_background_interaction :
    D(1_{D(0,R)}, 1_{D(z0,r)}) for D(z0, r) inside D(0, R).
c_r_constant :
    C_R = N J R^2 - 2 N J R^2 log R.

Notes
-----
D(f, g) is the Coulomb interaction - int int log|x - y| f(x) g(y) dx dy.
"""

#==============================================================================
# Importations
#==============================================================================

import math


#==============================================================================
# Functions
#==============================================================================

def newton_potential_disk(x, R):
    """
    Potential -(1/pi) (log|.| * 1_{D(0,R)})(x).

    Parameters
    ----------
    x : complex
    R : float
        Positive radius.

    Returns
    -------
    value : float
        -R^2 log|x| outside the disk, -|x|^2/2 + R^2/2 - R^2 log R inside.
    """

    assert R > 0, 'Disk radius must be positive (got {})'.format(R)
    modulus = abs(x)
    if modulus >= R:
        return -R**2 * math.log(modulus)
    return -modulus**2 / 2 + R**2 / 2 - R**2 * math.log(R)


def disk_self_energy(R):
    """
    D(1_{D(0,R)}, 1_{D(0,R)}) = pi^2 R^4 / 4 - pi^2 R^4 log R.
    """

    return math.pi**2 * R**4 * (0.25 - math.log(R))


def disk_second_moment(center, r):
    """
    Integral of |x|^2 over D(z0, r): pi r^2 (|z0|^2 + r^2 / 2).
    """

    return math.pi * r**2 * (abs(center)**2 + r**2 / 2)


def disk_background_interaction(R, center, r):
    """
    D(1_{D(0,R)}, 1_{D(z0,r)}) for D(z0, r) inside D(0, R).

    The potential of the large disk is quadratic inside it, so the integral
    over the small disk is pi |H| (newton_potential_disk(z0, R) - r^2 / 4).

    Parameters
    ----------
    R : float
    center : complex
    r : float

    Returns
    -------
    value : float
    """

    area = math.pi * r**2
    return math.pi * area * (newton_potential_disk(center, R) - r**2 / 4)


def c_r_constant(N, J, R):
    """
    C_R = N J R^2 - 2 N J R^2 log R.
    """

    return N * J * R**2 * (1 - 2 * math.log(R))
