# -*- coding: utf-8 -*-
"""
Mean-field energy of a droplet with disk holes around pinned clusters.

Class
-----
MeanFieldProblem :
    Scale N, mobile charge J and the clusters paired with their holes.
MeanFieldResult :
    Mean-field energy, constant C_R and the named breakdown.

Functions
---------
interaction_energy :
    I_Int = - sum log|w_i - w_j| between two clusters.
emf_energy :
    Closed-form mean-field energy.
emf_gradient :
    Gradient of emf_energy in the translation of one cluster.
emf_split_difference :
    Closed form of E_12 - E_1 - E_2 for two clusters.
split_bracket :
    N^2 bracket of the multi-cluster splitting formula, divided by N^2.
mf_identity_check :
    LHS - RHS of the normalized splitting identity in (c1, c2).
cancellation_check :
    Residual of the single-hole cancellation between two mean-field energies.

Notes
-----
Energies are kept at scale N^2:
    E = C_R / 2 - (N^2 / 2 pi^2) D(1_{D \\ H}, 1_{D \\ H}),
with R^2 = J/N + M/N and D(f, g) = - int int log|x - y| f(x) g(y). The
Coulomb energy of D \\ H splits into the disk self-energy, the disk-hole
terms (the disk potential is quadratic inside it), the hole self-energies
and the hole-hole terms. The last ones use the screening identity
    D(1_{H_i}, 1_{H_j}) = (pi^2 / N^2) I_Int(cluster_i, cluster_j)
for disjoint holes.
"""

#==============================================================================
# Importations
#==============================================================================

import math
import itertools as itr
from dataclasses import dataclass, field
import numpy as np
from .closedforms import (disk_self_energy, disk_second_moment,
                          disk_background_interaction, c_r_constant)
from ..kernel.kernel import as_scale
from ..configuration.clusters import HoleModel, all_effective_points
from ..utilities.errors import (OverlappingHolesError,
                                HoleOutsideDropletError)


#==============================================================================
# Global variables
#==============================================================================

_OVERLAP_TOL = 1e-9
_CONTAINMENT_TOL = 1e-12


#==============================================================================
# Class
#==============================================================================

@dataclass(frozen=True)
class MeanFieldProblem:
    """
    Scale N, mobile charge J and the clusters paired with their holes.

    Parameters
    ----------
    scale : float
        Background scale N.
    charge : float
        Mobile charge J.
    clusters : tuple(tuple(PointCluster, HoleModel))
    """

    scale: float
    charge: float
    clusters: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'scale', as_scale(self.scale).N)
        object.__setattr__(self, 'charge', float(self.charge))
        object.__setattr__(self, 'clusters', tuple(
            (cluster, hole) for cluster, hole in self.clusters))
        assert self.charge > 0, \
            'Mobile charge must be positive (got {})'.format(self.charge)

    @classmethod
    def from_clusters(cls, clusters, scale, charge=None):
        """
        Pairs each cluster with its disk hole; ``charge`` defaults to N.
        """
        N = as_scale(scale).N
        charge = N if charge is None else charge
        return cls(N, charge, tuple((c, HoleModel.for_cluster(c, N))
                                    for c in clusters))

    @property
    def point_clusters(self):
        return tuple(cluster for cluster, _ in self.clusters)

    @property
    def holes(self):
        return tuple(hole for _, hole in self.clusters)

    @property
    def pinned_charge(self):
        return sum(cluster.count for cluster, _ in self.clusters)

    @property
    def droplet_radius(self):
        return math.sqrt((self.charge + self.pinned_charge) / self.scale)

    def subproblem(self, indices):
        """Problem restricted to the clusters of given indices, same J."""
        return MeanFieldProblem(self.scale, self.charge,
                                tuple(self.clusters[i] for i in indices))

    def translated(self, index, a):
        """Translates one cluster by ``a`` and rebuilds its hole."""
        clusters = list(self.point_clusters)
        clusters[index] = clusters[index].translated(a)
        return MeanFieldProblem.from_clusters(clusters, self.scale,
                                              self.charge)

    def rotated(self, phi):
        """Rotates every cluster about the origin."""
        return MeanFieldProblem.from_clusters(
            [c.rotated(phi) for c in self.point_clusters], self.scale,
            self.charge)


@dataclass(frozen=True)
class MeanFieldResult:
    """
    Mean-field energy, constant C_R and the named breakdown.

    Parameters
    ----------
    energy : float
        E^MF at scale N^2.
    c_r : float
    components : dict(str: float)
    scale : float
    """

    energy: float
    c_r: float
    components: dict = field(default_factory=dict)
    scale: float = 1.

    @property
    def normalized_energy(self):
        return self.energy / self.scale**2


#==============================================================================
# Functions
#==============================================================================

def interaction_energy(cluster_i, cluster_j):
    """
    I_Int = - sum log|w_i - w_j| between two clusters.

    Parameters
    ----------
    cluster_i : PointCluster
    cluster_j : PointCluster

    Returns
    -------
    value : float
    """

    gaps = np.abs(cluster_i.effective_points[:, None] -
                  cluster_j.effective_points[None, :])
    return -math.fsum(np.log(gaps).ravel())


def _validate(problem):
    R = problem.droplet_radius
    for index, hole in enumerate(problem.holes):
        if abs(hole.center) + hole.radius > R + _CONTAINMENT_TOL:
            raise HoleOutsideDropletError(
                'Hole {} (center {}, radius {:.6g}) leaves D(0, {:.6g})'
                .format(index, hole.center, hole.radius, R))
    for (i, hi), (j, hj) in itr.combinations(enumerate(problem.holes), 2):
        if abs(hi.center - hj.center) <= hi.radius + hj.radius + \
                _OVERLAP_TOL:
            raise OverlappingHolesError(
                'Holes {} and {} are not disjoint'.format(i, j))


def emf_energy(problem):
    """
    Closed-form mean-field energy.

    Parameters
    ----------
    problem : MeanFieldProblem

    Returns
    -------
    result : MeanFieldResult
        Components are 'disk_self_energy', 'disk_hole_cross',
        'hole_self_energies', 'hole_hole_cross', 'interaction_sums' and
        'coulomb_energy' (the full D(1_{D \\ H}, 1_{D \\ H})).

    Raises
    ------
    HoleOutsideDropletError
    OverlappingHolesError
    """

    _validate(problem)
    N, J = problem.scale, problem.charge
    R = problem.droplet_radius
    c_r = c_r_constant(N, J, R)

    disk = disk_self_energy(R)
    cross = math.fsum(disk_background_interaction(R, h.center, h.radius)
                      for h in problem.holes if h.radius > 0)
    self_energies = math.fsum(disk_self_energy(h.radius)
                              for h in problem.holes if h.radius > 0)
    interactions = math.fsum(
        interaction_energy(ci, cj)
        for ci, cj in itr.combinations(problem.point_clusters, 2))
    hole_hole = math.pi**2 / N**2 * interactions

    coulomb = disk - 2 * cross + self_energies + 2 * hole_hole
    energy = c_r / 2 - N**2 / (2 * math.pi**2) * coulomb
    components = {'disk_self_energy': disk,
                  'disk_hole_cross': cross,
                  'hole_self_energies': self_energies,
                  'hole_hole_cross': hole_hole,
                  'interaction_sums': interactions,
                  'coulomb_energy': coulomb}
    return MeanFieldResult(energy, c_r, components, N)


def emf_gradient(problem, cluster_index=None):
    """
    Gradient of emf_energy in the translation of one cluster.

    Parameters
    ----------
    problem : MeanFieldProblem
    cluster_index : None or int, optional (default=None)
        Cluster being translated; if None, all clusters move together.

    Returns
    -------
    gradient : complex
        d/dRe(a) + i d/dIm(a). It is -N sum (w + a) over the moved points,
        plus the gradient of the screening interaction with the clusters
        that stay in place.

    Raises
    ------
    HoleOutsideDropletError
    OverlappingHolesError
    """

    _validate(problem)
    N = problem.scale
    clusters = problem.point_clusters
    if cluster_index is None:
        return complex(-N * np.sum(all_effective_points(list(clusters))))

    moving = clusters[cluster_index].effective_points
    gradient = -N * np.sum(moving)
    for index, other in enumerate(clusters):
        if index == cluster_index:
            continue
        gaps = moving[:, None] - other.effective_points[None, :]
        gradient += np.sum(1 / np.conj(gaps))
    return complex(gradient)


def _split_closed_terms(N, J, M1, M2):
    R12 = math.sqrt((J + M1 + M2) / N)
    R1 = math.sqrt((J + M1) / N)
    R2 = math.sqrt((J + M2) / N)

    def quartic(R):
        return R**4 / 4 - R**4 * math.log(R)

    def annulus(R):
        return R**2 * math.log(R) - R**2 / 2

    return ((c_r_constant(N, J, R12) - c_r_constant(N, J, R1) -
             c_r_constant(N, J, R2)) / 2 -
            N**2 / 2 * (quartic(R12) - quartic(R1) - quartic(R2)) -
            M1 * N * (annulus(R12) - annulus(R1)) -
            M2 * N * (annulus(R12) - annulus(R2)))


def emf_split_difference(problem):
    """
    Closed form of E_12 - E_1 - E_2 for two clusters.

    Parameters
    ----------
    problem : MeanFieldProblem
        Exactly two clusters; E_1 and E_2 keep the same N and J.

    Returns
    -------
    value : float
        With an empty second cluster this is -E_2, minus the energy of the
        droplet without holes, and not 0.

    Raises
    ------
    OverlappingHolesError
    """

    assert len(problem.clusters) == 2, \
        'The splitting formula needs exactly two clusters'
    _validate(problem)
    first, second = problem.point_clusters
    return (_split_closed_terms(problem.scale, problem.charge,
                                first.count, second.count) -
            interaction_energy(first, second))


def split_bracket(c_list):
    """
    N^2 bracket of the multi-cluster splitting formula, divided by N^2.

    Parameters
    ----------
    c_list : list(float)
        Charges c_j = M_j / N; c is their sum.

    Returns
    -------
    value : float
        (3/8)[(1 - n) + c^2 - sum c_j^2 - (2/3)(1 + c)^2 log(1 + c)
        + (2/3) sum (1 + c_j)^2 log(1 + c_j)].
    """

    n = len(c_list)
    c = math.fsum(c_list)
    terms = [1 - n, c**2, -(2 / 3) * (1 + c)**2 * math.log1p(c)]
    terms += [-cj**2 for cj in c_list]
    terms += [(2 / 3) * (1 + cj)**2 * math.log1p(cj) for cj in c_list]
    return 3 / 8 * math.fsum(terms)


def mf_identity_check(c1, c2):
    """
    LHS - RHS of the normalized splitting identity in (c1, c2).

    Parameters
    ----------
    c1 : float
    c2 : float

    Returns
    -------
    residual : float
        Zero to rounding.
    """

    c = c1 + c2
    lhs = math.fsum([-3 / 8, 3 / 8 * c**2, -3 / 8 * (c1**2 + c2**2),
                     -(1 + c)**2 * math.log1p(c) / 4,
                     (1 + c1)**2 * math.log1p(c1) / 4,
                     (1 + c2)**2 * math.log1p(c2) / 4])
    return lhs - _split_closed_terms(1., 1., c1, c2)


def cancellation_check(problem_big, problem_hole):
    """
    Residual of the single-hole cancellation between two mean-field energies.

    Parameters
    ----------
    problem_big : MeanFieldProblem
        No holes, J = N + M.
    problem_hole : MeanFieldProblem
        One cluster of M points, J = N.

    Returns
    -------
    residual : float
        2 E_big - 2 E_hole - (N^2/pi) int_H |x|^2 - (N^2/pi^2) D(1_H, 1_H),
        with D(1_H, 1_H) = disk_self_energy(r) > 0 for r < e^{1/4}.
    """

    assert len(problem_big.clusters) == 0, 'problem_big must have no hole'
    assert len(problem_hole.clusters) == 1, 'problem_hole needs one hole'
    N = problem_hole.scale
    hole = problem_hole.holes[0]
    return (2 * emf_energy(problem_big).energy -
            2 * emf_energy(problem_hole).energy -
            N**2 / math.pi * disk_second_moment(hole.center, hole.radius) -
            N**2 / math.pi**2 * disk_self_energy(hole.radius))
