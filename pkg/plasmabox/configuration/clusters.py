# -*- coding: utf-8 -*-
"""
Clusters of pinned charges, their disk holes and their Coulomb energy.

Class
-----
PointCluster :
    Distinct pinned points plus a translation vector.
HoleModel :
    Disk of area pi M / N paired with a cluster.

Functions
---------
lattice_constant :
    Triangular-lattice constant at density N / pi.
generate_lattice_disk :
    The M triangular-lattice sites closest to a center.
nearest_neighbor_stats :
    Min and max nearest-neighbor distances of a cluster.
all_effective_points :
    Concatenated effective positions of several clusters.
pinned_hamiltonian :
    (N/2) sum |w|^2 - sum_{k<l} log|w_k - w_l| at effective positions.
hamiltonian_disk_reference :
    Continuum reference energy of M charges filling a disk hole.
energy_residual :
    Per-point gap between pinned_hamiltonian and its disk reference.
"""

#==============================================================================
# Importations
#==============================================================================

import math
import cmath
from dataclasses import dataclass
import numpy as np
import scipy.spatial as sc_sp
from ..kernel.kernel import as_scale
from ..utilities.errors import DuplicatePointsError, TooFewPointsError


#==============================================================================
# Global variables
#==============================================================================

_DUPLICATE_TOL = 1e-14


#==============================================================================
# Class
#==============================================================================

@dataclass(frozen=True, eq=False)
class PointCluster:
    """
    Distinct pinned points plus a translation vector.

    Parameters
    ----------
    points : array_like
        Reference positions (complex).
    translation : complex, optional (default=0)
        Translation vector a; effective positions are points + a.
    """

    points: np.ndarray
    translation: complex = 0j

    def __post_init__(self):
        points = np.array(self.points, dtype=complex).ravel()
        points.setflags(write=False)
        object.__setattr__(self, 'points', points)
        object.__setattr__(self, 'translation', complex(self.translation))
        if len(points) >= 2:
            gaps = np.abs(points[:, None] - points[None, :])
            gaps[np.diag_indices(len(points))] = np.inf
            if gaps.min() <= _DUPLICATE_TOL:
                raise DuplicatePointsError(
                    'Cluster points coincide within {}'.format(_DUPLICATE_TOL))

    @property
    def count(self):
        return len(self.points)

    @property
    def effective_points(self):
        return self.points + self.translation

    @property
    def centroid(self):
        return complex(np.mean(self.effective_points)) if self.count else \
            self.translation

    def translated(self, a):
        """Returns a copy with the translation increased by ``a``."""
        return PointCluster(self.points, self.translation + complex(a))

    def moved_to(self, a):
        """Returns a copy with translation ``a``."""
        return PointCluster(self.points, complex(a))

    def rotated(self, phi):
        """Returns a copy whose effective points are rotated by ``phi``."""
        rotation = cmath.exp(1j * phi)
        return PointCluster(rotation * self.points,
                            rotation * self.translation)

    def to_dict(self):
        return {'points': [[float(p.real), float(p.imag)]
                           for p in self.points],
                'translation': [self.translation.real,
                                self.translation.imag]}

    @classmethod
    def from_dict(cls, data):
        points = [complex(re, im) for re, im in data['points']]
        re, im = data.get('translation', [0., 0.])
        return cls(points, complex(re, im))

    def __eq__(self, other):
        if not isinstance(other, PointCluster):
            return NotImplemented
        return (self.translation == other.translation and
                np.array_equal(self.points, other.points))

    __hash__ = None


@dataclass(frozen=True)
class HoleModel:
    """
    Disk of area pi M / N paired with a cluster.

    Parameters
    ----------
    center : complex
    radius : float
        sqrt(M / N).
    """

    center: complex
    radius: float

    @property
    def area(self):
        return math.pi * self.radius**2

    @classmethod
    def from_charge(cls, center, M, scale):
        return cls(complex(center), math.sqrt(M / as_scale(scale).N))

    @classmethod
    def for_cluster(cls, cluster, scale):
        """Disk of area pi M / N about the centroid of the effective points."""
        return cls.from_charge(cluster.centroid, cluster.count, scale)


#==============================================================================
# Functions
#==============================================================================

def lattice_constant(scale):
    """
    Triangular-lattice constant at density N / pi.

    Parameters
    ----------
    scale : BackgroundScale or float

    Returns
    -------
    a : float
        (2 pi / (sqrt(3) N))^(1/2), so that each site owns an area pi / N.
    """

    return math.sqrt(2 * math.pi / (math.sqrt(3) * as_scale(scale).N))


def generate_lattice_disk(scale, M, center=0j):
    """
    The M triangular-lattice sites closest to a center.

    Parameters
    ----------
    scale : BackgroundScale or float
    M : int
        Number of points (M >= 1).
    center : complex, optional (default=0j)
        Lattice site around which the disk is filled.

    Returns
    -------
    cluster : PointCluster
        Points at absolute positions, zero translation. Ties in distance are
        broken by angle.
    """

    if M < 1:
        raise TooFewPointsError('A lattice cluster needs M >= 1')
    a = lattice_constant(scale)
    K = int(math.ceil(2 * math.sqrt(M))) + 2
    k1, k2 = np.meshgrid(np.arange(-K, K + 1), np.arange(-K, K + 1))
    sites = a * (k1.ravel() + k2.ravel() * cmath.exp(1j * math.pi / 3))

    distance = np.round(np.abs(sites) / a, 9)
    order = np.lexsort((np.angle(sites), distance))
    return PointCluster(complex(center) + sites[order[:M]])


def nearest_neighbor_stats(cluster):
    """
    Min and max nearest-neighbor distances of a cluster.

    Parameters
    ----------
    cluster : PointCluster

    Returns
    -------
    min_nn : float
    max_nn : float
    """

    if cluster.count < 2:
        raise TooFewPointsError('Nearest neighbors need at least 2 points')
    points = cluster.effective_points
    tree = sc_sp.cKDTree(np.column_stack([points.real, points.imag]))
    distances, _ = tree.query(tree.data, k=2)
    return float(distances[:, 1].min()), float(distances[:, 1].max())


def all_effective_points(clusters):
    """
    Concatenated effective positions of several clusters.

    Parameters
    ----------
    clusters : PointCluster or list(PointCluster)

    Returns
    -------
    points : numpy.ndarray
    """

    if isinstance(clusters, PointCluster):
        return clusters.effective_points
    if len(clusters) == 0:
        return np.zeros(0, dtype=complex)
    return np.concatenate([c.effective_points for c in clusters])


def pinned_hamiltonian(clusters, scale):
    """
    (N/2) sum |w|^2 - sum_{k<l} log|w_k - w_l| at effective positions.

    Parameters
    ----------
    clusters : PointCluster or list(PointCluster)
    scale : BackgroundScale or float

    Returns
    -------
    energy : float
    """

    N = as_scale(scale).N
    points = all_effective_points(clusters)
    confinement = N / 2 * math.fsum(np.abs(points)**2)
    if len(points) < 2:
        return confinement
    i, j = np.triu_indices(len(points), 1)
    distances = np.abs(points[i] - points[j])
    if distances.min() <= _DUPLICATE_TOL:
        raise DuplicatePointsError('Pinned points coincide')
    return confinement - math.fsum(np.log(distances))


def hamiltonian_disk_reference(hole, M, scale):
    """
    Continuum reference energy of M charges filling a disk hole.

    Parameters
    ----------
    hole : HoleModel
    M : int
    scale : BackgroundScale or float

    Returns
    -------
    energy : float
        (N^2/2pi) int_H |x|^2 + (N^2/2pi^2) D(1_H, 1_H) - (M/2) log M.
    """

    from ..meanfield.closedforms import disk_second_moment, disk_self_energy

    N = as_scale(scale).N
    return (N**2 / (2 * math.pi) * disk_second_moment(hole.center,
                                                      hole.radius) +
            N**2 / (2 * math.pi**2) * disk_self_energy(hole.radius) -
            M / 2 * math.log(M))


def energy_residual(cluster, scale):
    """
    Per-point gap between pinned_hamiltonian and its disk reference.

    Parameters
    ----------
    cluster : PointCluster
    scale : BackgroundScale or float

    Returns
    -------
    residual : float
    """

    hole = HoleModel.for_cluster(cluster, scale)
    reference = hamiltonian_disk_reference(hole, cluster.count, scale)
    return (pinned_hamiltonian(cluster, scale) - reference) / cluster.count
