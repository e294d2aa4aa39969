# -*- coding: utf-8 -*-
"""
Numerical check of the spacing, energy and separation assumptions.

Class
-----
AssumptionsReport :
    Outcome of separation_check.

Functions
---------
default_spacing_constants :
    Spacing window (C1, C2) from the lattice constant with 50% slack.
separation_check :
    Checks spacing, energy and separation of a list of clusters.

Notes
-----
Enclosing disks are centered at the centroid of the effective points, with
radius the largest of the hole radius and the farthest point. Distances
between clusters are measured between these centers; the distance to the
outer boundary is R_n - |center| with R_n = sqrt(1 + sum c_j).
"""

#==============================================================================
# Importations
#==============================================================================

import math
import itertools as itr
from dataclasses import dataclass, asdict
import numpy as np
from .clusters import (HoleModel, lattice_constant, nearest_neighbor_stats,
                       energy_residual)
from ..kernel.kernel import as_scale


#==============================================================================
# Global variables
#==============================================================================

_R1 = 0.1
_R2 = 0.1
_SPACING_SLACK = 0.5


#==============================================================================
# Class
#==============================================================================

@dataclass(frozen=True)
class AssumptionsReport:
    """
    Outcome of separation_check.

    Parameters
    ----------
    spacing_ok : bool
    min_nn : tuple(float)
        Per-cluster minimal nearest-neighbor distance (None if M_j < 2).
    max_nn : tuple(float)
        Per-cluster maximal nearest-neighbor distance (None if M_j < 2).
    spacing_window : tuple(tuple(float, float))
        Per-cluster constants (C1, C2).
    energy_residual : tuple(float)
        Per-cluster, per-point energy residual.
    pair_ok : bool
    boundary_ok : bool
    separation_ok : bool
    enclosing_radii : tuple(float)
    min_pair_distance : float
    min_boundary_distance : float
    droplet_radius : float
    r1 : float
    r2 : float
    """

    spacing_ok: bool
    min_nn: tuple
    max_nn: tuple
    spacing_window: tuple
    energy_residual: tuple
    pair_ok: bool
    boundary_ok: bool
    separation_ok: bool
    enclosing_radii: tuple
    min_pair_distance: float
    min_boundary_distance: float
    droplet_radius: float
    r1: float
    r2: float

    @property
    def ok(self):
        return self.spacing_ok and self.separation_ok

    @property
    def ratios(self):
        """Measured ratios to compare with r1 and r1 * r2."""
        radius = max(self.enclosing_radii)
        return {'radius_over_pair': radius / self.min_pair_distance,
                'pair_over_boundary': (self.min_pair_distance /
                                       self.min_boundary_distance)
                if self.min_boundary_distance > 0 else math.inf}

    def to_dict(self):
        result = asdict(self)
        result['ratios'] = _finite_or_none(self.ratios)
        result['ok'] = self.ok
        return _finite_or_none(result)


#==============================================================================
# Functions
#==============================================================================

def _finite_or_none(record):
    return {key: (None if isinstance(value, float) and
                  not math.isfinite(value) else value)
            for key, value in record.items()}


def default_spacing_constants(M, scale):
    """
    Spacing window (C1, C2) from the lattice constant with 50% slack.

    Parameters
    ----------
    M : int
        Number of points in the cluster.
    scale : BackgroundScale or float

    Returns
    -------
    C1 : float
    C2 : float
        nn is accepted when C1 M^(-1/2) <= nn <= C2 M^(-1/2).
    """

    reference = lattice_constant(scale) * math.sqrt(M)
    return (1 - _SPACING_SLACK) * reference, (1 + _SPACING_SLACK) * reference


def separation_check(clusters, scale, r1=_R1, r2=_R2, C1=None, C2=None):
    """
    Checks spacing, energy and separation of a list of clusters.

    Parameters
    ----------
    clusters : list(PointCluster)
        At least one cluster.
    scale : BackgroundScale or float
    r1 : float, optional (default=0.1)
    r2 : float, optional (default=0.1)
    C1 : None or float, optional (default=None)
        Lower spacing constant; if None, default_spacing_constants.
    C2 : None or float, optional (default=None)
        Upper spacing constant; if None, default_spacing_constants.

    Returns
    -------
    report : AssumptionsReport
    """

    assert len(clusters) >= 1, 'separation_check needs at least one cluster'
    N = as_scale(scale).N
    M_total = sum(c.count for c in clusters)
    droplet_radius = math.sqrt(1 + M_total / N)

    spacing_ok = True
    min_nn, max_nn, windows, residuals = [], [], [], []
    centers, radii = [], []
    for cluster in clusters:
        M = cluster.count
        low, high = default_spacing_constants(M, N)
        low = low if C1 is None else C1
        high = high if C2 is None else C2
        windows.append((low, high))
        if M >= 2:
            nn_low, nn_high = nearest_neighbor_stats(cluster)
            spacing_ok &= (low / math.sqrt(M) <= nn_low and
                           nn_high <= high / math.sqrt(M))
        else:
            nn_low = nn_high = None
        min_nn.append(nn_low)
        max_nn.append(nn_high)
        residuals.append(energy_residual(cluster, N))

        hole = HoleModel.for_cluster(cluster, N)
        spread = float(np.abs(cluster.effective_points - hole.center).max())
        centers.append(hole.center)
        radii.append(max(hole.radius, spread))

    boundary = [droplet_radius - abs(c) for c in centers]
    min_boundary = min(boundary)
    if len(clusters) == 1:
        min_pair = math.inf
        pair_ok = True
        boundary_ok = radii[0] < boundary[0]
    else:
        min_pair = min(abs(a - b) for a, b in itr.combinations(centers, 2))
        pair_ok = max(radii) <= r1 * min_pair
        boundary_ok = r1 * min_pair <= r1 * r2 * min_boundary

    return AssumptionsReport(
        spacing_ok=bool(spacing_ok), min_nn=tuple(min_nn),
        max_nn=tuple(max_nn), spacing_window=tuple(windows),
        energy_residual=tuple(residuals), pair_ok=bool(pair_ok),
        boundary_ok=bool(boundary_ok),
        separation_ok=bool(pair_ok and boundary_ok),
        enclosing_radii=tuple(radii), min_pair_distance=min_pair,
        min_boundary_distance=min_boundary, droplet_radius=droplet_radius,
        r1=r1, r2=r2)
