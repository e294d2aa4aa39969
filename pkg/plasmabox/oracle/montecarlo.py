# -*- coding: utf-8 -*-
"""
Monte Carlo estimation of partition integrals and Coulomb energies.

Class
-----
McEstimate :
    Estimate, standard error, sample count and generator provenance.

Functions
---------
mc_partition :
    Importance-sampled estimate of log Z with pinned charges.
mc_coulomb :
    Estimate of D(1_A, 1_B) between two disks.

Notes
-----
Samples are split into batches of fixed size; batch k draws from the fork
of key k of the seeded generator, and the reduction runs in batch order.
Estimates are therefore bit-reproducible given (seed, samples), with or
without a worker pool.
"""

#==============================================================================
# Importations
#==============================================================================

import math
import warnings
from dataclasses import dataclass
from multiprocessing import Pool
import numpy as np
from .rng import SeededRNG
from ..kernel import as_scale
from ..configuration import PointCluster, all_effective_points
from ..utilities.errors import ConfigurationError, VarianceExplosionError


#==============================================================================
# Global variables
#==============================================================================

_MAX_PARTICLES = 4
_MIN_SAMPLES = 10**4
_BATCH_SIZE = 10**5
_BIAS_RATIO = 0.1
_EXPLOSION_RATIO = 0.5
_PAIR_GROUP = 4


#==============================================================================
# Class
#==============================================================================

@dataclass(frozen=True)
class McEstimate:
    """
    Estimate, standard error, sample count and generator provenance.

    Parameters
    ----------
    mean : float
    stderr : float
        Sample standard deviation over sqrt(samples), propagated through
        the log for log-of-mean estimates.
    samples : int
    seed : int
    generator_name : str, optional (default='Philox')
    """

    mean: float
    stderr: float
    samples: int
    seed: int
    generator_name: str = SeededRNG.generator_name

    def agrees_with(self, value, n_sigma=3.):
        """True if |mean - value| <= n_sigma * stderr."""
        return abs(self.mean - value) <= n_sigma * self.stderr

    def to_dict(self):
        return {'estimate': self.mean, 'stderr': self.stderr,
                'samples': self.samples, 'seed': self.seed,
                'generator_name': self.generator_name}


#==============================================================================
# Functions
#==============================================================================

def _check_samples(samples):
    if samples < _MIN_SAMPLES:
        raise ConfigurationError(
            'At least {} samples are needed (got {})'.format(_MIN_SAMPLES,
                                                            samples))


def _batch_sizes(samples, batch_size):
    full, rest = divmod(int(samples), batch_size)
    return [batch_size] * full + ([rest] if rest else [])


def _run_batches(task, arguments, workers):
    if workers is None or workers <= 1:
        return [task(args) for args in arguments]
    with Pool(workers) as pool:
        return pool.map(task, arguments)


def _partition_batch(args):
    n_particles, pinned, N, seed, key, size = args
    rng = SeededRNG(seed).fork(key)
    z = rng.complex_gaussian(1 / N, (size, n_particles))
    log_f = np.zeros(size)
    for j in range(n_particles):
        for k in range(j + 1, n_particles):
            log_f += 2 * np.log(np.abs(z[:, j] - z[:, k]))
        for w in pinned:
            log_f += 2 * np.log(np.abs(z[:, j] - w))
    return np.exp(log_f)


def _coulomb_batch(args):
    disk_a, disk_b, seed, key, size = args
    rng = SeededRNG(seed).fork(key)
    if disk_a == disk_b:
        # one sample = mean over every pair of a group of points in A
        x = rng.uniform_disk(disk_a[0], disk_a[1],
                             size * _PAIR_GROUP).reshape(size, _PAIR_GROUP)
        i, j = np.triu_indices(_PAIR_GROUP, k=1)
        distance = np.abs(x[:, i] - x[:, j])
        distance = distance[np.all(distance > 0, axis=1)]
        return -np.log(distance).mean(axis=1)
    x = rng.uniform_disk(disk_a[0], disk_a[1], size)
    y = rng.uniform_disk(disk_b[0], disk_b[1], size)
    distance = np.abs(x - y)
    distance = distance[distance > 0]
    return -np.log(distance)


def _reduce(batches):
    values = np.concatenate(batches)
    count = len(values)
    return (float(np.mean(values)),
            float(np.std(values, ddof=1) / math.sqrt(count)), count)


def mc_partition(n_particles, clusters, scale, samples=10**5, seed=0,
                 workers=None, batch_size=_BATCH_SIZE):
    """
    Importance-sampled estimate of log Z with pinned charges.

    Parameters
    ----------
    n_particles : int
        Number of free particles (1 to 4).
    clusters : PointCluster or list(PointCluster)
        Pinned charges; may be empty.
    scale : BackgroundScale or float
    samples : int, optional (default=10**5)
        At least 10**4.
    seed : int, optional (default=0)
    workers : None or int, optional (default=None)
        Size of the process pool; batches run in order if None.
    batch_size : int, optional (default=10**5)

    Returns
    -------
    estimate : McEstimate
        Mean is log Z, where Z integrates prod |z_j - z_k|^2
        prod |z_j - w|^2 exp(-N sum |z_j|^2) over the plane; z_j are drawn
        from the density (N/pi) exp(-N |z|^2).

    Raises
    ------
    ConfigurationError
        If n_particles is outside [1, 4] or samples < 10**4.
    VarianceExplosionError
        If the relative standard error exceeds 0.5.
    """

    if not 1 <= n_particles <= _MAX_PARTICLES:
        raise ConfigurationError(
            'mc_partition supports 1 to {} particles (got {})'.format(
                _MAX_PARTICLES, n_particles))
    _check_samples(samples)
    if isinstance(clusters, PointCluster):
        clusters = [clusters]
    pinned = tuple(complex(w) for w in all_effective_points(list(clusters)))
    N = as_scale(scale).N

    arguments = [(n_particles, pinned, N, seed, key, size) for key, size in
                 enumerate(_batch_sizes(samples, batch_size))]
    mean, stderr, count = _reduce(_run_batches(_partition_batch, arguments,
                                               workers))
    relative = stderr / mean
    if relative > _EXPLOSION_RATIO:
        raise VarianceExplosionError(
            'Relative standard error {:.3g} exceeds {}'.format(
                relative, _EXPLOSION_RATIO))
    if relative > _BIAS_RATIO:
        warnings.warn('Relative standard error {:.3g} makes the log of the '
                      'mean biased'.format(relative), UserWarning)
    log_z = n_particles * math.log(math.pi / N) + math.log(mean)
    return McEstimate(log_z, relative, count, seed)


def mc_coulomb(disk_a, disk_b, samples=10**5, seed=0, workers=None,
               batch_size=_BATCH_SIZE):
    """
    Estimate of D(1_A, 1_B) between two disks.

    Parameters
    ----------
    disk_a : HoleModel or tuple(complex, float)
        Center and radius of A.
    disk_b : HoleModel or tuple(complex, float)
        Center and radius of B.
    samples : int, optional (default=10**5)
        At least 10**4.
    seed : int, optional (default=0)
    workers : None or int, optional (default=None)
    batch_size : int, optional (default=10**5)

    Returns
    -------
    estimate : McEstimate
        Mean of -log|x - y| for x, y uniform in A and B, times |A| |B|.
        Exactly coincident pairs are dropped. If A and B are the same
        disk, each sample averages -log|x_i - x_j| over the 6 pairs of 4
        points drawn in A.
    """

    _check_samples(samples)
    disks = []
    for disk in (disk_a, disk_b):
        if hasattr(disk, 'radius'):
            disk = (disk.center, disk.radius)
        center, radius = complex(disk[0]), float(disk[1])
        assert radius > 0, 'Disk radius must be positive'
        disks.append((center, radius))
    areas = math.pi**2 * disks[0][1]**2 * disks[1][1]**2

    arguments = [(disks[0], disks[1], seed, key, size) for key, size in
                 enumerate(_batch_sizes(samples, batch_size))]
    mean, stderr, count = _reduce(_run_batches(_coulomb_batch, arguments,
                                               workers))
    return McEstimate(areas * mean, areas * stderr, count, seed)
