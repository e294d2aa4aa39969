# -*- coding: utf-8 -*-
"""
Seeded random number generator for reproducible Monte Carlo runs.

Class
-----
SeededRNG :
    numpy Generator on a Philox bit stream, with keyed forks.

Notes
-----
Forks are derived through numpy.random.SeedSequence with a spawn key, so a
batch of given key draws the same numbers whatever the worker running it.
"""

#==============================================================================
# Importations
#==============================================================================

import numpy as np


#==============================================================================
# Global variables
#==============================================================================

_GENERATOR_NAME = 'Philox'


#==============================================================================
# Class
#==============================================================================

class SeededRNG(object):
    """
    numpy Generator on a Philox bit stream, with keyed forks.

    Parameters
    ----------
    seed : int
        Non-negative 64-bit seed.
    spawn_key : tuple(int), optional (default=())
        Path of fork keys leading to this generator.
    """

    generator_name = _GENERATOR_NAME

    def __init__(self, seed, spawn_key=()):
        assert seed >= 0, 'Seed must be non-negative (got {})'.format(seed)
        self._seed = int(seed)
        self._spawn_key = tuple(int(k) for k in spawn_key)
        sequence = np.random.SeedSequence(self._seed,
                                          spawn_key=self._spawn_key)
        self._rng = np.random.Generator(np.random.Philox(sequence))

    @property
    def seed(self):
        return self._seed

    @property
    def spawn_key(self):
        return self._spawn_key

    def normal(self, size=None):
        return self._rng.standard_normal(size)

    def uniform(self, low=0., high=1., size=None):
        return self._rng.uniform(low, high, size)

    def complex_gaussian(self, variance, size=None):
        """
        Complex Gaussian with E|z|^2 = ``variance``.
        """

        scale = np.sqrt(variance / 2)
        return scale * (self._rng.standard_normal(size) +
                        1j * self._rng.standard_normal(size))

    def uniform_disk(self, center, radius, size=None):
        """
        Uniform points in the disk D(center, radius).
        """

        r = radius * np.sqrt(self._rng.uniform(size=size))
        theta = 2 * np.pi * self._rng.uniform(size=size)
        return center + r * np.exp(1j * theta)

    def fork(self, key):
        """
        Child generator derived from this one and ``key``.
        """

        return SeededRNG(self._seed, self._spawn_key + (int(key),))
