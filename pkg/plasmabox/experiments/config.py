# -*- coding: utf-8 -*-
"""
Experiment configurations: defaults, JSON loading and validation.

Class
-----
ExperimentConfig :
    Resolved configuration of one experiment run.

Functions
---------
load_config :
    Reads a JSON configuration file.

Notes
-----
A configuration file is a JSON object holding at least the key
'experiment'. Missing keys are taken from the common defaults, then from the
defaults of the experiment; 'sweep' and 'tolerances' are merged key by key.
"""

#==============================================================================
# Importations
#==============================================================================

import copy
import json
import math
from dataclasses import dataclass, field, fields, replace
from ..configuration import generate_lattice_disk
from ..kernel import KERNEL_INDEX_CONVENTION
from ..oracle import SeededRNG
from ..savebox import load_cluster
from ..utilities.errors import ConfigurationError


#==============================================================================
# Global variables
#==============================================================================

_EXPERIMENTS = ('translate', 'rotate', 'decouple', 'multihole',
                'ginibre-asymptotics', 'oracle-battery')
_KERNEL_MODES = ('finite', 'infinite')
_AREA_MEASURES = ('lebesgue', 'reduced')
_FORMATS = ('csv', 'json')
_INTEGER_TOL = 1e-9

_COMMON_DEFAULTS = {
    'scale_grid': [100, 200, 400],
    'c_list': [0.02],
    'cluster': {'generator': 'lattice', 'centers': [[0., 0.]]},
    'sweep': {},
    'kernel_mode': 'finite',
    'area_measure': 'lebesgue',
    'seed': 0,
    'r1': 0.1,
    'r2': 0.1,
    'C1': None,
    'C2': None,
    'samples': 10**5,
    'tolerances': {},
    'output': None,
    'format': 'csv',
    'workers': 1,
}

_DEFAULTS = {
    'translate': {
        'cluster': {'generator': 'lattice', 'centers': [[-0.35, -0.6062]]},
        'sweep': {'translations': [[0., 0.], [0.025, 0.], [0.05, 0.],
                                   [0., 0.05], [-0.025, -0.0433]]},
        'tolerances': {'final_residual': 0.05},
    },
    'rotate': {
        'cluster': {'generator': 'lattice', 'centers': [[0.3, 0.]]},
        'sweep': {'angles': [0., 0.5, 1., 2., math.pi]},
        'tolerances': {'invariance': 1e-8},
    },
    'decouple': {
        'c_list': [0.02, 0.02],
        'sweep': {'separations': [0.5, 0.6, 0.8]},
    },
    'multihole': {
        'c_list': [0.01, 0.01],
        'cluster': {'generator': 'lattice',
                    'centers': [[-0.25, 0.], [0.25, 0.]]},
        'r1': 0.5,
        'r2': 0.75,
        'tolerances': {'final_residual': 0.1},
    },
    'ginibre-asymptotics': {
        'scale_grid': [50, 100, 200, 400, 800],
        'c_list': [],
        'tolerances': {'final_residual': 0.01, 'constant': 1e-3},
    },
    'oracle-battery': {
        'format': 'json',
        'tolerances': {'n_sigma': 3., 'trace': 1e-6, 'gradient': 1e-6,
                       'identity': 1e-12, 'cancellation': 1e-9,
                       'expansion': 1e-12, 'gap': 1e-10,
                       'invariance': 1e-8, 'lowdet_C': 5.},
    },
}

# Keys merged one level deep instead of replaced.
_MERGED_KEYS = ('sweep', 'tolerances')


#==============================================================================
# Class
#==============================================================================

@dataclass
class ExperimentConfig:
    """
    Resolved configuration of one experiment run.

    Parameters
    ----------
    experiment : str
        One of 'translate', 'rotate', 'decouple', 'multihole',
        'ginibre-asymptotics' and 'oracle-battery'.
    scale_grid : list(int)
        Strictly increasing values of N.
    c_list : list(float)
        Charge per cluster; M = c N must be an integer for every N.
    cluster : dict
        {'generator': 'lattice', 'centers': [[re, im], ...]} or
        {'files': [path, ...]} for JSON cluster files.
    sweep : dict
        'translations' ([re, im] pairs), 'angles' or 'separations'.
    kernel_mode : {'finite', 'infinite'}
    area_measure : {'lebesgue', 'reduced'}
    seed : int
    r1, r2 : float
        Separation constants.
    C1, C2 : None or float
        Spacing constants; None uses the lattice defaults.
    samples : int
        Monte Carlo samples per oracle item.
    tolerances : dict(str: float)
    output : None or str
        Output file; None writes to stdout.
    format : {'csv', 'json'}
    workers : int
        Processes used for sweep points; not part of the resolved record.
    """

    experiment: str
    scale_grid: list = field(default_factory=list)
    c_list: list = field(default_factory=list)
    cluster: dict = field(default_factory=dict)
    sweep: dict = field(default_factory=dict)
    kernel_mode: str = 'finite'
    area_measure: str = 'lebesgue'
    seed: int = 0
    r1: float = 0.1
    r2: float = 0.1
    C1: float = None
    C2: float = None
    samples: int = 10**5
    tolerances: dict = field(default_factory=dict)
    output: str = None
    format: str = 'csv'
    workers: int = 1

    def __post_init__(self):
        self.validate()

    @classmethod
    def from_dict(cls, data):
        """
        Builds a configuration from a partial dictionary and the defaults.
        """

        if not isinstance(data, dict):
            raise ConfigurationError('A configuration must be a JSON object')
        experiment = data.get('experiment')
        if experiment not in _EXPERIMENTS:
            raise ConfigurationError(
                "Unknown experiment '{}' (expected one of {})".format(
                    experiment, _EXPERIMENTS))
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigurationError(
                'Unknown configuration keys {}'.format(unknown))

        values = copy.deepcopy(_COMMON_DEFAULTS)
        for source in (_DEFAULTS[experiment], data):
            for key, value in copy.deepcopy(source).items():
                if key in _MERGED_KEYS and isinstance(value, dict):
                    values[key].update(value)
                else:
                    values[key] = value
        return cls(**values)

    def with_overrides(self, **overrides):
        """Copy with the non-None overrides applied (command-line flags)."""
        return replace(self, **{key: value for key, value in overrides.items()
                                if value is not None})

    def validate(self):
        """
        Raises ConfigurationError on any inconsistency.
        """

        if self.experiment not in _EXPERIMENTS:
            raise ConfigurationError(
                "Unknown experiment '{}'".format(self.experiment))
        if self.kernel_mode not in _KERNEL_MODES:
            raise ConfigurationError(
                "Unknown kernel mode '{}'".format(self.kernel_mode))
        if self.area_measure not in _AREA_MEASURES:
            raise ConfigurationError(
                "Unknown area measure '{}'".format(self.area_measure))
        if self.format not in _FORMATS:
            raise ConfigurationError(
                "Unknown output format '{}'".format(self.format))

        grid = list(self.scale_grid)
        if len(grid) == 0 or any(not _is_number(N) or N <= 0 for N in grid):
            raise ConfigurationError(
                'scale_grid must be a non-empty list of positive numbers')
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise ConfigurationError(
                'scale_grid must be strictly increasing (got {})'.format(grid))
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2**64:
            raise ConfigurationError(
                'seed must be an unsigned 64-bit integer (got {})'.format(
                    self.seed))
        if not isinstance(self.samples, int) or self.samples < 10**4:
            raise ConfigurationError(
                'samples must be an integer >= 10**4 (got {})'.format(
                    self.samples))
        if not isinstance(self.workers, int) or self.workers < 1:
            raise ConfigurationError('workers must be a positive integer')
        if any(not _is_number(v) for v in self.tolerances.values()):
            raise ConfigurationError('tolerances must be numbers')

        if 'files' in self.cluster:
            if len(self.cluster['files']) == 0:
                raise ConfigurationError('cluster files list is empty')
        else:
            if self.cluster.get('generator', 'lattice') != 'lattice':
                raise ConfigurationError("Unknown cluster generator '{}'"
                                         .format(self.cluster['generator']))
            self._check_charges()
            if self.experiment in ('translate', 'rotate', 'multihole'):
                centers = self.cluster.get('centers', [])
                if len(centers) != len(self.c_list):
                    raise ConfigurationError(
                        'cluster centers and c_list differ in length')
        self._check_cluster_number()

    def _check_charges(self):
        for c in self.c_list:
            if not _is_number(c) or c <= 0:
                raise ConfigurationError(
                    'Charges must be positive (got {})'.format(c))
            for N in self.scale_grid:
                M = c * N
                if abs(M - round(M)) > _INTEGER_TOL:
                    raise ConfigurationError(
                        'c N = {} is not an integer (c={}, N={})'.format(
                            M, c, N))

    def _check_cluster_number(self):
        count = len(self.cluster['files']) if 'files' in self.cluster \
            else len(self.c_list)
        expected = {'translate': (1, 1), 'rotate': (1, 1),
                    'decouple': (2, 2), 'multihole': (2, math.inf)}
        if self.experiment in expected:
            low, high = expected[self.experiment]
            if not low <= count <= high:
                raise ConfigurationError(
                    "Experiment '{}' needs {} cluster(s), got {}".format(
                        self.experiment, low if low == high else
                        'at least {}'.format(low), count))

    def clusters_at(self, N, centers=None):
        """
        Clusters of the configuration at scale N.

        Parameters
        ----------
        N : int
        centers : None or list(complex), optional (default=None)
            Overrides the configured centers; file clusters are then
            translated so that their centroids sit on them.

        Returns
        -------
        clusters : list(PointCluster)
        """

        if 'files' in self.cluster:
            clusters = [load_cluster(path) for path in self.cluster['files']]
            if centers is None:
                return clusters
            return [cluster.translated(center - cluster.centroid)
                    for cluster, center in zip(clusters, centers)]
        if centers is None:
            centers = [complex(*pair) for pair in self.cluster['centers']]
        return [generate_lattice_disk(N, int(round(c * N)), center)
                for c, center in zip(self.c_list, centers)]

    def resolved(self):
        """
        Complete record of the run, as embedded in output headers.

        Returns
        -------
        record : dict
            All fields but 'workers', plus the generator name and the
            kernel index convention.
        """

        record = {f.name: copy.deepcopy(getattr(self, f.name))
                  for f in fields(self) if f.name != 'workers'}
        record['generator_name'] = SeededRNG.generator_name
        record['kernel_index_convention'] = KERNEL_INDEX_CONVENTION
        return record


#==============================================================================
# Functions
#==============================================================================

def _is_number(value):
    return isinstance(value, (int, float)) and not isinstance(value, bool) \
        and math.isfinite(value)


def load_config(file_path):
    """
    Reads a JSON configuration file.

    Parameters
    ----------
    file_path : str

    Returns
    -------
    config : ExperimentConfig

    Raises
    ------
    ConfigurationError
        If the file is missing, is not valid JSON or holds an invalid
        configuration.
    """

    try:
        with open(file_path, 'r', encoding='utf-8') as file:
            data = json.load(file)
    except OSError as error:
        raise ConfigurationError('Cannot read configuration {}: {}'.format(
            file_path, error.strerror)) from error
    except json.JSONDecodeError as error:
        raise ConfigurationError('Invalid JSON in {}: {}'.format(
            file_path, error)) from error
    return ExperimentConfig.from_dict(data)
