# -*- coding: utf-8 -*-
"""
Experiment drivers: sweeps over N, convergence summaries and outputs.

Class
-----
ExperimentResult :
    Rows, summary and verdict of one experiment run.

Functions
---------
shrinks :
    True if a sequence of residuals shrinks step by step.
run_translate :
    F^Corr(a) - F^Corr(0) for a single translated cluster.
run_rotate :
    F^Corr(phi) - F^Corr(0) for a jointly rotated configuration.
run_decouple :
    Decoupling gap of two lattice clusters against their separation.
run_multihole :
    F^Corr(all) - sum F^Corr(each) against the multi-hole prediction.
run_ginibre_asymptotics :
    Exact -log Z_N against its large-N expansion.
run_oracle_battery :
    Every oracle cross-check, reported item by item.
run_experiment :
    Dispatches a configuration to its driver.
render_result :
    Output text of a result (CSV or JSON).
write_result :
    Writes a result to the configured output.

Notes
-----
Sweep points are computed in a process pool when ``config.workers > 1``;
rows are always assembled in (N, sweep point) order.
"""

#==============================================================================
# Importations
#==============================================================================

import sys
import json
import math
from dataclasses import dataclass, field
from multiprocessing import Pool
import numpy as np
from ..configuration import (PointCluster, HoleModel, generate_lattice_disk,
                             separation_check)
from ..kernel import GinibreKernel, kernel_matrix
from ..numerics import hermitian_logdet, zeta_prime_minus_one
from ..meanfield import (MeanFieldProblem, emf_energy, emf_gradient,
                         mf_identity_check, cancellation_check,
                         disk_self_energy)
from ..freeenergy import (correlation_energy, log_z_pinned, decoupled_logdet,
                          decoupling_gap_two_points, brute_force_det_expansion,
                          lowdet_bound_check, multihole_prediction_terms,
                          ginibre_log_z_exact, ginibre_log_z_asymptotic,
                          ginibre_constant_estimate)
from ..oracle import (SeededRNG, mc_partition, mc_coulomb, kernel_trace,
                      finite_difference_gradient)
from ..savebox import format_csv, format_json, save_data, _split_output_path
from ..utilities.log import make_header, dependency_versions, report
from ..utilities.errors import AssumptionError, NumericalError, \
    PlasmaboxError


#==============================================================================
# Global variables
#==============================================================================

_SHRINK_FLOOR = 1e-10

_PREDICTION_TERMS = ('NlogN', 'N', 'area_measure', 'logN', 'zeta', 'log2pi',
                     'charges')

_COLUMNS = {
    'translate': ['N', 'M', 'a_re', 'a_im', 'abs_a', 'f_corr', 'residual'],
    'rotate': ['N', 'M', 'phi', 'f_corr', 'residual'],
    'decouple': ['N', 'd', 'M_a', 'M_b', 'sum_blocks', 'full', 'gap',
                 'two_point_gap'],
    'multihole': ['N', 'n_clusters', 'c_total', 'f_corr_all', 'f_corr_sum',
                  'lhs', 'prediction', 'residual'] +
                 ['term_' + key for key in _PREDICTION_TERMS],
    'ginibre-asymptotics': ['N', 'minus_log_z', 'asymptotic', 'residual',
                            'constant_estimate', 'constant_target',
                            'constant_error'],
    'oracle-battery': ['name', 'passed', 'value', 'target', 'error',
                       'tolerance', 'message'],
}

# (free particles, pinned points); every hole fits in its droplet.
_PINNED_FIXTURES = [(2, [0.]), (2, [0.3]), (2, [-0.2 + 0.2j]),
                    (2, [0.2, -0.2]), (2, [0.1j, 0.3]),
                    (3, [0.]), (3, [0.4j]), (3, [-0.3 + 0.1j]),
                    (3, [0.2, -0.3j]), (3, [0.25, -0.25])]

_COULOMB_RADII = (0.5, 1., 2.)
_TRACE_SCALES = (1., 10.)
_TRACE_MAX_INDEX = 10
_INVARIANCE_POINTS = 50


#==============================================================================
# Class
#==============================================================================

@dataclass
class ExperimentResult:
    """
    Rows, summary and verdict of one experiment run.

    Parameters
    ----------
    experiment : str
    columns : list(str)
    rows : list(dict)
    summary : dict
        Holds at least the key 'passed'.
    """

    experiment: str
    columns: list
    rows: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    @property
    def passed(self):
        return bool(self.summary.get('passed', False))

    @property
    def exit_code(self):
        return 0 if self.passed else 1

    def to_dict(self, header=None):
        return {'header': header, 'experiment': self.experiment,
                'columns': list(self.columns), 'rows': self.rows,
                'summary': self.summary}


#==============================================================================
# Functions
#==============================================================================

def shrinks(values, floor=_SHRINK_FLOOR):
    """
    True if a sequence of residuals shrinks step by step.

    Parameters
    ----------
    values : list(float)
        Residuals along the N grid; absolute values are compared.
    floor : float, optional (default=1e-10)
        A step between two residuals below ``floor`` counts as shrinking.

    Returns
    -------
    shrinking : bool
    """

    values = [abs(v) for v in values]
    return all(b < a or (a < floor and b < floor)
               for a, b in zip(values, values[1:]))


def _map(task, arguments, workers=1):
    if workers > 1 and len(arguments) > 1:
        with Pool(min(workers, len(arguments))) as pool:
            return pool.map(task, arguments)
    return [task(args) for args in arguments]


def _correlation_energy_task(args):
    clusters, N, kernel_mode = args
    return correlation_energy(clusters, N, kernel_mode)


def _decoupling_task(args):
    clusters, N = args
    return decoupled_logdet(clusters, N)


def _check_assumptions(clusters, N, config):
    checked = separation_check(clusters, N, config.r1, config.r2, config.C1,
                               config.C2)
    if not checked.ok:
        raise AssumptionError(
            'Clusters fail the assumptions at N={} (spacing_ok={}, '
            'pair_ok={}, boundary_ok={})'.format(
                N, checked.spacing_ok, checked.pair_ok, checked.boundary_ok))


def _finish(experiment, rows, summary):
    for i, row in enumerate(rows):
        for key, value in row.items():
            if isinstance(value, float) and not math.isfinite(value):
                raise NumericalError(
                    "Non-finite value in column '{}' of row {}".format(key,
                                                                       i))
    return ExperimentResult(experiment, list(_COLUMNS[experiment]), rows,
                            summary)


def _invariance_summary(max_residuals, tolerance, key):
    final = max_residuals[-1]
    shrinking = shrinks(max_residuals)
    return {'max_residual': max_residuals, 'shrinking': shrinking,
            'final_residual': final, key: tolerance,
            'passed': bool(shrinking and final < tolerance)}


def run_translate(config, verbose=False):
    """
    F^Corr(a) - F^Corr(0) for a single translated cluster.

    Parameters
    ----------
    config : ExperimentConfig
        One cluster; sweep key 'translations' holds [re, im] pairs.
    verbose : boolean, optional (default=False)

    Returns
    -------
    result : ExperimentResult
        Passed when the maximal residual over the sweep shrinks along the
        N grid and is below tolerances['final_residual'] at the last N.

    Raises
    ------
    AssumptionError
        If the cluster fails separation_check at some N.
    """

    translations = [complex(*pair) for pair in config.sweep['translations']]
    sweep = [0j] + translations
    tasks = []
    for N in config.scale_grid:
        cluster = config.clusters_at(N)[0]
        _check_assumptions([cluster], N, config)
        tasks.extend(([cluster.translated(a)], N, config.kernel_mode)
                     for a in sweep)
    values = _map(_correlation_energy_task, tasks, config.workers)

    rows, max_residuals = [], []
    for i, N in enumerate(config.scale_grid):
        chunk = values[i * len(sweep):(i + 1) * len(sweep)]
        M = tasks[i * len(sweep)][0][0].count
        residuals = []
        for a, value in zip(translations, chunk[1:]):
            residual = value - chunk[0]
            residuals.append(residual)
            rows.append({'N': N, 'M': M, 'a_re': a.real, 'a_im': a.imag,
                         'abs_a': abs(a), 'f_corr': value,
                         'residual': residual})
            report('translate N={} a={:.4g} residual={:.3e}'.format(
                N, a, residual), verbose)
        max_residuals.append(max([abs(r) for r in residuals], default=0.))

    summary = _invariance_summary(max_residuals,
                                  config.tolerances['final_residual'],
                                  'tolerance')
    return _finish('translate', rows, summary)


def run_rotate(config, verbose=False):
    """
    F^Corr(phi) - F^Corr(0) for a jointly rotated configuration.

    Parameters
    ----------
    config : ExperimentConfig
        One cluster; sweep key 'angles' holds the rotation angles.
    verbose : boolean, optional (default=False)

    Returns
    -------
    result : ExperimentResult
        Passed when the maximal residual is below tolerances['invariance']
        at every N.
    """

    angles = [float(phi) for phi in config.sweep['angles']]
    sweep = [0.] + angles
    tasks = []
    for N in config.scale_grid:
        cluster = config.clusters_at(N)[0]
        _check_assumptions([cluster], N, config)
        tasks.extend(([cluster.rotated(phi)], N, config.kernel_mode)
                     for phi in sweep)
    values = _map(_correlation_energy_task, tasks, config.workers)

    rows, max_residuals = [], []
    for i, N in enumerate(config.scale_grid):
        chunk = values[i * len(sweep):(i + 1) * len(sweep)]
        M = tasks[i * len(sweep)][0][0].count
        residuals = [value - chunk[0] for value in chunk[1:]]
        for phi, value, residual in zip(angles, chunk[1:], residuals):
            rows.append({'N': N, 'M': M, 'phi': phi, 'f_corr': value,
                         'residual': residual})
            report('rotate N={} phi={:.4g} residual={:.3e}'.format(
                N, phi, residual), verbose)
        max_residuals.append(max([abs(r) for r in residuals], default=0.))

    tolerance = config.tolerances['invariance']
    summary = {'max_residual': max_residuals, 'invariance': tolerance,
               'passed': all(r < tolerance for r in max_residuals)}
    return _finish('rotate', rows, summary)


def run_decouple(config, verbose=False):
    """
    Decoupling gap of two lattice clusters against their separation.

    Parameters
    ----------
    config : ExperimentConfig
        Two clusters, placed at -d/2 and d/2 for every separation d of
        the sweep key 'separations'.
    verbose : boolean, optional (default=False)

    Returns
    -------
    result : ExperimentResult
        Passed when every gap is non-positive (up to 1e-10) and, at each
        separation, |gap| shrinks along the N grid.
    """

    separations = [float(d) for d in config.sweep['separations']]
    tasks = [(config.clusters_at(N, centers=[-d / 2, d / 2]), N)
             for N in config.scale_grid for d in separations]
    values = _map(_decoupling_task, tasks, config.workers)

    rows = []
    gaps = {repr(d): [] for d in separations}
    for k, ((clusters, N), (sum_blocks, full, gap)) in enumerate(
            zip(tasks, values)):
        d = separations[k % len(separations)]
        rows.append({'N': N, 'd': d, 'M_a': clusters[0].count,
                     'M_b': clusters[1].count, 'sum_blocks': sum_blocks,
                     'full': full, 'gap': gap,
                     'two_point_gap': decoupling_gap_two_points(N, d)})
        gaps[repr(d)].append(abs(gap))
        report('decouple N={} d={:.4g} gap={:.3e}'.format(N, d, gap),
               verbose)

    shrinking = {key: shrinks(values) for key, values in gaps.items()}
    nonpositive = all(row['gap'] <= _SHRINK_FLOOR for row in rows)
    summary = {'abs_gap': gaps, 'shrinking': shrinking,
               'nonpositive_gap': nonpositive,
               'passed': bool(nonpositive and all(shrinking.values()))}
    return _finish('decouple', rows, summary)


def run_multihole(config, verbose=False):
    """
    F^Corr(all) - sum F^Corr(each) against the multi-hole prediction.

    Parameters
    ----------
    config : ExperimentConfig
        At least two clusters.
    verbose : boolean, optional (default=False)

    Returns
    -------
    result : ExperimentResult
        Rows hold the termwise prediction. Passed when |residual| shrinks
        along the N grid and is below tolerances['final_residual'] at the
        last N.

    Raises
    ------
    AssumptionError
        If the clusters fail separation_check at some N.
    """

    tasks, layout = [], []
    for N in config.scale_grid:
        clusters = config.clusters_at(N)
        _check_assumptions(clusters, N, config)
        layout.append((N, clusters, len(tasks)))
        tasks.append((clusters, N, config.kernel_mode))
        tasks.extend(([cluster], N, config.kernel_mode)
                     for cluster in clusters)
    values = _map(_correlation_energy_task, tasks, config.workers)

    rows, residuals = [], []
    for N, clusters, start in layout:
        f_all = values[start]
        f_sum = math.fsum(values[start + 1:start + 1 + len(clusters)])
        c_list = [cluster.count / N for cluster in clusters]
        c_total = math.fsum(c_list)
        terms = multihole_prediction_terms(N, c_total, c_list,
                                           config.area_measure)
        prediction = math.fsum(terms.values())
        lhs = f_all - f_sum
        row = {'N': N, 'n_clusters': len(clusters), 'c_total': c_total,
               'f_corr_all': f_all, 'f_corr_sum': f_sum, 'lhs': lhs,
               'prediction': prediction, 'residual': lhs - prediction}
        row.update(('term_' + key, terms[key]) for key in _PREDICTION_TERMS)
        rows.append(row)
        residuals.append(row['residual'])
        report('multihole N={} residual={:.3e}'.format(N, row['residual']),
               verbose)

    summary = _invariance_summary([abs(r) for r in residuals],
                                  config.tolerances['final_residual'],
                                  'tolerance')
    return _finish('multihole', rows, summary)


def run_ginibre_asymptotics(config, verbose=False):
    """
    Exact -log Z_N against its large-N expansion.

    Parameters
    ----------
    config : ExperimentConfig
    verbose : boolean, optional (default=False)

    Returns
    -------
    result : ExperimentResult
        Passed when |residual| shrinks along the N grid, is below
        tolerances['final_residual'] at the last N, and the constant
        estimate there is within tolerances['constant'] of its limit.
    """

    target = -zeta_prime_minus_one() - math.log(2 * math.pi) / 2
    rows = []
    for N in config.scale_grid:
        N = int(round(N))
        minus_log_z = -ginibre_log_z_exact(N, N)
        if config.area_measure == 'reduced':
            minus_log_z += N * math.log(math.pi)
        asymptotic, _ = ginibre_log_z_asymptotic(N, N, config.area_measure)
        estimate = ginibre_constant_estimate(N, config.area_measure)
        rows.append({'N': N, 'minus_log_z': minus_log_z,
                     'asymptotic': asymptotic,
                     'residual': asymptotic - minus_log_z,
                     'constant_estimate': estimate,
                     'constant_target': target,
                     'constant_error': abs(estimate - target)})
        report('ginibre-asymptotics N={} residual={:.3e}'.format(
            N, rows[-1]['residual']), verbose)

    residuals = [abs(row['residual']) for row in rows]
    shrinking = shrinks(residuals)
    final_constant = rows[-1]['constant_error']
    summary = {'abs_residual': residuals, 'shrinking': shrinking,
               'final_residual': residuals[-1],
               'final_constant_error': final_constant,
               'tolerance': config.tolerances['final_residual'],
               'constant_tolerance': config.tolerances['constant'],
               'passed': bool(
                   shrinking and
                   residuals[-1] < config.tolerances['final_residual'] and
                   final_constant < config.tolerances['constant'])}
    return _finish('ginibre-asymptotics', rows, summary)


#------------------------------------------------------------------------------
# Oracle battery
#------------------------------------------------------------------------------

def _item(name, compute):
    """
    Runs one battery item; library errors make it fail with a message.
    """

    try:
        outcome = compute()
    except PlasmaboxError as error:
        return {'name': name, 'passed': False, 'value': None, 'target': None,
                'error': None, 'tolerance': None,
                'message': '{}: {}'.format(type(error).__name__, error)}
    passed = outcome.pop('passed', outcome['error'] < outcome['tolerance'])
    return dict(name=name, passed=bool(passed), message='', **outcome)


def _mc_outcome(estimate, target, n_sigma):
    return {'value': estimate.mean, 'target': target,
            'error': abs(estimate.mean - target),
            'tolerance': n_sigma * estimate.stderr}


def _spread_points(rng, count, radius=0.5, min_gap=0.3):
    points = []
    while len(points) < count:
        z = complex(rng.uniform_disk(0j, radius, 1)[0])
        if all(abs(z - p) >= min_gap for p in points):
            points.append(z)
    return points


def _monte_carlo_items(config):
    tol = config.tolerances
    items = []

    def seed(offset):
        return (config.seed + offset) % 2**64

    def ginibre():
        estimate = mc_partition(2, [], 1., config.samples, seed(0),
                                config.workers)
        return _mc_outcome(estimate, math.log(2 * math.pi**2),
                           tol['n_sigma'])
    items.append(_item('mc_partition.ginibre', ginibre))

    for k, (n, points) in enumerate(_PINNED_FIXTURES):
        def pinned(n=n, cluster=PointCluster(points), offset=1 + k):
            exact = log_z_pinned(cluster, n).log_z.log_mag
            estimate = mc_partition(n, cluster, n, config.samples,
                                    seed(offset), config.workers)
            return _mc_outcome(estimate, exact, tol['n_sigma'])
        items.append(_item('mc_partition.pinned[{}]'.format(k), pinned))

    for i, R in enumerate(_COULOMB_RADII):
        def coulomb(R=R, offset=1 + len(_PINNED_FIXTURES) + i):
            disk = HoleModel(0j, R)
            estimate = mc_coulomb(disk, disk, config.samples,
                                  seed(offset), config.workers)
            return _mc_outcome(estimate, disk_self_energy(R), tol['n_sigma'])
        items.append(_item('mc_coulomb.self_energy[R={}]'.format(R),
                           coulomb))
    return items


def _deterministic_items(config):
    tol = config.tolerances
    rng = SeededRNG(config.seed)
    items = []

    for N in _TRACE_SCALES:
        def trace(N=N):
            errors = [abs(kernel_trace(GinibreKernel(N, j_top)) - (j_top + 1))
                      for j_top in range(_TRACE_MAX_INDEX + 1)]
            return {'value': max(errors), 'target': 0., 'error': max(errors),
                    'tolerance': tol['trace']}
        items.append(_item('kernel_trace[N={}]'.format(N), trace))

    def gradient():
        N = 100.
        problem = MeanFieldProblem.from_clusters(
            [generate_lattice_disk(N, 3, 0.3 - 0.2j)], N)
        numeric = finite_difference_gradient(
            lambda a: emf_energy(problem.translated(
                0, complex(a[0], a[1]))).energy, [0., 0.])
        exact = emf_gradient(problem, 0)
        error = abs(complex(*numeric) - exact) / abs(exact)
        return {'value': abs(complex(*numeric)), 'target': abs(exact),
                'error': error, 'tolerance': tol['gradient']}
    items.append(_item('finite_difference_gradient', gradient))

    def identity():
        draws = rng.fork(0).uniform(0., 0.2, (100, 2))
        error = max(abs(mf_identity_check(c1, c2)) for c1, c2 in draws)
        return {'value': error, 'target': 0., 'error': error,
                'tolerance': tol['identity']}
    items.append(_item('mf_identity_check', identity))

    def cancellation():
        N, M = 100., 5
        big = MeanFieldProblem(N, N + M)
        errors = []
        for center in rng.fork(1).uniform_disk(0j, 0.5, 10):
            hole = MeanFieldProblem.from_clusters(
                [generate_lattice_disk(N, M, complex(center))], N)
            errors.append(abs(cancellation_check(big, hole)) / N**2)
        return {'value': max(errors), 'target': 0., 'error': max(errors),
                'tolerance': tol['cancellation']}
    items.append(_item('cancellation_check', cancellation))

    def expansion():
        N = 10.
        kernel = GinibreKernel.infinite(N)
        stream = rng.fork(2)
        errors = []
        for _ in range(20):
            points = _spread_points(stream, 4)
            direct = np.linalg.det(kernel_matrix(kernel,
                                                 points).to_complex()).real
            value = brute_force_det_expansion(PointCluster(points[:2]),
                                              PointCluster(points[2:]), N)
            errors.append(abs(value - direct) / abs(direct))
        return {'value': max(errors), 'target': 0., 'error': max(errors),
                'tolerance': tol['expansion']}
    items.append(_item('brute_force_det_expansion', expansion))

    def gap():
        N = 20.
        errors = []
        for d in (0.2, 0.3, 0.5):
            _, _, value = decoupled_logdet([PointCluster([0.]),
                                            PointCluster([d])], N)
            errors.append(abs(value - decoupling_gap_two_points(N, d)))
        return {'value': max(errors), 'target': 0., 'error': max(errors),
                'tolerance': tol['gap']}
    items.append(_item('decoupling_gap_two_points', gap))

    c = config.c_list[0] if config.c_list else 0.02
    for N in config.scale_grid:
        def lowdet(N=N):
            cluster = generate_lattice_disk(N, int(round(c * N)))
            ok = lowdet_bound_check(cluster, N, tol['lowdet_C'],
                                    config.kernel_mode)
            return {'value': float(ok), 'target': 1.,
                    'error': 0. if ok else 1., 'tolerance': tol['lowdet_C'],
                    'passed': ok}
        items.append(_item('lowdet_bound_check[N={}]'.format(N), lowdet))

    N = _INVARIANCE_POINTS / 0.02
    cluster = generate_lattice_disk(N, _INVARIANCE_POINTS)
    kernel = GinibreKernel.infinite(N)

    def logdet(moved):
        return hermitian_logdet(kernel_matrix(
            kernel, moved.effective_points)).log_mag

    moves = {'translation_invariance': cluster.translated(
                 complex(rng.fork(3).uniform_disk(0j, 0.1, 1)[0])),
             'rotation_invariance': cluster.rotated(
                 float(rng.fork(4).uniform(0., 2 * math.pi)))}
    for name, moved in moves.items():
        def invariance(moved=moved):
            reference = logdet(cluster)
            error = abs(logdet(moved) - reference) / abs(reference)
            return {'value': error, 'target': 0., 'error': error,
                    'tolerance': tol['invariance']}
        items.append(_item(name, invariance))
    return items


def run_oracle_battery(config, verbose=False):
    """
    Every oracle cross-check, reported item by item.

    Parameters
    ----------
    config : ExperimentConfig
        tolerances: 'n_sigma', 'trace', 'gradient', 'identity',
        'cancellation', 'expansion', 'gap', 'invariance' and 'lowdet_C'.
    verbose : boolean, optional (default=False)

    Returns
    -------
    result : ExperimentResult
        One row per item; passed when every item passes.
    """

    rows = _monte_carlo_items(config) + _deterministic_items(config)
    for row in rows:
        report('oracle {} {}'.format(row['name'],
                                     'pass' if row['passed'] else 'FAIL'),
               verbose)
    failed = [row['name'] for row in rows if not row['passed']]
    summary = {'items': len(rows), 'failed': failed,
               'passed': len(failed) == 0}
    return _finish('oracle-battery', rows, summary)


_RUNNERS = {'translate': run_translate,
            'rotate': run_rotate,
            'decouple': run_decouple,
            'multihole': run_multihole,
            'ginibre-asymptotics': run_ginibre_asymptotics,
            'oracle-battery': run_oracle_battery}


def run_experiment(config, verbose=False):
    """
    Dispatches a configuration to its driver.

    Parameters
    ----------
    config : ExperimentConfig
    verbose : boolean, optional (default=False)

    Returns
    -------
    result : ExperimentResult
    """

    return _RUNNERS[config.experiment](config, verbose)


#------------------------------------------------------------------------------
# Outputs
#------------------------------------------------------------------------------

def _json_header(config):
    return {'dependencies': dependency_versions(),
            'configuration': config.resolved()}


def _csv_header(result, config):
    return (make_header(config=config.resolved(), timestamp=False) +
            '# Summary: ' + json.dumps(result.summary, sort_keys=True) +
            '\n')


def render_result(result, config):
    """
    Output text of a result (CSV or JSON).

    Parameters
    ----------
    result : ExperimentResult
    config : ExperimentConfig
        Its 'format' selects the output; the resolved configuration is
        embedded as header.

    Returns
    -------
    text : str
        Identical for identical configurations and package versions.
    """

    if config.format == 'json':
        return format_json(result.to_dict(_json_header(config)))
    return format_csv(result.rows, result.columns,
                      _csv_header(result, config))


def write_result(result, config, stream=None):
    """
    Writes a result to the configured output.

    Parameters
    ----------
    result : ExperimentResult
    config : ExperimentConfig
        If config.output is None, the text goes to ``stream``; otherwise
        it is saved with the extension of config.format.
    stream : None or file, optional (default=None)
        Defaults to sys.stdout.

    Returns
    -------
    full_path : None or str
        Path of the saved file.
    """

    if config.output is None:
        (sys.stdout if stream is None else stream).write(
            render_result(result, config))
        return None
    folder, basename, _ = _split_output_path(config.output)
    if config.format == 'json':
        return save_data(result.to_dict(_json_header(config)), basename,
                         folder, mode='json')
    return save_data(result.rows, basename, folder, mode='csv',
                     columns=result.columns,
                     header=_csv_header(result, config))
