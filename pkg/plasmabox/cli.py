# -*- coding: utf-8 -*-
"""
Command-line front door of plasmabox.

Functions
---------
build_parser :
    Parser of every sub-command.
main :
    Runs the command line and returns the exit code.

Notes
-----
Exit codes: 0 success, 1 acceptance failure, 2 invalid or inadmissible
configuration, 3 numerical failure.

Commands computing a single record (kernel, meanfield, freeenergy and the
Monte Carlo estimators) print it as JSON, or as 'key,value' CSV rows with
``--format csv``. Experiments write their rows with the resolved
configuration as header.
"""

#==============================================================================
# Importations
#==============================================================================

import sys
import json
import argparse
from . import __version__
from .kernel import GinibreKernel, eval_kernel
from .configuration import PointCluster, HoleModel
from .meanfield import (MeanFieldProblem, emf_energy, emf_gradient,
                        emf_split_difference)
from .freeenergy import (ginibre_log_z_exact, ginibre_log_z_asymptotic,
                         log_z_pinned, multihole_prediction_terms)
from .oracle import mc_partition, mc_coulomb
from .experiments import (ExperimentConfig, load_config, run_experiment,
                          write_result)
from .savebox import (format_csv, format_json, save_data, load_cluster,
                      _split_output_path)
from .utilities.log import (duplicate_stdout_stream_to_file,
                            suppress_stdout_stream_to_file, report)
from .utilities.errors import (PlasmaboxError, ConfigurationError,
                               AcceptanceFailure)


#==============================================================================
# Global variables
#==============================================================================

_EXPERIMENT_COMMANDS = ('translate', 'rotate', 'decouple', 'multihole',
                        'ginibre-asymptotics')


#==============================================================================
# Functions
#==============================================================================

def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', default=None,
                        help='JSON configuration file (experiments)')
    common.add_argument('--seed', type=int, default=None,
                        help='unsigned 64-bit seed')
    common.add_argument('--out', default=None,
                        help='output file; stdout if omitted')
    common.add_argument('--format', choices=['csv', 'json'], default=None,
                        help='output format')
    common.add_argument('--log', default=None, metavar='NAME',
                        help='copy the console output to the log file NAME')
    common.add_argument('--workers', type=int, default=None, metavar='K',
                        help='size of the process pool')
    return common


def _cluster_options(parser):
    parser.add_argument('--cluster', action='append', default=[],
                        metavar='FILE', help='JSON cluster file '
                        '(repeat for several clusters)')
    parser.add_argument('--points', type=complex, nargs='+', default=None,
                        help='points of one more cluster, e.g. 0.1+0.2j')


def build_parser():
    """
    Parser of every sub-command.

    Returns
    -------
    parser : argparse.ArgumentParser
    """

    common = _common_options()
    parser = argparse.ArgumentParser(
        prog='plasmabox',
        description='Free energy of the 2D one-component plasma at beta=2 '
                    'with pinned charges.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    groups = parser.add_subparsers(dest='group', metavar='GROUP')
    groups.required = True

    # kernel
    commands = groups.add_parser('kernel', help='correlation kernel') \
        .add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True
    command = commands.add_parser('eval', parents=[common],
                                  help='K(z, w) in log-polar form')
    command.add_argument('--N', type=float, required=True)
    command.add_argument('--z', type=complex, required=True)
    command.add_argument('--w', type=complex, required=True)
    command.add_argument('--particles', type=int, default=None,
                         help='J of the finite kernel; infinite if omitted')
    command.set_defaults(handler=_kernel_eval)

    # meanfield
    commands = groups.add_parser('meanfield', help='mean-field energies') \
        .add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True
    for name, handler, text in [
            ('energy', _meanfield_energy, 'E^MF at scale N^2'),
            ('gradient', _meanfield_gradient, 'gradient in a translation'),
            ('split', _meanfield_split, 'E_12 - E_1 - E_2 (two clusters)')]:
        command = commands.add_parser(name, parents=[common], help=text)
        command.add_argument('--N', type=float, required=True)
        command.add_argument('--charge', type=float, default=None,
                             help='mobile charge J (default N)')
        _cluster_options(command)
        if name == 'gradient':
            command.add_argument('--index', type=int, default=None,
                                 help='moved cluster; all if omitted')
        command.set_defaults(handler=handler)

    # freeenergy
    commands = groups.add_parser('freeenergy', help='partition functions') \
        .add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True
    command = commands.add_parser('exact', parents=[common],
                                  help='log Z_J of J free particles')
    command.add_argument('--J', type=int, required=True)
    command.add_argument('--N', type=float, required=True)
    command.set_defaults(handler=_freeenergy_exact)
    command = commands.add_parser('asymptotic', parents=[common],
                                  help='large-J expansion of -log Z_J')
    command.add_argument('--J', type=int, required=True)
    command.add_argument('--N', type=float, required=True)
    command.add_argument('--area-measure', default='lebesgue',
                         choices=['lebesgue', 'reduced'])
    command.set_defaults(handler=_freeenergy_asymptotic)
    command = commands.add_parser('pinned', parents=[common],
                                  help='log Z_N with pinned charges')
    command.add_argument('--N', type=int, required=True)
    command.add_argument('--kernel-mode', default='finite',
                         choices=['finite', 'infinite'])
    _cluster_options(command)
    command.set_defaults(handler=_freeenergy_pinned)
    command = commands.add_parser('prediction', parents=[common],
                                  help='multi-hole prediction, termwise')
    command.add_argument('--N', type=float, required=True)
    command.add_argument('--c-list', type=float, nargs='+', required=True)
    command.add_argument('--area-measure', default='lebesgue',
                         choices=['lebesgue', 'reduced'])
    command.set_defaults(handler=_freeenergy_prediction)

    # experiment
    commands = groups.add_parser('experiment', help='convergence sweeps') \
        .add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True
    for name in _EXPERIMENT_COMMANDS:
        command = commands.add_parser(name, parents=[common])
        command.set_defaults(handler=_experiment, experiment=name)

    # oracle
    commands = groups.add_parser('oracle', help='independent cross-checks') \
        .add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True
    command = commands.add_parser('battery', parents=[common],
                                  help='every oracle cross-check')
    command.set_defaults(handler=_experiment, experiment='oracle-battery')
    command = commands.add_parser('mc-partition', parents=[common],
                                  help='Monte Carlo estimate of log Z')
    command.add_argument('--n', type=int, required=True,
                         help='number of free particles (1 to 4)')
    command.add_argument('--N', type=float, required=True)
    command.add_argument('--samples', type=int, default=10**5)
    _cluster_options(command)
    command.set_defaults(handler=_oracle_mc_partition)
    command = commands.add_parser('mc-coulomb', parents=[common],
                                  help='Monte Carlo Coulomb energy of disks')
    for disk in ('a', 'b'):
        command.add_argument('--center-' + disk, type=complex, default=0j)
        command.add_argument('--radius-' + disk, type=float, required=True)
    command.add_argument('--samples', type=int, default=10**5)
    command.set_defaults(handler=_oracle_mc_coulomb)

    return parser


#------------------------------------------------------------------------------
# Records
#------------------------------------------------------------------------------

def _flatten(record, prefix=''):
    for key, value in sorted(record.items()):
        name = prefix + str(key)
        if isinstance(value, dict):
            yield from _flatten(value, name + '.')
        elif isinstance(value, (list, tuple)):
            yield name, json.dumps(value)
        else:
            yield name, value


def _emit(record, args):
    """Writes a single record as JSON or key/value CSV."""

    mode = args.format or 'json'
    if mode == 'csv':
        rows = [{'key': key, 'value': value}
                for key, value in _flatten(record)]
    if args.out is None:
        sys.stdout.write(format_json(record) if mode == 'json' else
                         format_csv(rows, ['key', 'value']))
    else:
        folder, basename, _ = _split_output_path(args.out)
        save_data(record if mode == 'json' else rows, basename, folder,
                  mode=mode, columns=['key', 'value'])
    return 0


def _clusters(args):
    clusters = [load_cluster(path) for path in args.cluster]
    if args.points:
        clusters.append(PointCluster(args.points))
    return clusters


def _problem(args):
    return MeanFieldProblem.from_clusters(_clusters(args), args.N,
                                          args.charge)


def _kernel_eval(args):
    if args.particles is None:
        kernel = GinibreKernel.infinite(args.N)
    else:
        kernel = GinibreKernel.for_particles(args.N, args.particles)
    value = eval_kernel(kernel, args.z, args.w)
    z = value.to_complex()
    return _emit({'log_mag': value.log_mag, 'phase': value.phase,
                  'value': [z.real, z.imag],
                  'j_top': None if kernel.is_infinite else kernel.j_top},
                 args)


def _meanfield_energy(args):
    result = emf_energy(_problem(args))
    return _emit({'energy': result.energy,
                  'normalized_energy': result.normalized_energy,
                  'c_r': result.c_r, 'components': result.components}, args)


def _meanfield_gradient(args):
    gradient = emf_gradient(_problem(args), args.index)
    return _emit({'gradient': [gradient.real, gradient.imag],
                  'index': args.index}, args)


def _meanfield_split(args):
    problem = _problem(args)
    if len(problem.clusters) != 2:
        raise ConfigurationError('split needs exactly two clusters')
    return _emit({'split_difference': emf_split_difference(problem)}, args)


def _freeenergy_exact(args):
    return _emit({'J': args.J, 'N': args.N,
                  'log_z': ginibre_log_z_exact(args.J, args.N)}, args)


def _freeenergy_asymptotic(args):
    value, series = ginibre_log_z_asymptotic(args.J, args.N,
                                             args.area_measure)
    return _emit({'J': args.J, 'N': args.N, 'minus_log_z': value,
                  'area_measure': args.area_measure,
                  'series': series.to_dict()}, args)


def _freeenergy_pinned(args):
    result = log_z_pinned(_clusters(args), args.N, args.kernel_mode)
    return _emit(result.to_dict(), args)


def _freeenergy_prediction(args):
    c_total = sum(args.c_list)
    terms = multihole_prediction_terms(args.N, c_total, args.c_list,
                                       args.area_measure)
    return _emit({'terms': terms, 'prediction': sum(terms.values()),
                  'area_measure': args.area_measure}, args)


def _oracle_mc_partition(args):
    estimate = mc_partition(args.n, _clusters(args), args.N, args.samples,
                            0 if args.seed is None else args.seed,
                            args.workers)
    return _emit(estimate.to_dict(), args)


def _oracle_mc_coulomb(args):
    estimate = mc_coulomb(HoleModel(args.center_a, args.radius_a),
                          HoleModel(args.center_b, args.radius_b),
                          args.samples, 0 if args.seed is None else args.seed,
                          args.workers)
    return _emit(estimate.to_dict(), args)


def _experiment(args):
    if args.config is None:
        config = ExperimentConfig.from_dict({'experiment': args.experiment})
    else:
        config = load_config(args.config)
        if config.experiment != args.experiment:
            raise ConfigurationError(
                "Configuration is for '{}', not '{}'".format(
                    config.experiment, args.experiment))
    config = config.with_overrides(seed=args.seed, output=args.out,
                                   format=args.format, workers=args.workers)
    result = run_experiment(config, verbose=True)
    path = write_result(result, config)
    if path is not None:
        report('results saved in {}'.format(path))
    if not result.passed:
        raise AcceptanceFailure('{} failed: {}'.format(
            config.experiment, json.dumps(result.summary, sort_keys=True)))
    return 0


def _fail(error, code):
    print('plasmabox: error: {}: {}'.format(type(error).__name__, error),
          file=sys.stderr)
    return code


def main(argv=None):
    """
    Runs the command line and returns the exit code.

    Parameters
    ----------
    argv : None or list(str), optional (default=None)
        Arguments without the program name; sys.argv[1:] if None.

    Returns
    -------
    code : int
        0, 1, 2 or 3.
    """

    args = build_parser().parse_args(argv)
    if args.log is not None:
        duplicate_stdout_stream_to_file(args.log)
    try:
        return args.handler(args)
    except PlasmaboxError as error:
        return _fail(error, error.exit_code)
    except (ValueError, OSError) as error:
        return _fail(error, 2)
    except ArithmeticError as error:
        return _fail(error, 3)
    finally:
        if args.log is not None:
            suppress_stdout_stream_to_file()


#==============================================================================
# Main script
#==============================================================================

if __name__ == '__main__':
    raise SystemExit(main())
