# -*- coding: utf-8 -*-
"""
Toolbox for log files, run headers and progress reports.

Class
-----
Logger :
    Class for redirecting print() output to both the terminal and a file.

Functions
---------
duplicate_stdout_stream_to_file :
    Add streaming of stdout to a log file (in addition of the terminal).
suppress_stdout_stream_to_file :
    Suppress streaming of stdout to a log file.
dependency_versions :
    Returns the versions of the numerical dependencies.
make_header :
    Creates a normalized header embedding the resolved configuration.
report :
    Prints a progress message on stderr.

Notes
-----
Headers built with ``timestamp=False`` are identical across runs, which
keeps experiment outputs byte-stable.
"""

#==============================================================================
# Importations
#==============================================================================

import os
import sys
import json
import time
import numpy as np
import scipy


#==============================================================================
# Global variables
#==============================================================================

_banner = '{:#<79}'.format('#')


#==============================================================================
# Class
#==============================================================================

class Logger(object):
    """
    Class for redirecting print() output to both the terminal and a file.

    Parameters
    ----------
    file_path : str
        Path of the file where stdout will be redirected.
    mode : {'w', 'a'}, optional (default='a')
        Writing mode when writing to file.
    """

    def __init__(self, file_path, mode='a'):
        self.terminal = sys.stdout
        self.error_terminal = sys.stderr
        self.file_path = file_path
        self.log = open(file_path, mode, encoding='utf-8')

    def write(self, message):
        self.terminal.write(message)
        self.log.write(message)

    def flush(self):
        self.terminal.flush()
        self.log.flush()


#==============================================================================
# Functions
#==============================================================================

def duplicate_stdout_stream_to_file(name, path=None, mode='a',
                                    record_errors=True):
    """
    Add streaming of stdout to a log file (in addition of the terminal).

    Parameters
    ----------
    name : str
        Name of file to where stdout will be redirected; '.log' is appended
        when no extension is given.
    path : None, str or list(str), optional (default=None)
        Absolute path or subfolder hierarchy where the file is located.
    mode : {'w', 'a'}, optional (default='a')
        Writing mode when writing to file.
    record_errors : boolean, optional (default=True)
        If True, stderr is also redirected to file.

    Returns
    -------
    file_path : str
        Absolute path of the log file.
    """

    from ..savebox.tools import _check_path
    abs_path = _check_path(path)
    basename, ext = os.path.splitext(name)
    if ext == '':
        ext = '.log'
    file_path = os.path.join(abs_path, basename + ext)

    sys.stdout = Logger(file_path, mode=mode)
    if record_errors:
        sys.stderr = sys.stdout
    return file_path


def suppress_stdout_stream_to_file():
    """
    Suppress streaming of stdout to a log file.
    """

    if isinstance(sys.stdout, Logger):
        sys.stdout.log.close()
        sys.stdout = sys.stdout.terminal
    if isinstance(sys.stderr, Logger):
        if not sys.stderr.log.closed:
            sys.stderr.log.close()
        sys.stderr = sys.stderr.error_terminal


def dependency_versions():
    """
    Returns the versions of the numerical dependencies.

    Returns
    -------
    dependencies : dict(str: str)
        Package names linked to their version strings.
    """

    from .. import __version__
    return {'numpy': np.__version__, 'scipy': scipy.__version__,
            'plasmabox': __version__}


def make_header(dependencies=None, config=None, timestamp=True):
    """
    Creates a normalized header embedding the resolved configuration.

    Parameters
    ----------
    dependencies : None or dict(str: str), optional (default=None)
        Package names linked to versions; if None, uses
        dependency_versions().
    config : None or dict, optional (default=None)
        Resolved configuration, written as sorted JSON.
    timestamp : boolean, optional (default=True)
        If True, the date and command-line arguments are included.

    Returns
    -------
    header : str
        Lines all starting with '#', each ended by a line feed.
    """

    if dependencies is None:
        dependencies = dependency_versions()

    lines = [_banner, _banner]
    if timestamp:
        lines.append('# Date: ' + time.strftime('%d %b %Y %H:%M'))
        lines.append('# Script: {}'.format(sys.argv[0]))
        lines.append('# Command-line arguments: {}'.format(sys.argv[1:]))
    lines.append('# Dependencies: ' + ', '.join(
        '{} v.{}'.format(name, version)
        for name, version in sorted(dependencies.items())))
    if config is not None:
        lines.append('# Configuration:')
        dump = json.dumps(config, indent=2, sort_keys=True)
        lines.extend('# ' + line for line in dump.splitlines())
    lines.append(_banner)

    return '\n'.join(lines) + '\n'


def report(message, verbose=True):
    """
    Prints a progress message on stderr.

    Parameters
    ----------
    message : str
        Message to print.
    verbose : boolean, optional (default=True)
        Nothing is printed when False.
    """

    if verbose:
        print('[plasmabox] ' + message, file=sys.stderr)
        sys.stderr.flush()
