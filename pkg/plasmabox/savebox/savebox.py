# -*- coding: utf-8 -*-
"""
Toolbox for saving and loading experiment records and cluster files.

Functions
---------
format_csv :
    Formats rows as CSV text, preceded by a '#' header.
format_json :
    Formats a record as sorted, indented JSON text.
save_data :
    Save a record as JSON or rows as CSV.
load_data :
    Load a JSON record or CSV rows.
save_cluster :
    Save a PointCluster as a JSON cluster file.
load_cluster :
    Load a PointCluster from a JSON cluster file.

Notes
-----
CSV uses '.' as decimal mark, ',' as separator and LF line endings. Floats
are written with repr(), which round-trips doubles exactly. Non-finite
values are refused in JSON output.
"""

#==============================================================================
# Importations
#==============================================================================

import io
import os
import csv
import json
import math
import warnings
import numpy as np
from .tools import _check_path
from ..configuration.clusters import PointCluster


#==============================================================================
# Global variables
#==============================================================================

_json_extension = '.json'
_csv_extension = '.csv'
_save_modes = {'json': _json_extension,
               'csv': _csv_extension}


#==============================================================================
# Functions
#==============================================================================

def _to_builtin(value):
    """Converts numpy scalars and arrays to JSON-compatible builtins."""

    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, complex):
        return [value.real, value.imag]
    raise TypeError('Object of type {} is not JSON serializable'.format(
        type(value).__name__))


def _format_cell(value):
    if value is None:
        return ''
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def format_csv(rows, columns, header=''):
    """
    Formats rows as CSV text, preceded by a '#' header.

    Parameters
    ----------
    rows : list(dict)
        One dictionary per row; missing columns are left empty.
    columns : list(str)
        Column order of the header row.
    header : str, optional (default='')
        Comment lines written before the header row.

    Returns
    -------
    text : str
    """

    buffer = io.StringIO()
    buffer.write(header)
    writer = csv.writer(buffer, delimiter=',', lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_format_cell(row.get(name)) for name in columns])
    return buffer.getvalue()


def format_json(record):
    """
    Formats a record as sorted, indented JSON text.

    Parameters
    ----------
    record : dict
        Record to format; numpy scalars and complex numbers are converted.

    Returns
    -------
    text : str
        JSON text ended by a line feed.
    """

    return json.dumps(record, indent=2, sort_keys=True, allow_nan=False,
                      default=_to_builtin) + '\n'


def save_data(data, name, path=None, mode='json', columns=None, header=''):
    """
    Save a record as JSON or rows as CSV.

    Parameters
    ----------
    data : dict or list(dict)
        Record (for 'json') or rows (for 'csv').
    name : str
        Name of file to create, without extension.
    path : None, str or list(str), optional (default=None)
        Absolute path or subfolder hierarchy where the file will be created.
        If None, os.getcwd() is used.
    mode : {'json', 'csv'}, optional (default='json')
        Mode used for saving data.
    columns : None or list(str), optional (default=None)
        Column order for 'csv'; if None, keys of the first row.
    header : str, optional (default='')
        Comment header prefixed to 'csv' files.

    Returns
    -------
    full_path : str
        Full absolute path of the saved file.
    """

    if mode not in _save_modes:
        raise ValueError("Unknown saving mode '{}'".format(mode))

    full_path = os.path.join(_check_path(path), name) + _save_modes[mode]

    if mode == 'json':
        if not isinstance(data, dict):
            raise TypeError("Wrong data type when using saving mode", mode,
                            "(given type is {})".format(type(data)))
        text = format_json(data)
    else:
        if not isinstance(data, list):
            raise TypeError("Wrong data type when using saving mode", mode,
                            "(given type is {})".format(type(data)))
        if columns is None:
            columns = list(data[0].keys()) if len(data) else []
        text = format_csv(data, columns, header=header)

    with open(full_path, 'w', encoding='utf-8', newline='') as file:
        file.write(text)
    return full_path


def load_data(name, path=None):
    """
    Load a JSON record or CSV rows.

    Parameters
    ----------
    name : str
        Name of file to load, with or without extension.
    path : None, str or list(str), optional (default=None)
        Absolute path or subfolder hierarchy where the file is located.
        If None, os.getcwd() is used.

    Returns
    -------
    data : dict or list(dict)
        JSON record, or CSV rows as dictionaries of strings ('#' lines are
        skipped).
    """

    basename, ext = os.path.splitext(name)
    full_path = os.path.join(_check_path(path), basename)

    if ext:
        candidates = [ext] if os.path.isfile(full_path + ext) else []
    else:
        candidates = [e for e in _save_modes.values()
                      if os.path.isfile(full_path + e)]

    if len(candidates) == 0:
        raise OSError(2, 'No such file', name)
    if len(candidates) > 1:
        message = 'Several files {} were found with different extensions ' + \
                  str(candidates) + ', no file was loaded.'
        warnings.warn(message.format(name), UserWarning)
        return None

    with open(full_path + candidates[0], 'r', encoding='utf-8') as file:
        if candidates[0] == _json_extension:
            return json.load(file)
        lines = [line for line in file if not line.startswith('#')]
    return list(csv.DictReader(lines))


def save_cluster(cluster, name, path=None):
    """
    Save a PointCluster as a JSON cluster file.

    Parameters
    ----------
    cluster : PointCluster
    name : str
        Name of file to create, without extension.
    path : None, str or list(str), optional (default=None)
        Folder of the file.

    Returns
    -------
    full_path : str
    """

    return save_data(cluster.to_dict(), name, path=path, mode='json')


def load_cluster(file_path):
    """
    Load a PointCluster from a JSON cluster file.

    Parameters
    ----------
    file_path : str
        JSON file {points: [[re, im], ...], translation: [re, im]}.

    Returns
    -------
    cluster : PointCluster
    """

    with open(file_path, 'r', encoding='utf-8') as file:
        data = json.load(file)
    for pair in data.get('points', []):
        if not all(math.isfinite(v) for v in pair):
            raise ValueError('Non-finite coordinate in {}'.format(file_path))
    return PointCluster.from_dict(data)
