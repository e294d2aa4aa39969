# -*- coding: utf-8 -*-
"""
Tools for managing output paths.

Functions
---------
_check_path :
    Returns the absolute path corresponding to ``path`` and creates folders.
_split_output_path :
    Splits a file path into folder, basename and extension.
"""

#==============================================================================
# Importations
#==============================================================================

import os
import warnings


#==============================================================================
# Functions
#==============================================================================

def _check_path(path=None):
    """
    Returns the absolute path corresponding to ``path`` and creates folders.

    Parameters
    ----------
    path : None, str or list(str)
        Absolute path or subfolder hierarchy that will be created and returned.
        If None, os.getcwd() is used.
    """

    if path is None:
        return os.getcwd()
    if isinstance(path, (list, tuple)):
        path = os.path.join(*path) if len(path) else os.getcwd()
    if isinstance(path, str):
        path = os.path.abspath(path)
        os.makedirs(path, exist_ok=True)
        return path
    message = 'Variable ``path`` is neither a string or a list of string.'
    warnings.warn(message, UserWarning)


def _split_output_path(file_path):
    """
    Splits a file path into folder, basename and extension.

    Parameters
    ----------
    file_path : str
        Relative or absolute path of a file.

    Returns
    -------
    folder : str
        Absolute folder, created if missing.
    basename : str
    ext : str
        Extension including the dot, or '' if none.
    """

    folder, name = os.path.split(os.path.abspath(file_path))
    basename, ext = os.path.splitext(name)
    return _check_path(folder), basename, ext
