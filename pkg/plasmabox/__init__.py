# -*- coding: utf-8 -*-
"""
Free energy of the two-dimensional one-component plasma at beta = 2 with
pinned charges carving holes in the droplet.

Notes
-----
Exact formulas come from the determinantal structure of the Ginibre
ensemble; mean-field energies, large-N predictions and Monte Carlo or
quadrature oracles are provided to check them. Run ``python -m plasmabox
--help`` for the command line.
"""

__author__ = "plasmabox developers"
__maintainer__ = "plasmabox developers"
__version__ = "0.1"

from . import utilities
from . import numerics
from . import kernel
from . import configuration
from . import meanfield
from . import freeenergy
from . import oracle
from . import savebox
from . import experiments

__all__ = ['utilities', 'numerics', 'kernel', 'configuration', 'meanfield',
           'freeenergy', 'oracle', 'savebox', 'experiments']
