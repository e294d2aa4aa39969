# -*- coding: utf-8 -*-
"""
Large-N expansion records.

Class
-----
ExpansionSeries :
    Coefficients of N^2, N log N, N, sqrt(N), log N and 1, plus opaque
    labelled constants.

Notes
-----
Opaque constants (such as zeta-regularized determinants of hole Laplacians)
are carried as (label, coefficient) pairs. They never enter ``evaluate``;
they are combined by label in sums and differences and vanish when their
coefficients cancel.
"""

#==============================================================================
# Importations
#==============================================================================

import math
from dataclasses import dataclass, replace
from typing import Optional


#==============================================================================
# Global variables
#==============================================================================

_COEFFICIENTS = ('coeff_N2', 'coeff_NlogN', 'coeff_N', 'coeff_sqrtN',
                 'coeff_logN', 'coeff_const')


#==============================================================================
# Class
#==============================================================================

@dataclass(frozen=True)
class ExpansionSeries:
    """
    Coefficients of N^2, N log N, N, sqrt(N), log N and 1.

    Parameters
    ----------
    coeff_N2, coeff_NlogN, coeff_N, coeff_sqrtN, coeff_logN, coeff_const :
    float, optional (default=0.)
    remainder_order : str, optional (default='o(1)')
        Order of the neglected remainder.
    symbols : tuple(tuple(str, float)), optional (default=())
        Opaque constants with their coefficients.
    scale : None or float, optional (default=None)
        Default N used by ``evaluate`` and ``terms``.
    """

    coeff_N2: float = 0.
    coeff_NlogN: float = 0.
    coeff_N: float = 0.
    coeff_sqrtN: float = 0.
    coeff_logN: float = 0.
    coeff_const: float = 0.
    remainder_order: str = 'o(1)'
    symbols: tuple = ()
    scale: Optional[float] = None

    def _resolve(self, N):
        N = self.scale if N is None else N
        assert N is not None and N > 0, \
            'A positive N is needed to evaluate the series'
        return float(N)

    def terms(self, N=None):
        """
        Returns the evaluated terms, keyed by coefficient name.
        """

        N = self._resolve(N)
        return {'coeff_N2': self.coeff_N2 * N**2,
                'coeff_NlogN': self.coeff_NlogN * N * math.log(N),
                'coeff_N': self.coeff_N * N,
                'coeff_sqrtN': self.coeff_sqrtN * math.sqrt(N),
                'coeff_logN': self.coeff_logN * math.log(N),
                'coeff_const': self.coeff_const}

    def evaluate(self, N=None):
        """
        Value of the series at N, opaque constants excluded.
        """

        return math.fsum(self.terms(N).values())

    def without_constant(self):
        return replace(self, coeff_const=0., symbols=())

    def to_dict(self):
        record = {name: getattr(self, name) for name in _COEFFICIENTS}
        record['remainder_order'] = self.remainder_order
        record['symbols'] = {label: value for label, value in self.symbols}
        return record

    def _combine(self, other, sign):
        symbols = dict(self.symbols)
        for label, value in other.symbols:
            symbols[label] = symbols.get(label, 0.) + sign * value
        coefficients = {name: getattr(self, name) + sign * getattr(other, name)
                        for name in _COEFFICIENTS}
        return ExpansionSeries(
            remainder_order=self.remainder_order,
            symbols=tuple((label, value) for label, value in
                          sorted(symbols.items()) if value != 0),
            scale=self.scale if self.scale is not None else other.scale,
            **coefficients)

    def __add__(self, other):
        return self._combine(other, 1.)

    def __sub__(self, other):
        return self._combine(other, -1.)

    def __mul__(self, factor):
        coefficients = {name: factor * getattr(self, name)
                        for name in _COEFFICIENTS}
        return replace(self, symbols=tuple(
            (label, factor * value) for label, value in self.symbols
            if factor * value != 0), **coefficients)

    __rmul__ = __mul__
