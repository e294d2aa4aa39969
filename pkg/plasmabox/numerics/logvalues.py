# -*- coding: utf-8 -*-
"""
Log-domain scalars for quantities of scale exp(±N²).

Class
-----
LogValue :
    Real number stored as (log-magnitude, sign).
PhaseValue :
    Complex number stored as (log-magnitude, phase).

Functions
---------
wrap_phase :
    Wraps an angle into (-pi, pi].
log_sum_phases :
    Anchored sum of complex terms given in log-polar form.
"""

#==============================================================================
# Importations
#==============================================================================

import math
from dataclasses import dataclass
import numpy as np


#==============================================================================
# Global variables
#==============================================================================

_NEG_INF = -math.inf
_TWO_PI = 2 * math.pi


#==============================================================================
# Functions
#==============================================================================

def wrap_phase(phase):
    """
    Wraps an angle into (-pi, pi].

    Parameters
    ----------
    phase : float

    Returns
    -------
    wrapped : float
    """

    wrapped = math.remainder(phase, _TWO_PI)
    if wrapped <= -math.pi:
        wrapped += _TWO_PI
    return wrapped


def log_sum_phases(log_mags, phases):
    """
    Anchored sum of complex terms given in log-polar form.

    Every term is rescaled by the largest magnitude before accumulation, and
    real and imaginary parts are accumulated with math.fsum.

    Parameters
    ----------
    log_mags : array_like
        Natural logs of the term magnitudes (-inf for zero terms).
    phases : array_like
        Arguments of the terms.

    Returns
    -------
    total : PhaseValue
    """

    log_mags = np.asarray(log_mags, dtype=float).ravel()
    phases = np.asarray(phases, dtype=float).ravel()
    finite = np.isfinite(log_mags)
    if not finite.any():
        return PhaseValue.zero()
    log_mags = log_mags[finite]
    phases = phases[finite]

    anchor = float(log_mags.max())
    scaled = np.exp(log_mags - anchor)
    real = math.fsum(scaled * np.cos(phases))
    imag = math.fsum(scaled * np.sin(phases))
    modulus = math.hypot(real, imag)
    if modulus == 0:
        return PhaseValue.zero()
    return PhaseValue(anchor + math.log(modulus), math.atan2(imag, real))


#==============================================================================
# Class
#==============================================================================

@dataclass(frozen=True)
class LogValue:
    """
    Real number stored as (log-magnitude, sign).

    Parameters
    ----------
    log_mag : float
        Natural log of the absolute value; -inf encodes zero.
    sign : {1, -1, 0}
        Sign of the value; 0 if and only if ``log_mag`` is -inf.
    """

    log_mag: float
    sign: int

    def __post_init__(self):
        assert self.sign in (-1, 0, 1), \
            'LogValue sign must be -1, 0 or 1 (got {})'.format(self.sign)
        assert (self.sign == 0) == (self.log_mag == _NEG_INF), \
            'LogValue sign is 0 if and only if log_mag is -inf'
        assert not math.isnan(self.log_mag), 'LogValue log_mag is NaN'

    @classmethod
    def zero(cls):
        return cls(_NEG_INF, 0)

    @classmethod
    def from_float(cls, value):
        if value == 0:
            return cls.zero()
        return cls(math.log(abs(value)), 1 if value > 0 else -1)

    @classmethod
    def from_log(cls, log_mag, sign=1):
        if log_mag == _NEG_INF:
            return cls.zero()
        return cls(float(log_mag), sign)

    def to_float(self):
        """Returns the value as a float (may overflow to inf)."""
        if self.sign == 0:
            return 0.
        try:
            return self.sign * math.exp(self.log_mag)
        except OverflowError:
            return self.sign * math.inf

    def __mul__(self, other):
        if not isinstance(other, LogValue):
            other = LogValue.from_float(other)
        if self.sign == 0 or other.sign == 0:
            return LogValue.zero()
        return LogValue(self.log_mag + other.log_mag, self.sign * other.sign)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, LogValue):
            other = LogValue.from_float(other)
        if other.sign == 0:
            raise ZeroDivisionError('division of a LogValue by zero')
        if self.sign == 0:
            return LogValue.zero()
        return LogValue(self.log_mag - other.log_mag, self.sign * other.sign)

    def __neg__(self):
        return LogValue(self.log_mag, -self.sign)

    def __add__(self, other):
        if not isinstance(other, LogValue):
            other = LogValue.from_float(other)
        if self.sign == 0:
            return other
        if other.sign == 0:
            return self
        anchor = max(self.log_mag, other.log_mag)
        total = (self.sign * math.exp(self.log_mag - anchor) +
                 other.sign * math.exp(other.log_mag - anchor))
        if total == 0:
            return LogValue.zero()
        return LogValue(anchor + math.log(abs(total)), 1 if total > 0 else -1)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, LogValue):
            other = LogValue.from_float(other)
        return self + (-other)

    @staticmethod
    def log_sum_exp(values):
        """
        Sum of several LogValue, anchored at the largest magnitude.

        Parameters
        ----------
        values : iterable(LogValue)

        Returns
        -------
        total : LogValue
        """

        values = [v for v in values if v.sign != 0]
        if not values:
            return LogValue.zero()
        anchor = max(v.log_mag for v in values)
        total = math.fsum(v.sign * math.exp(v.log_mag - anchor)
                          for v in values)
        if total == 0:
            return LogValue.zero()
        return LogValue(anchor + math.log(abs(total)), 1 if total > 0 else -1)


@dataclass(frozen=True)
class PhaseValue:
    """
    Complex number stored as (log-magnitude, phase).

    Parameters
    ----------
    log_mag : float
        Natural log of the modulus; -inf encodes zero.
    phase : float
        Argument, wrapped into (-pi, pi] at construction.
    """

    log_mag: float
    phase: float = 0.

    def __post_init__(self):
        object.__setattr__(self, 'log_mag', float(self.log_mag))
        object.__setattr__(self, 'phase', wrap_phase(float(self.phase))
                           if self.log_mag != _NEG_INF else 0.)

    @classmethod
    def zero(cls):
        return cls(_NEG_INF, 0.)

    @classmethod
    def from_complex(cls, value):
        if value == 0:
            return cls.zero()
        return cls(math.log(abs(value)), math.atan2(value.imag, value.real))

    @property
    def magnitude(self):
        return math.exp(self.log_mag) if self.log_mag != _NEG_INF else 0.

    def to_complex(self, clamp=None):
        """
        Returns the value as a complex number.

        Parameters
        ----------
        clamp : None or float, optional (default=None)
            Values with ``log_mag`` below ``clamp`` are returned as 0.
        """

        if self.log_mag == _NEG_INF or (clamp is not None and
                                        self.log_mag < clamp):
            return 0j
        modulus = math.exp(self.log_mag)
        return complex(modulus * math.cos(self.phase),
                       modulus * math.sin(self.phase))

    def conjugate(self):
        return PhaseValue(self.log_mag, -self.phase)

    def __mul__(self, other):
        if not isinstance(other, PhaseValue):
            other = PhaseValue.from_complex(complex(other))
        if self.log_mag == _NEG_INF or other.log_mag == _NEG_INF:
            return PhaseValue.zero()
        return PhaseValue(self.log_mag + other.log_mag,
                          self.phase + other.phase)

    __rmul__ = __mul__

    def __neg__(self):
        if self.log_mag == _NEG_INF:
            return self
        return PhaseValue(self.log_mag, self.phase + math.pi)

    def __add__(self, other):
        if not isinstance(other, PhaseValue):
            other = PhaseValue.from_complex(complex(other))
        return log_sum_phases([self.log_mag, other.log_mag],
                              [self.phase, other.phase])

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, PhaseValue):
            other = PhaseValue.from_complex(complex(other))
        return self + (-other)
