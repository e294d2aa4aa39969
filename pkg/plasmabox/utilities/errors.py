# -*- coding: utf-8 -*-
"""
Exception classes raised throughout the package.

Class
-----
PlasmaboxError :
    Base class of every exception raised by the package.
ConfigurationError :
    Invalid experiment or function configuration.
AdmissibilityError :
    Geometric configuration outside the domain of the formulas.
NumericalError :
    Failure of a numerical routine.
AcceptanceFailure :
    An acceptance check of an experiment or of the oracle battery failed.

Notes
-----
Each class carries the exit code used by the command-line interface.
"""

#==============================================================================
# Class
#==============================================================================

class PlasmaboxError(Exception):
    """Base class of every exception raised by the package."""

    exit_code = 3


class ConfigurationError(PlasmaboxError, ValueError):
    """Invalid experiment or function configuration."""

    exit_code = 2


class ChargeMismatchError(ConfigurationError):
    """Total charge differs from the sum of the cluster charges."""


class TooFewPointsError(ConfigurationError):
    """Operation needs more points than given."""


class TooLargeError(ConfigurationError):
    """Combinatorial guard exceeded."""


class AdmissibilityError(PlasmaboxError, ValueError):
    """Geometric configuration outside the domain of the formulas."""

    exit_code = 2


class OutsideDropletError(AdmissibilityError):
    """Point outside the droplet D(0, R)."""


class HoleOutsideDropletError(AdmissibilityError):
    """Hole not contained in the droplet D(0, R)."""


class OverlappingHolesError(AdmissibilityError):
    """Two holes intersect."""


class DuplicatePointsError(AdmissibilityError):
    """Two pinned points coincide."""


class AssumptionError(AdmissibilityError):
    """Cluster configuration fails the spacing or separation assumptions."""


class NumericalError(PlasmaboxError, ArithmeticError):
    """Failure of a numerical routine."""

    exit_code = 3


class NotHermitianError(NumericalError):
    """Matrix is not Hermitian within tolerance."""


class SingularMatrixError(NumericalError):
    """Pivot below the breakdown tolerance during factorization."""


class OverflowGuardError(NumericalError):
    """Intermediate quantity left the representable range."""


class VarianceExplosionError(NumericalError):
    """Monte Carlo relative standard error above the trust limit."""


class NonIntegerTraceError(NumericalError):
    """Kernel trace is not an integer."""


class AcceptanceFailure(PlasmaboxError):
    """An acceptance check of an experiment or of the oracle battery failed."""

    exit_code = 1
