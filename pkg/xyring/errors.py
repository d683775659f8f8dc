# -*- coding: UTF-8 -*-
"""
Exception hierarchy of :mod:`xyring`.

Every error carries an ``exit_status`` that the command-line front end
returns to the shell:

* :class:`ParameterError` (2): a precondition of an operation is violated.
* :class:`NumericalError` (3): a numerical kernel failed or produced
  something that cannot be trusted.
"""

from __future__ import absolute_import


# -----------------------------------------------------------------------------
# EXCEPTION BASE CLASSES:
# -----------------------------------------------------------------------------
class XYRingError(Exception):
    """Base class for all errors raised by this package."""
    exit_status = 1


class ParameterError(XYRingError, ValueError):
    """Invalid input: bad parameters, ranges, sectors or file contents."""
    exit_status = 2


class NumericalError(XYRingError, ArithmeticError):
    """A numerical kernel failed."""
    exit_status = 3


# -----------------------------------------------------------------------------
# PARAMETER ERRORS:
# -----------------------------------------------------------------------------
class InvalidSize(ParameterError):
    """Site count outside the supported range."""

class InvalidSector(ParameterError):
    """Sector label that does not exist for the requested site count."""

class SectorMismatch(ParameterError):
    """Magnetization sector requested for a Hamiltonian that does not conserve it."""

class DimensionMismatch(ParameterError):
    """Vector length differs from the sector dimension."""

class BadSites(ParameterError):
    """Site pair for a reduced density matrix is invalid."""

class NotNormalized(ParameterError):
    """Pure state amplitudes do not square-sum to one."""

class InvalidRange(ParameterError):
    """Empty or inverted parameter range, or non-positive step."""

class UnsupportedAnisotropy(ParameterError):
    """Operation is only defined for the isotropic case (gamma = 0)."""

class InvalidParameter(ParameterError):
    """Non-finite or unconvertible model parameter, unknown axis or option."""

class FormatError(ParameterError):
    """Malformed input document (for example a ground-state JSON dump)."""


# -----------------------------------------------------------------------------
# NUMERICAL ERRORS:
# -----------------------------------------------------------------------------
class ConvergenceFailure(NumericalError):
    """Eigensolver did not converge."""

class NumericalFailure(NumericalError):
    """Numerical invariant broken (for example a non-PSD density matrix)."""

class VerificationFailure(NumericalError):
    """A re-ingested state does not reproduce its energy."""
