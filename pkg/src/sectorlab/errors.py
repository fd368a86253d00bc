"""Exception hierarchy shared across the package.

Every error raised deliberately by this library derives from
:class:`SectorLabError`, so callers can catch one base class.  The command
line front end maps subclasses onto process exit codes.
"""

from __future__ import annotations


class SectorLabError(Exception):
    """Base class for all errors raised by sectorlab."""


class InputError(SectorLabError):
    """Malformed user input: bad coefficient strings, unknown operator specs."""


# --- polynomial construction ------------------------------------------------

class ZeroPolynomialError(SectorLabError):
    """The zero polynomial was produced or requested; it has no degree."""


class InvalidRootSpecError(SectorLabError):
    """Root data violates the sector constraints (x >= 0, a > 0, b > 0)."""


# --- root solving -----------------------------------------------------------

class DegreeZeroError(SectorLabError):
    """A nonzero constant has no zeros to solve for."""


class NonConvergenceError(SectorLabError):
    """The solve did not certify every zero to the residual threshold."""

    def __init__(self, message: str, location: complex | None = None,
                 residual: float | None = None):
        super().__init__(message)
        self.location = location
        self.residual = residual


# --- geometry ---------------------------------------------------------------

class NonpositiveRootPartError(SectorLabError):
    """Disc construction requires a > 0 and b > 0."""


class EmptyDiscError(SectorLabError):
    """Tangency data requested for an empty disc."""


class NotInRightHalfPlaneError(SectorLabError):
    """A zero with |arg z| >= pi/2 admits no enclosing sector."""

    def __init__(self, message: str, offender: complex | None = None):
        super().__init__(message)
        self.offender = offender


class OffAxisError(SectorLabError):
    """No zeros remained to measure a double sector from."""


# --- operators --------------------------------------------------------------

class ZeroPolynomialResultError(SectorLabError):
    """Every blend coefficient vanished (e.g. beta = lambda + pi, alpha = 0)."""


class DegenerateSequenceError(SectorLabError):
    """A multiplier sequence annihilated every coefficient."""


class HypothesisViolationError(SectorLabError):
    """Operator applied outside its guaranteed parameter region."""


class DomainError(SectorLabError):
    """Numeric argument outside the domain of a closed-form bound."""


class ZeroOutsideRightHalfPlaneError(SectorLabError):
    """Principal logarithms need every zero strictly in the right half-plane."""

    def __init__(self, message: str, offender: complex | None = None):
        super().__init__(message)
        self.offender = offender


# --- analysis ---------------------------------------------------------------

class ZeroInteriorTermError(SectorLabError):
    """A vanishing interior term makes the ratio r_n undefined."""


class DegenerateLeadingError(SectorLabError):
    """The transformed leading coefficient vanished; no quadratic remains."""


class SignFlipError(SectorLabError):
    """Endpoint terms of the sequence are zero or of opposite sign."""
