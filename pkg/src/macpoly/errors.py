"""Exception hierarchy shared by all modules."""


class MacpolyError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(MacpolyError):
    """Input violates a documented precondition (bad rank, non-dominant
    weight, out-of-range operator index, coincident points, ...)."""


class InvalidRankError(DomainError):
    """Rank parameter n is too small."""


class UnsupportedModeError(DomainError):
    """Operation requested in a mode it does not support (e.g. an inner
    product at non-integer coupling)."""


class DegenerateSpectrumError(MacpolyError):
    """Two distinct basis labels produced the same eigenvalue, so the
    triangular eigen-solve has no unique solution.  Fatal diagnostic."""

    def __init__(self, message, colliding=None):
        super().__init__(message)
        self.colliding = colliding


class CriticalShiftError(DomainError):
    """The level/coupling combination sits on the excluded critical line
    (level + coupling * dual Coxeter number = 0)."""


class ExactnessError(MacpolyError):
    """An operation that must be exact (polynomial division, layer
    division, limit extraction) left a nonzero remainder.  Indicates a
    bug, not bad user input."""


class LimitFailureError(ExactnessError):
    """A coefficient had a pole at the degeneration point."""


class PoleProximityError(DomainError):
    """Numerical evaluation requested too close to a pole of an
    elliptic function."""
