"""Exception types shared by every module."""


class RyserError(Exception):
    """Base class for errors raised by this package."""


class InvalidArgument(RyserError, ValueError):
    pass


class PreconditionViolation(RyserError, ValueError):
    pass


class DependentBasis(PreconditionViolation):
    """Rows 1 and 2 are linearly dependent, so they cannot anchor a basis."""


class ResourceLimit(RyserError, ValueError):
    pass


class LemmaViolation(RyserError, AssertionError):
    """A checked consequence of a proven statement did not hold.

    Seeing this means either a bug here or a counterexample; both deserve a report.
    """
