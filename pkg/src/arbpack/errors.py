"""Exception types raised across the package."""


class ArbpackError(Exception):
    """Base class for all package errors."""


class OutOfRangeError(ArbpackError, ValueError):
    pass


class SelfLoopError(ArbpackError, ValueError):
    pass


class EmptySetError(ArbpackError, ValueError):
    pass


class OverlapError(ArbpackError, ValueError):
    pass


class InvalidProbabilityError(ArbpackError, ValueError):
    pass


class TooSmallNError(ArbpackError, ValueError):
    pass


class OutOfDomainError(ArbpackError, ValueError):
    pass


class LimitExceededError(ArbpackError):
    """An exhaustive routine was asked to run above its vertex limit."""


class DegenerateError(ArbpackError, ValueError):
    pass


class DigraphFormatError(ArbpackError, ValueError):
    """Malformed digraph file; the message carries the line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class DegenerateWarning(UserWarning):
    """Result is defined by convention rather than by the formula."""


class DuplicateArcWarning(UserWarning):
    pass
