"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class StanleyLocError(Exception):
    """Base class for all library errors."""


class AmbientMismatch(StanleyLocError, ValueError):
    """Two objects live over different variable sets."""


class DomainError(StanleyLocError, ValueError):
    """An operation was applied outside its domain (unit ideal, non-face, ...)."""


class ExponentOverflow(StanleyLocError, OverflowError):
    pass


class ParseError(StanleyLocError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResourceLimit(StanleyLocError, RuntimeError):
    """A search exceeded its configured poset size or node budget."""


class InvalidObject(StanleyLocError, ValueError):
    """A decomposition, filtration or partition failed verification."""


class TheoremViolation(StanleyLocError, AssertionError):
    """A transformed object that must be valid failed re-verification."""
