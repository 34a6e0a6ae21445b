"""Exception hierarchy shared by all modules."""


class FatgraphError(Exception):
    """Base class for every error raised by this package."""


class InputError(FatgraphError, ValueError):
    """Malformed or inconsistent input (bad labels, wrong vertex, parse failure)."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class CapExceeded(FatgraphError):
    """An exhaustive enumeration would exceed the configured size cap."""


class ConventionError(FatgraphError, ArithmeticError):
    """Two independent computations disagree, or an exact division left a remainder.

    This always indicates a bug in a convention (composition order, sign of
    the genus change, merge counting), never bad user input.
    """
