"""Exception types shared across the package."""


class SpiderfreeError(Exception):
    """Base class for all package errors."""


class GraphParseError(SpiderfreeError):
    """Malformed graph or formula text."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(SpiderfreeError):
    """Input violates a precondition (self-loop, disconnected input, bad formula...)."""


class CapacityError(SpiderfreeError):
    """Instance is larger than the configured cap of an exact routine."""

    def __init__(self, message, size=None, cap=None):
        self.size = size
        self.cap = cap
        super().__init__(message)
