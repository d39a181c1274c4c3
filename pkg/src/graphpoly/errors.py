"""Exception hierarchy shared by all modules."""


class GraphPolyError(Exception):
    """Base class for every error raised by this package."""


class InputError(GraphPolyError, ValueError):
    """Malformed user input (bad index, bad file, bad syntax)."""


class LoopEdgeError(InputError):
    """A loop was passed to an operation that only accepts ordinary edges."""


class SizeCapError(GraphPolyError):
    """The instance is larger than the exhaustive method allows."""


class Graph6Error(InputError):
    pass


class PropertySyntaxError(InputError):
    """Parse failure in the property language; carries position information."""

    def __init__(self, message, position, expected=None):
        self.position = position
        self.expected = expected
        detail = f"{message} at position {position}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)


class IllDefinedSpecError(GraphPolyError):
    """A recurrence spec gave edge-order dependent values on the probe corpus."""
