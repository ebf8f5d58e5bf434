class GraphError(ValueError):
    """Base class for invalid graphs and violated preconditions."""


class ParseError(GraphError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class PreconditionError(GraphError):
    """An operation was called on a graph outside its domain."""
