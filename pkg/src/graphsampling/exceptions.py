"""Exception types raised across the package."""


class GraphError(ValueError):
    """Invalid graph construction or query."""


class EdgeListParseError(GraphError):
    """A line of an edge-list file could not be parsed."""

    def __init__(self, lineno, line, reason="expected two integer node ids"):
        self.lineno = lineno
        self.line = line
        super().__init__(f"line {lineno}: {reason}: {line!r}")


class EmptyGraphError(GraphError):
    pass


class ExhaustedDistributionError(ValueError):
    """Raised when drawing from a weight index whose total weight is zero."""


class ConfigError(ValueError):
    """Invalid experiment configuration."""
