"""Errors raised while building or querying a weighted argumentation graph."""


class GraphError(ValueError):
    """Base class for graph validation errors."""


class DuplicateArgumentError(GraphError):
    """Raised when an argument name is declared twice."""

    def __init__(self, name: str) -> None:
        """Initialize with the repeated argument name."""
        self.name = name
        super().__init__(f"Argument '{name}' is declared more than once.")


class UnknownEndpointError(GraphError):
    """Raised when an edge references an undeclared argument."""

    def __init__(self, source: str, target: str, missing: str) -> None:
        """
        Initialize the error.

        Args:
            source: Source of the offending edge.
            target: Target of the offending edge.
            missing: The endpoint that is not a declared argument.

        """
        self.source = source
        self.target = target
        self.missing = missing
        super().__init__(f"Edge {source} -> {target} references undeclared argument '{missing}'.")


class DuplicateEdgeError(GraphError):
    """Raised when two edges share the same (source, target) pair."""

    def __init__(self, source: str, target: str) -> None:
        """Initialize with the repeated pair."""
        self.source = source
        self.target = target
        super().__init__(f"Edge {source} -> {target} is declared more than once; pre-sum parallel weights.")


class ZeroOrNonfiniteWeightError(GraphError):
    """Raised when an edge weight is zero, infinite or NaN."""

    def __init__(self, source: str, target: str, weight: float) -> None:
        """Initialize with the offending edge and weight."""
        self.source = source
        self.target = target
        self.weight = weight
        super().__init__(f"Edge {source} -> {target} has weight {weight!r}; weights must be finite and nonzero.")


class UnknownArgumentError(GraphError):
    """Raised when a name does not refer to an argument of the graph."""

    def __init__(self, name: str) -> None:
        """Initialize with the unknown name."""
        self.name = name
        super().__init__(f"Unknown argument '{name}'.")
