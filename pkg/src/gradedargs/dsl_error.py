"""Errors raised by the graph and query DSL parsers."""


class DslError(ValueError):
    """Base class for DSL errors, carrying a 1-based source position when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None) -> None:
        """
        Initialize the error.

        Args:
            message: What went wrong.
            line: 1-based line of the offending input, if known.
            column: 1-based column of the offending input, if known.

        """
        self.message = message
        self.line = line
        self.column = column
        super().__init__(str(self))

    def __str__(self) -> str:
        """Return ``line:column: message`` (position omitted when unknown)."""
        if self.line is None:
            return self.message
        if self.column is None:
            return f"{self.line}: {self.message}"
        return f"{self.line}:{self.column}: {self.message}"


class DslSyntaxError(DslError):
    """Raised when input does not match the grammar."""


class NestedTypicalityError(DslError):
    """Raised when a typicality operator occurs inside another one."""


class BoundOutOfRangeError(DslError):
    """Raised when a bound or degree is not exactly a member of C_n."""
