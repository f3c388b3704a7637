"""Error for missing optional dataframe libraries."""


class MissingDependencyError(ImportError):
    """Raised when an export needs a dataframe library that is not installed."""

    def __init__(self, package: str, feature: str) -> None:
        """Initialize with the missing package and the export that needs it.

        Args:
            package: The name of the missing package (e.g., "polars").
            feature: The export that requires it (e.g., "LabellingSet.to_polars").

        """
        self.package = package
        self.feature = feature
        super().__init__(f"{package} is required for {feature}. Install it with: pip install gradedargs[{package}]")
