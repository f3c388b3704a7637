"""Dataframe export of labelling sets: one row per labelling, one column per argument."""

from __future__ import annotations

from typing import TYPE_CHECKING

from .missing_dependency_error import MissingDependencyError

if TYPE_CHECKING:
    import pandas as pd
    import polars as pl

    from .enumeration import LabellingSet

INDEX_COLUMN = "index"


def _columns(sigma: LabellingSet) -> dict[str, list[float] | list[int]]:
    if INDEX_COLUMN in sigma.arguments:
        msg = f"An argument named '{INDEX_COLUMN}' clashes with the index column."
        raise ValueError(msg)
    columns: dict[str, list[float] | list[int]] = {INDEX_COLUMN: list(range(len(sigma)))}
    for position, name in enumerate(sigma.arguments):
        columns[name] = [labelling.numerators[position] / sigma.resolution for labelling in sigma]
    return columns


def labellings_to_polars(sigma: LabellingSet) -> pl.DataFrame:
    """
    Return Σ as a polars DataFrame.

    The ``index`` column holds the canonical labelling index; argument columns hold
    degrees as floats k/n, in canonical argument order.

    Raises:
        MissingDependencyError: If polars is not installed.

    """
    try:
        import polars as pl
    except ImportError:
        raise MissingDependencyError("polars", "LabellingSet.to_polars") from None
    schema = {INDEX_COLUMN: pl.Int64, **dict.fromkeys(sigma.arguments, pl.Float64)}
    return pl.DataFrame(_columns(sigma), schema=schema)


def labellings_to_pandas(sigma: LabellingSet) -> pd.DataFrame:
    """
    Return Σ as a pandas DataFrame with the same columns as ``labellings_to_polars``.

    Raises:
        MissingDependencyError: If pandas is not installed.

    """
    try:
        import pandas as pd
    except ImportError:
        raise MissingDependencyError("pandas", "LabellingSet.to_pandas") from None
    frame = pd.DataFrame(_columns(sigma), columns=[INDEX_COLUMN, *sigma.arguments])
    return frame.astype({INDEX_COLUMN: "int64", **dict.fromkeys(sigma.arguments, "float64")})
