"""Many-valued labellings: one truth degree per argument."""

from __future__ import annotations

import functools
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from .graph_error import UnknownArgumentError
from .truth_degree import TruthDegree, TruthDegreeError

if TYPE_CHECKING:
    from .graph import WeightedGraph


@functools.cache
def _positions(arguments: tuple[str, ...]) -> dict[str, int]:
    return {name: position for position, name in enumerate(arguments)}


@dataclass(frozen=True)
class Labelling:
    """
    A total assignment of a degree in C_n to every argument of a graph.

    Stored as numerators in canonical argument order, so the natural tuple order of
    ``numerators`` is the canonical labelling order (lexicographic, degree ascending).
    ``σ(⊤) = 1`` and ``σ(⊥) = 0`` hold by definition and are not stored.

    Attributes:
        arguments: The graph's arguments in canonical order.
        numerators: One numerator per argument, each in ``0..resolution``.
        resolution: The session-wide ``n``.

    Example:
        sigma = Labelling(("A", "B"), (0, 1), 2)
        sigma["B"]        # TruthDegree(1, 2)
        str(sigma)        # "A=0/2 B=1/2"

    """

    arguments: tuple[str, ...]
    numerators: tuple[int, ...]
    resolution: int

    def __post_init__(self) -> None:
        """Check totality and range."""
        if len(self.arguments) != len(self.numerators):
            msg = f"Labelling has {len(self.numerators)} degrees for {len(self.arguments)} arguments."
            raise TruthDegreeError(msg)
        for name, numerator in zip(self.arguments, self.numerators, strict=True):
            if not 0 <= numerator <= self.resolution:
                msg = f"Degree {numerator}/{self.resolution} of '{name}' is outside C_{self.resolution}."
                raise TruthDegreeError(msg)

    @classmethod
    def from_mapping(
        cls,
        graph: WeightedGraph,
        values: Mapping[str, TruthDegree | Fraction | int],
        resolution: int,
    ) -> Labelling:
        """
        Build a labelling from a name-to-degree mapping.

        Args:
            graph: The graph whose arguments must be covered exactly.
            values: Degrees as ``TruthDegree`` or exact rationals in [0, 1].
            resolution: The session-wide ``n``.

        Raises:
            UnknownArgumentError: If a name is not an argument of ``graph``.
            TruthDegreeError: If an argument is missing or a value is not in C_n.

        """
        for name in values:
            if name not in graph:
                raise UnknownArgumentError(name)
        numerators = []
        for name in graph.arguments:
            if name not in values:
                msg = f"Labelling does not assign a degree to '{name}'."
                raise TruthDegreeError(msg)
            value = values[name]
            if isinstance(value, TruthDegree):
                if value.resolution != resolution:
                    msg = f"Degree {value} of '{name}' is not at resolution {resolution}."
                    raise TruthDegreeError(msg)
                numerators.append(value.numerator)
            else:
                numerators.append(TruthDegree.from_fraction(value, resolution).numerator)
        return cls(graph.arguments, tuple(numerators), resolution)

    def numerator(self, name: str) -> int:
        """Return the numerator assigned to ``name``."""
        try:
            return self.numerators[_positions(self.arguments)[name]]
        except KeyError:
            raise UnknownArgumentError(name) from None

    def __getitem__(self, name: str) -> TruthDegree:
        """Return the degree assigned to ``name``."""
        return TruthDegree(self.numerator(name), self.resolution)

    def __iter__(self) -> Iterator[str]:
        """Iterate over argument names in canonical order."""
        return iter(self.arguments)

    def __len__(self) -> int:
        """Return the number of arguments."""
        return len(self.arguments)

    def to_record(self) -> dict[str, str]:
        """Return ``{argument: "k/n"}`` in canonical order, as used in reports."""
        return {
            name: f"{numerator}/{self.resolution}"
            for name, numerator in zip(self.arguments, self.numerators, strict=True)
        }

    def __str__(self) -> str:
        """Return ``A=k/n B=k/n ...`` in canonical order."""
        return " ".join(f"{name}={value}" for name, value in self.to_record().items())
