"""Exact truth degrees in the finite truth set C_n = {0, 1/n, ..., 1}."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction


class TruthDegreeError(ValueError):
    """Raised when a truth degree is malformed or not a member of C_n."""


class ResolutionMismatchError(TruthDegreeError):
    """Raised when degrees of different resolutions are compared."""

    def __init__(self, left: int, right: int) -> None:
        """Initialize with the two resolutions that were mixed.

        Args:
            left: Resolution of the left operand.
            right: Resolution of the right operand.

        """
        self.left = left
        self.right = right
        super().__init__(f"Cannot compare degrees of resolution {left} and {right}.")


@functools.total_ordering
@dataclass(frozen=True, eq=True)
class TruthDegree:
    """
    A member numerator/resolution of C_n.

    Degrees are exact: comparison is integer comparison of numerators at a shared
    resolution. Equality across resolutions is simply ``False``; ordering across
    resolutions raises ``ResolutionMismatchError``.

    Attributes:
        numerator: Integer in ``0..resolution``.
        resolution: The session-wide ``n >= 1``.

    Example:
        TruthDegree(2, 5) < TruthDegree(3, 5)   # True
        str(TruthDegree(4, 5))                  # "4/5"

    """

    numerator: int
    resolution: int

    def __post_init__(self) -> None:
        """Validate the C_n membership invariants."""
        if self.resolution < 1:
            msg = f"Resolution must be >= 1, got {self.resolution}."
            raise TruthDegreeError(msg)
        if not 0 <= self.numerator <= self.resolution:
            msg = f"Numerator {self.numerator} is outside 0..{self.resolution}."
            raise TruthDegreeError(msg)

    @classmethod
    def top(cls, resolution: int) -> TruthDegree:
        """Return the degree 1 in C_n."""
        return cls(resolution, resolution)

    @classmethod
    def bottom(cls, resolution: int) -> TruthDegree:
        """Return the degree 0 in C_n."""
        return cls(0, resolution)

    @classmethod
    def from_fraction(cls, value: Fraction | int, resolution: int) -> TruthDegree:
        """
        Convert an exact rational to a member of C_n.

        Args:
            value: A rational in [0, 1].
            resolution: The target ``n``.

        Returns:
            The degree denoting ``value``.

        Raises:
            TruthDegreeError: If ``value`` is not exactly a member of C_n.

        """
        scaled = Fraction(value) * resolution
        if scaled.denominator != 1 or not 0 <= scaled <= resolution:
            msg = f"{value} is not a member of C_{resolution}."
            raise TruthDegreeError(msg)
        return cls(int(scaled), resolution)

    @property
    def value(self) -> Fraction:
        """Return the exact rational this degree denotes."""
        return Fraction(self.numerator, self.resolution)

    def complement(self) -> TruthDegree:
        """Return the involutive negation ``1 - self``."""
        return TruthDegree(self.resolution - self.numerator, self.resolution)

    def _check_resolution(self, other: TruthDegree) -> None:
        if self.resolution != other.resolution:
            raise ResolutionMismatchError(self.resolution, other.resolution)

    def __lt__(self, other: object) -> bool:
        """Order by numerator; both degrees must share a resolution."""
        if not isinstance(other, TruthDegree):
            return NotImplemented
        self._check_resolution(other)
        return self.numerator < other.numerator

    def __float__(self) -> float:
        """Return ``numerator / resolution`` as a double."""
        return self.numerator / self.resolution

    def __str__(self) -> str:
        """Return the ``k/n`` form used in reports."""
        return f"{self.numerator}/{self.resolution}"


def degrees(resolution: int) -> tuple[TruthDegree, ...]:
    """Return every member of C_n in ascending order."""
    return tuple(TruthDegree(k, resolution) for k in range(resolution + 1))
