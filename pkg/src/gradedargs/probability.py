"""Probabilities of fuzzy events over the labellings of Σ."""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .formula import And, Formula, render
from .preferential import PreferentialInterpretation, evaluate

if TYPE_CHECKING:
    from pathlib import Path

    from .enumeration import LabellingSet

NORMALIZATION_TOLERANCE = 1e-12


class ProbabilityError(ValueError):
    """Base class for probability errors."""


class EmptySigmaError(ProbabilityError):
    """Raised when a probability is requested over an empty Σ."""

    def __init__(self) -> None:
        """Initialize the error."""
        super().__init__("No probability distribution exists over an empty Σ.")


class ConditioningOnNullEventError(ProbabilityError):
    """Raised when conditioning on an event of probability 0."""

    def __init__(self, condition: str) -> None:
        """Initialize with the rendered conditioning formula."""
        self.condition = condition
        super().__init__(f"Cannot condition on '{condition}': its probability is 0.")


class InvalidDistributionError(ProbabilityError):
    """Raised when raw weights cannot be normalized into a distribution over Σ."""

    def __init__(self, reason: str, line: int | None = None) -> None:
        """
        Initialize the error.

        Args:
            reason: What is wrong with the weights.
            line: 1-based line of a distribution file, when loading from one.

        """
        self.reason = reason
        self.line = line
        super().__init__(reason if line is None else f"{line}: {reason}")


@dataclass(frozen=True)
class Distribution:
    """
    A probability distribution p over Σ, indexed by canonical labelling position.

    Attributes:
        weights: p(σ_i) for every index i of Σ; nonnegative, summing to 1.

    Example:
        Distribution.uniform(3).weights          # (1/3, 1/3, 1/3)
        Distribution.explicit({0: 1.0, 2: 3.0}, 3).weights   # (0.25, 0.0, 0.75)

    """

    weights: tuple[float, ...]

    @classmethod
    def uniform(cls, size: int) -> Distribution:
        """Return the uniform distribution over ``size`` labellings."""
        if size < 1:
            raise EmptySigmaError
        return cls(tuple(1.0 / size for _ in range(size)))

    @classmethod
    def explicit(cls, raw: Mapping[int, float], size: int) -> Distribution:
        """
        Normalize raw nonnegative weights; indices not mentioned get weight 0.

        Raises:
            EmptySigmaError: If ``size`` is 0.
            InvalidDistributionError: On an out-of-range index, a negative or non-finite
                weight, or a zero total.

        """
        if size < 1:
            raise EmptySigmaError
        values = [0.0] * size
        for index, weight in raw.items():
            if not 0 <= index < size:
                msg = f"Labelling index {index} is outside 0..{size - 1}."
                raise InvalidDistributionError(msg)
            if not math.isfinite(weight) or weight < 0:
                msg = f"Weight {weight!r} of labelling {index} must be a finite nonnegative number."
                raise InvalidDistributionError(msg)
            values[index] = weight
        total = math.fsum(values)
        if total <= 0:
            msg = "Distribution weights sum to 0."
            raise InvalidDistributionError(msg)
        return cls(tuple(value / total for value in values))

    def __post_init__(self) -> None:
        """Check nonnegativity and normalization."""
        if any(weight < 0 for weight in self.weights):
            msg = "Probabilities must be nonnegative."
            raise InvalidDistributionError(msg)
        if abs(math.fsum(self.weights) - 1.0) > NORMALIZATION_TOLERANCE:
            msg = f"Probabilities sum to {math.fsum(self.weights)!r}, not 1."
            raise InvalidDistributionError(msg)


def parse_distribution(text: str) -> dict[int, float]:
    """
    Parse ``<index> <weight>`` lines into raw weights.

    Blank lines and ``#`` comments are ignored; a repeated index is an error.
    """
    raw: dict[int, float] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        fields = content.split()
        if len(fields) != 2:  # noqa: PLR2004
            msg = f"Expected '<index> <weight>', got {content!r}."
            raise InvalidDistributionError(msg, number)
        try:
            index, weight = int(fields[0]), float(fields[1])
        except ValueError:
            msg = f"Expected '<index> <weight>', got {content!r}."
            raise InvalidDistributionError(msg, number) from None
        if index in raw:
            msg = f"Labelling index {index} appears twice."
            raise InvalidDistributionError(msg, number)
        raw[index] = weight
    return raw


def load_distribution(path: Path, sigma: LabellingSet) -> Distribution:
    """Read a distribution file and normalize it over ``sigma``."""
    return Distribution.explicit(parse_distribution(path.read_text(encoding="utf-8")), len(sigma))


@dataclass(frozen=True)
class DistributionSpec:
    """
    How a session builds its distribution once Σ is known.

    ``path`` names a distribution file read by ``load_distribution``; otherwise ``raw``
    holds explicit raw weights, and with neither the distribution is uniform.
    """

    raw: Mapping[int, float] | None = None
    path: Path | None = None

    def build(self, sigma: LabellingSet) -> Distribution:
        """Return the distribution over ``sigma``."""
        if self.path is not None:
            return load_distribution(self.path, sigma)
        if self.raw is None:
            return Distribution.uniform(len(sigma))
        return Distribution.explicit(self.raw, len(sigma))

    @property
    def label(self) -> str:
        """Return ``uniform`` or ``explicit`` for reports."""
        return "uniform" if self.raw is None and self.path is None else "explicit"


def _degrees(interpretation: PreferentialInterpretation, formula: Formula) -> Iterable[float]:
    return (float(evaluate(interpretation, labelling, formula)) for labelling in interpretation.sigma)


def probability(interpretation: PreferentialInterpretation, distribution: Distribution, formula: Formula) -> float:
    """
    Return P(α) = Σ σ(α) p(σ) over Σ, the expected degree of α.

    Raises:
        EmptySigmaError: If Σ is empty.
        InvalidDistributionError: If ``distribution`` is not over Σ.

    """
    if not interpretation.sigma.labellings:
        raise EmptySigmaError
    if len(distribution.weights) != len(interpretation.sigma):
        msg = f"Distribution has {len(distribution.weights)} weights for {len(interpretation.sigma)} labellings."
        raise InvalidDistributionError(msg)
    return math.fsum(
        degree * weight for degree, weight in zip(_degrees(interpretation, formula), distribution.weights, strict=True)
    )


def conditional_probability(
    interpretation: PreferentialInterpretation,
    distribution: Distribution,
    formula: Formula,
    condition: Formula,
) -> float:
    """
    Return P(α | β) = P(α ∧ β) / P(β), with ∧ read by the interpretation's t-norm.

    Raises:
        ConditioningOnNullEventError: If P(β) = 0.

    """
    denominator = probability(interpretation, distribution, condition)
    if denominator == 0:
        raise ConditioningOnNullEventError(render(condition))
    return probability(interpretation, distribution, And(formula, condition)) / denominator


def fuzzy_size(interpretation: PreferentialInterpretation, formula: Formula) -> float:
    """Return M(α) = Σ σ(α) over Σ; 0 on an empty Σ."""
    return float(sum(evaluate(interpretation, labelling, formula).value for labelling in interpretation.sigma))
