"""Per-argument φ functions mapping a weighted support to a degree in C_n."""

from __future__ import annotations

import bisect
import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from .truth_degree import TruthDegree, TruthDegreeError

TIE_TOLERANCE = 1e-12


def _sigmoid(x: float) -> float:
    # Split on the sign so exp never overflows.
    if x >= 0:
        return 1.0 / (1.0 + math.exp(-x))
    z = math.exp(x)
    return z / (1.0 + z)


@dataclass(frozen=True)
class SigmoidNearest:
    """φ(x) is the member of C_n nearest to the logistic sigmoid of x; midpoint ties round up."""

    def level(self, x: float, resolution: int) -> int:
        """Return the numerator of φ(x) in C_n."""
        s = _sigmoid(x)
        lower = min(math.floor(s * resolution), resolution)
        if lower == resolution:
            return resolution
        below = s - lower / resolution
        above = (lower + 1) / resolution - s
        if abs(below - above) <= TIE_TOLERANCE or above < below:
            return lower + 1
        return lower

    @property
    def monotone(self) -> bool:
        """Sigmoid rounding is non-decreasing."""
        return True

    def describe(self) -> str:
        """Return the DSL spelling."""
        return "sigmoid"


@dataclass(frozen=True)
class StepThreshold:
    """φ(x) = 1 if x > threshold else 0 (strict inequality)."""

    threshold: float = 0.0

    def level(self, x: float, resolution: int) -> int:
        """Return the numerator of φ(x) in C_n."""
        return resolution if x > self.threshold else 0

    @property
    def monotone(self) -> bool:
        """A step is non-decreasing."""
        return True

    def describe(self) -> str:
        """Return the DSL spelling."""
        return f"step {self.threshold!r}"


@dataclass(frozen=True)
class ExplicitTable:
    """
    A piecewise-constant φ given by breakpoints.

    φ(x) is ``values[i]`` for the largest ``i`` with ``breakpoints[i] <= x``, and 0 below
    ``breakpoints[0]`` (use ``-inf`` as the first breakpoint to set that value).

    Attributes:
        breakpoints: Strictly increasing reals.
        values: One rational in [0, 1] per breakpoint; each must lie in the session's C_n.

    """

    breakpoints: tuple[float, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        """Validate shape, ordering and range."""
        if not self.breakpoints or len(self.breakpoints) != len(self.values):
            msg = "A φ table needs one value per breakpoint and at least one breakpoint."
            raise ValueError(msg)
        if any(b <= a for a, b in zip(self.breakpoints, self.breakpoints[1:], strict=False)):
            msg = f"φ table breakpoints must be strictly increasing, got {list(self.breakpoints)}."
            raise ValueError(msg)
        if any(not 0 <= value <= 1 for value in self.values):
            msg = "φ table values must lie in [0, 1]."
            raise ValueError(msg)

    def level(self, x: float, resolution: int) -> int:
        """Return the numerator of φ(x) in C_n."""
        index = bisect.bisect_right(self.breakpoints, x) - 1
        if index < 0:
            return 0
        return TruthDegree.from_fraction(self.values[index], resolution).numerator

    @property
    def monotone(self) -> bool:
        """Return whether the table is non-decreasing (the implicit 0 below included)."""
        return all(a <= b for a, b in zip(self.values, self.values[1:], strict=False))

    def describe(self) -> str:
        """Return the DSL spelling."""
        return "table " + " ".join(f"{x!r}:{value}" for x, value in zip(self.breakpoints, self.values, strict=True))


PhiFunction = SigmoidNearest | StepThreshold | ExplicitTable


@dataclass(frozen=True)
class PhiSpec:
    """
    The φ assignment of a φ-coherent semantics: a default plus per-argument overrides.

    Attributes:
        default: φ used for every argument without an override.
        overrides: Per-argument φ_i.

    """

    default: PhiFunction = field(default_factory=SigmoidNearest)
    overrides: Mapping[str, PhiFunction] = field(default_factory=dict)

    def function_for(self, name: str) -> PhiFunction:
        """Return φ_i for ``name``."""
        return self.overrides.get(name, self.default)

    @property
    def monotone(self) -> bool:
        """Return whether every function in the spec is non-decreasing."""
        return self.default.monotone and all(function.monotone for function in self.overrides.values())

    def check_range(self, resolution: int) -> None:
        """
        Check that every function ranges in C_n.

        Raises:
            TruthDegreeError: If a table value is not a member of C_n.

        """
        for function in (self.default, *self.overrides.values()):
            if isinstance(function, ExplicitTable):
                for value in function.values:
                    TruthDegree.from_fraction(value, resolution)

    def warnings(self) -> list[str]:
        """Return report warnings for non-monotone tables."""
        found = [
            f"φ table for '{name}' is not monotone non-decreasing"
            for name, function in sorted(self.overrides.items())
            if not function.monotone
        ]
        if not self.default.monotone:
            found.insert(0, "default φ table is not monotone non-decreasing")
        return found


def apply_phi(spec: PhiSpec, name: str, x: float, resolution: int) -> TruthDegree:
    """
    Evaluate φ_name(x) in C_n.

    Args:
        spec: The φ assignment.
        name: The argument whose φ to use (override if present, else the default).
        x: A finite weighted support.
        resolution: The session-wide ``n``.

    Returns:
        The prescribed degree.

    """
    if not math.isfinite(x):
        msg = f"φ is only defined on finite reals, got {x!r}."
        raise TruthDegreeError(msg)
    return TruthDegree(spec.function_for(name).level(x, resolution), resolution)
