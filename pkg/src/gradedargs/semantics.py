"""Argument weights and the coherent, faithful and φ-coherent labelling classes."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import StrEnum
from typing import TYPE_CHECKING

from .phi import PhiSpec

if TYPE_CHECKING:
    from .graph import Edge, WeightedGraph
    from .labelling import Labelling


class SemanticsKind(StrEnum):
    """The three labelling classes."""

    COHERENT = "coherent"
    FAITHFUL = "faithful"
    PHI_COHERENT = "phi"


@dataclass(frozen=True)
class SemanticsChoice:
    """
    A labelling class, with its φ assignment for the φ-coherent case.

    Example:
        SemanticsChoice.phi_coherent(PhiSpec())
        SemanticsChoice.coherent()

    """

    kind: SemanticsKind
    phi: PhiSpec | None = None

    def __post_init__(self) -> None:
        """Require a φ assignment exactly for the φ-coherent semantics."""
        if (self.kind is SemanticsKind.PHI_COHERENT) != (self.phi is not None):
            msg = "A PhiSpec is required for, and only for, the φ-coherent semantics."
            raise ValueError(msg)

    @classmethod
    def coherent(cls) -> SemanticsChoice:
        """Return the coherent semantics."""
        return cls(SemanticsKind.COHERENT)

    @classmethod
    def faithful(cls) -> SemanticsChoice:
        """Return the faithful semantics."""
        return cls(SemanticsKind.FAITHFUL)

    @classmethod
    def phi_coherent(cls, spec: PhiSpec | None = None) -> SemanticsChoice:
        """Return the φ-coherent semantics (sigmoid rounding by default)."""
        return cls(SemanticsKind.PHI_COHERENT, spec if spec is not None else PhiSpec())


def weighted_sum(terms: Iterable[tuple[float, int]], resolution: int) -> float:
    """
    Return Σ π(B, A) · σ(B) over ``(weight, numerator)`` terms, folded left in edge order.

    Every weight computation in the package goes through here, so the search and the
    predicates see bit-identical sums.
    """
    total = 0.0
    for weight, numerator in terms:
        total += weight * (numerator / resolution)
    return total


def _terms(incoming: Sequence[Edge], numerators: dict[str, int]) -> list[tuple[float, int]]:
    return [(edge.weight, numerators[edge.source]) for edge in incoming]


def weight_of(graph: WeightedGraph, labelling: Labelling, name: str) -> float | None:
    """
    Return W^G_σ(name), or ``None`` (undefined) when ``name`` has no predecessors.

    Raises:
        UnknownArgumentError: If ``name`` is not in the graph.

    """
    incoming = graph.incoming(name)
    if not incoming:
        return None
    numerators = dict(zip(labelling.arguments, labelling.numerators, strict=True))
    return weighted_sum(_terms(incoming, numerators), labelling.resolution)


def pair_consistent(kind: SemanticsKind, a: int, b: int, weight_a: float, weight_b: float) -> bool:
    """
    Check the coherent or faithful condition for one unordered pair of constrained arguments.

    Coherent: σ(A) < σ(B) iff W(A) < W(B), both ways round. Faithful: only the forward
    implication. Weights are compared exactly.
    """
    if kind is SemanticsKind.COHERENT:
        return (a < b) == (weight_a < weight_b) and (b < a) == (weight_b < weight_a)
    return (not a < b or weight_a < weight_b) and (not b < a or weight_b < weight_a)


def _constrained_weights(graph: WeightedGraph, labelling: Labelling) -> list[tuple[int, float]]:
    numerators = dict(zip(labelling.arguments, labelling.numerators, strict=True))
    return [
        (numerators[name], weighted_sum(_terms(graph.incoming(name), numerators), labelling.resolution))
        for name in graph.arguments
        if graph.incoming(name)
    ]


def _pairs_consistent(kind: SemanticsKind, graph: WeightedGraph, labelling: Labelling) -> bool:
    weighted = _constrained_weights(graph, labelling)
    return all(
        pair_consistent(kind, a, b, weight_a, weight_b)
        for i, (a, weight_a) in enumerate(weighted)
        for b, weight_b in weighted[i + 1 :]
    )


def is_phi_coherent(graph: WeightedGraph, labelling: Labelling, spec: PhiSpec) -> bool:
    """
    Return whether σ(A) = φ_A(W(A)) for every argument A with predecessors.

    Arguments without incoming edges are unconstrained.
    """
    numerators = dict(zip(labelling.arguments, labelling.numerators, strict=True))
    for name in graph.arguments:
        incoming = graph.incoming(name)
        if not incoming:
            continue
        weight = weighted_sum(_terms(incoming, numerators), labelling.resolution)
        if spec.function_for(name).level(weight, labelling.resolution) != numerators[name]:
            return False
    return True


def is_coherent(graph: WeightedGraph, labelling: Labelling) -> bool:
    """Return whether σ(A) < σ(B) iff W(A) < W(B) for all constrained A, B."""
    return _pairs_consistent(SemanticsKind.COHERENT, graph, labelling)


def is_faithful(graph: WeightedGraph, labelling: Labelling) -> bool:
    """Return whether σ(A) < σ(B) implies W(A) < W(B) for all constrained A, B."""
    return _pairs_consistent(SemanticsKind.FAITHFUL, graph, labelling)


def satisfies(graph: WeightedGraph, labelling: Labelling, semantics: SemanticsChoice) -> bool:
    """Dispatch to the predicate of ``semantics``."""
    if semantics.kind is SemanticsKind.PHI_COHERENT:
        return is_phi_coherent(graph, labelling, semantics.phi or PhiSpec())
    return _pairs_consistent(semantics.kind, graph, labelling)
