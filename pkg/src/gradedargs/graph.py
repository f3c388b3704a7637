"""Weighted (bipolar) argumentation graphs."""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

import networkx as nx

from .graph_error import (
    DuplicateArgumentError,
    DuplicateEdgeError,
    UnknownArgumentError,
    UnknownEndpointError,
    ZeroOrNonfiniteWeightError,
)


@dataclass(frozen=True)
class Edge:
    """
    A weighted edge of the graph.

    Negative weights are attacks, positive weights are supports.

    Attributes:
        source: The attacking/supporting argument.
        target: The argument receiving the attack/support.
        weight: Finite, nonzero real weight.

    """

    source: str
    target: str
    weight: float


@dataclass(frozen=True)
class WeightedGraph:
    """
    Arguments plus directed real-weighted edges.

    The declaration order of ``arguments`` is the canonical order used for labelling
    serialization, canonical sorting and labelling indices. Construction validates every
    invariant, so an instance is always well formed.

    Attributes:
        arguments: Distinct argument names in declaration order.
        edges: Edges in declaration order, at most one per (source, target).

    Example:
        graph = WeightedGraph(("A", "B"), (Edge("A", "B", -1.0),))
        graph.predecessors("B")   # frozenset({"A"})

    """

    arguments: tuple[str, ...]
    edges: tuple[Edge, ...] = ()
    _incoming: Mapping[str, tuple[Edge, ...]] = field(init=False, repr=False, compare=False)
    _positions: Mapping[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        """Validate names and edges, then index incoming edges per target."""
        positions: dict[str, int] = {}
        for position, name in enumerate(self.arguments):
            if name in positions:
                raise DuplicateArgumentError(name)
            positions[name] = position

        incoming: dict[str, list[Edge]] = {name: [] for name in self.arguments}
        seen: set[tuple[str, str]] = set()
        for edge in self.edges:
            for endpoint in (edge.source, edge.target):
                if endpoint not in positions:
                    raise UnknownEndpointError(edge.source, edge.target, endpoint)
            if not math.isfinite(edge.weight) or edge.weight == 0:
                raise ZeroOrNonfiniteWeightError(edge.source, edge.target, edge.weight)
            if (edge.source, edge.target) in seen:
                raise DuplicateEdgeError(edge.source, edge.target)
            seen.add((edge.source, edge.target))
            incoming[edge.target].append(edge)

        object.__setattr__(self, "_positions", positions)
        object.__setattr__(self, "_incoming", {name: tuple(edges) for name, edges in incoming.items()})

    def __contains__(self, name: object) -> bool:
        """Return whether ``name`` is an argument of the graph."""
        return name in self._positions

    def position(self, name: str) -> int:
        """Return the canonical (declaration) index of an argument."""
        try:
            return self._positions[name]
        except KeyError:
            raise UnknownArgumentError(name) from None

    def incoming(self, name: str) -> tuple[Edge, ...]:
        """Return the edges into ``name`` in declaration order."""
        try:
            return self._incoming[name]
        except KeyError:
            raise UnknownArgumentError(name) from None

    def predecessors(self, name: str) -> frozenset[str]:
        """Return the attackers and supporters of ``name``."""
        return frozenset(edge.source for edge in self.incoming(name))

    def is_constrained(self, name: str) -> bool:
        """Return whether ``name`` has incoming edges, i.e. whether semantics constrain it."""
        return bool(self.incoming(name))

    def to_networkx(self) -> nx.DiGraph:
        """Return a ``networkx.DiGraph`` copy with edge weights as the ``weight`` attribute."""
        digraph = nx.DiGraph()
        digraph.add_nodes_from(self.arguments)
        digraph.add_weighted_edges_from((edge.source, edge.target, edge.weight) for edge in self.edges)
        return digraph


def build_graph(
    arguments: Iterable[str],
    edges: Iterable[Edge | tuple[str, str, float]] = (),
) -> WeightedGraph:
    """
    Build and validate a weighted argumentation graph.

    Args:
        arguments: Distinct argument names; their order becomes the canonical order.
        edges: ``Edge`` objects or ``(source, target, weight)`` triples.

    Returns:
        The validated graph.

    Raises:
        DuplicateArgumentError: If a name repeats.
        UnknownEndpointError: If an edge references an undeclared name.
        DuplicateEdgeError: If a (source, target) pair repeats.
        ZeroOrNonfiniteWeightError: If a weight is zero, infinite or NaN.

    """
    normalized = tuple(
        edge if isinstance(edge, Edge) else Edge(edge[0], edge[1], float(edge[2])) for edge in edges
    )
    return WeightedGraph(tuple(arguments), normalized)


def predecessors(graph: WeightedGraph, name: str) -> frozenset[str]:
    """
    Return R^-(name), the sources of all edges into ``name``.

    An empty set means the argument is unconstrained by every semantics.

    Raises:
        UnknownArgumentError: If ``name`` is not in the graph.

    """
    return graph.predecessors(name)
