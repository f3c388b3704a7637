"""Enumeration of all labellings admitted by a semantics at resolution n."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

import networkx as nx

from .labelling import Labelling
from .semantics import SemanticsChoice, SemanticsKind, pair_consistent, satisfies, weighted_sum

if TYPE_CHECKING:
    import pandas as pd
    import polars as pl

    from .graph import WeightedGraph

logger = logging.getLogger(__name__)

DEFAULT_CAP = 10_000_000


class SizeLimitExceededError(RuntimeError):
    """Raised when brute force would visit more candidate labellings than allowed."""

    def __init__(self, candidates: int, cap: int) -> None:
        """Initialize with the candidate count and the configured cap."""
        self.candidates = candidates
        self.cap = cap
        super().__init__(f"Brute force needs {candidates} candidate labellings, above the cap of {cap}.")


@dataclass(frozen=True)
class LabellingSet:
    """
    Σ: the labellings admitted by a semantics, in canonical order.

    Canonical order is lexicographic over the canonical argument order, degree
    ascending. ``index_of`` gives the position used by ``label(i)`` atoms.

    Attributes:
        arguments: Canonical argument order.
        labellings: Distinct labellings, canonically sorted.
        semantics: The semantics every member satisfies.
        resolution: The session-wide ``n``.

    """

    arguments: tuple[str, ...]
    labellings: tuple[Labelling, ...]
    semantics: SemanticsChoice
    resolution: int
    _index: dict[Labelling, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        """Index the members by position."""
        object.__setattr__(self, "_index", {labelling: i for i, labelling in enumerate(self.labellings)})

    def __len__(self) -> int:
        """Return |Σ|."""
        return len(self.labellings)

    def __iter__(self) -> Iterator[Labelling]:
        """Iterate in canonical order."""
        return iter(self.labellings)

    def __getitem__(self, index: int) -> Labelling:
        """Return the labelling at canonical position ``index``."""
        return self.labellings[index]

    def __contains__(self, labelling: object) -> bool:
        """Return whether ``labelling`` is a member of Σ."""
        return labelling in self._index

    def index_of(self, labelling: Labelling) -> int | None:
        """Return the canonical position of ``labelling``, or ``None`` if it is not in Σ."""
        return self._index.get(labelling)

    def to_polars(self) -> pl.DataFrame:
        """Return Σ as a polars DataFrame (see ``gradedargs.frames``)."""
        from .frames import labellings_to_polars

        return labellings_to_polars(self)

    def to_pandas(self) -> pd.DataFrame:
        """Return Σ as a pandas DataFrame (see ``gradedargs.frames``)."""
        from .frames import labellings_to_pandas

        return labellings_to_pandas(self)


def _labelling_set(
    graph: WeightedGraph,
    resolution: int,
    semantics: SemanticsChoice,
    assignments: Any,
) -> LabellingSet:
    ordered = sorted(set(assignments))
    return LabellingSet(
        arguments=graph.arguments,
        labellings=tuple(Labelling(graph.arguments, numerators, resolution) for numerators in ordered),
        semantics=semantics,
        resolution=resolution,
    )


def search_order(graph: WeightedGraph) -> tuple[str, ...]:
    """
    Return the order in which the search assigns arguments.

    Strongly connected components are visited in topological order of the
    support/attack graph (predecessors first), ties broken by declaration order;
    inside a component arguments keep declaration order. Assigning predecessors first
    lets φ-coherence force a value as soon as an argument is reached.
    """
    condensed = nx.condensation(graph.to_networkx())
    members = {node: sorted(condensed.nodes[node]["members"], key=graph.position) for node in condensed.nodes}
    order: list[str] = []
    for node in nx.lexicographical_topological_sort(condensed, key=lambda node: graph.position(members[node][0])):
        order.extend(members[node])
    return tuple(order)


class _Plan:
    """Precomputed schedule of forced values and checks for one search order."""

    def __init__(self, graph: WeightedGraph, resolution: int, semantics: SemanticsChoice) -> None:
        self.resolution = resolution
        self.kind = semantics.kind
        self.order = [graph.position(name) for name in search_order(graph)]
        step_of = {argument: step for step, argument in enumerate(self.order)}
        size = len(graph.arguments)

        # Incoming (predecessor index, weight) per argument, in edge declaration order.
        self.incoming: list[list[tuple[int, float]]] = [
            [(graph.position(edge.source), edge.weight) for edge in graph.incoming(name)] for name in graph.arguments
        ]
        phi = semantics.phi
        self.phi = [phi.function_for(name) if phi is not None else None for name in graph.arguments]

        # The step after which an argument and all its predecessors are assigned.
        complete_at: dict[int, int] = {}
        self.forced: list[int | None] = [None] * size
        self.checks: list[list[int]] = [[] for _ in range(size)]
        for argument in range(size):
            if not self.incoming[argument]:
                continue
            own = step_of[argument]
            latest = max(step_of[source] for source, _ in self.incoming[argument])
            complete_at[argument] = max(own, latest)
            if self.kind is SemanticsKind.PHI_COHERENT:
                if latest < own:
                    self.forced[own] = argument
                else:
                    self.checks[complete_at[argument]].append(argument)

        self.pair_checks: list[list[tuple[int, int]]] = [[] for _ in range(size)]
        if self.kind is not SemanticsKind.PHI_COHERENT:
            constrained = sorted(complete_at)
            for i, first in enumerate(constrained):
                for second in constrained[i + 1 :]:
                    step = max(complete_at[first], complete_at[second])
                    self.pair_checks[step].append((first, second))

    def weight(self, argument: int, values: Sequence[int]) -> float:
        return weighted_sum(((weight, values[source]) for source, weight in self.incoming[argument]), self.resolution)

    def level(self, argument: int, values: Sequence[int]) -> int:
        function = self.phi[argument]
        if function is None:  # pragma: no cover - only φ-coherent plans force or check levels
            msg = "No φ function for a non-φ-coherent plan."
            raise RuntimeError(msg)
        return function.level(self.weight(argument, values), self.resolution)

    def candidates(self, step: int, values: Sequence[int]) -> Sequence[int]:
        argument = self.forced[step]
        if argument is None:
            return range(self.resolution + 1)
        return (self.level(argument, values),)

    def consistent(self, step: int, values: Sequence[int]) -> bool:
        for argument in self.checks[step]:
            if self.level(argument, values) != values[argument]:
                return False
        for first, second in self.pair_checks[step]:
            if not pair_consistent(
                self.kind,
                values[first],
                values[second],
                self.weight(first, values),
                self.weight(second, values),
            ):
                return False
        return True


def _search(plan: _Plan, first_value: int | None = None) -> list[tuple[int, ...]]:
    size = len(plan.order)
    values = [0] * size
    found: list[tuple[int, ...]] = []
    visited = 0

    def assign(step: int) -> None:
        nonlocal visited
        if step == size:
            found.append(tuple(values))
            return
        argument = plan.order[step]
        options = plan.candidates(step, values)
        if step == 0 and first_value is not None:
            options = [value for value in options if value == first_value]
        for value in options:
            visited += 1
            values[argument] = value
            if plan.consistent(step, values):
                assign(step + 1)
        values[argument] = 0

    assign(0)
    logger.debug("search visited %d partial assignments, found %d labellings", visited, len(found))
    return found


def _search_partition(
    graph: WeightedGraph, resolution: int, semantics: SemanticsChoice, first_value: int
) -> list[tuple[int, ...]]:
    return _search(_Plan(graph, resolution, semantics), first_value)


def enumerate_labellings(
    graph: WeightedGraph,
    resolution: int,
    semantics: SemanticsChoice,
    *,
    workers: int = 1,
) -> LabellingSet:
    """
    Enumerate every labelling of ``graph`` in C_n admitted by ``semantics``.

    A backtracking search assigns degrees in ``search_order``. For the φ-coherent
    semantics an argument whose predecessors are all assigned gets its degree forced
    to φ(W), and self-dependent arguments are checked once their inputs are complete.
    For the coherent and faithful semantics every pair of constrained arguments is
    checked as soon as both are fully determined, which prunes without changing the
    result set.

    Args:
        graph: The weighted argumentation graph.
        resolution: ``n >= 1``.
        semantics: The labelling class.
        workers: With more than one worker, the values of the first searched argument
            are partitioned over a process pool; results are merged and re-sorted.

    Returns:
        Σ in canonical order; possibly empty.

    """
    if resolution < 1:
        msg = f"Resolution must be >= 1, got {resolution}."
        raise ValueError(msg)
    if semantics.phi is not None:
        semantics.phi.check_range(resolution)

    if not graph.arguments:
        return _labelling_set(graph, resolution, semantics, [()])

    plan = _Plan(graph, resolution, semantics)
    logger.debug("search order: %s", ", ".join(graph.arguments[i] for i in plan.order))
    if workers > 1:
        firsts = list(range(resolution + 1))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(
                _search_partition,
                itertools.repeat(graph),
                itertools.repeat(resolution),
                itertools.repeat(semantics),
                firsts,
            )
            found = [assignment for part in parts for assignment in part]
    else:
        found = _search(plan)

    sigma = _labelling_set(graph, resolution, semantics, found)
    if not sigma.labellings:
        logger.warning("no labelling satisfies the %s semantics at n=%d", semantics.kind.value, resolution)
    return sigma


def brute_force(
    graph: WeightedGraph,
    resolution: int,
    semantics: SemanticsChoice,
    *,
    cap: int = DEFAULT_CAP,
) -> LabellingSet:
    """
    Filter all (n+1)^|A| assignments through the semantics predicate.

    An independent oracle for ``enumerate_labellings`` with the same contract.

    Raises:
        SizeLimitExceededError: If (n+1)^|A| exceeds ``cap``.

    """
    candidates = (resolution + 1) ** len(graph.arguments)
    if candidates > cap:
        raise SizeLimitExceededError(candidates, cap)
    if semantics.phi is not None:
        semantics.phi.check_range(resolution)
    admitted = (
        numerators
        for numerators in itertools.product(range(resolution + 1), repeat=len(graph.arguments))
        if satisfies(graph, Labelling(graph.arguments, numerators, resolution), semantics)
    )
    return _labelling_set(graph, resolution, semantics, admitted)
