"""Preferential interpretations over Σ: typicality, graded implications and queries."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import StrEnum
from typing import TYPE_CHECKING

from .formula import Formula, Impl, Typ, contains_typicality, render, typicality_subformulas
from .logic import LogicSystem, eval_plain
from .truth_degree import TruthDegree

if TYPE_CHECKING:
    from .enumeration import LabellingSet
    from .labelling import Labelling

logger = logging.getLogger(__name__)

EMPTY_SIGMA_DEGREE_WARNING = "Σ is empty: implication degrees are vacuously 1"


class PreferentialError(ValueError):
    """Base class for errors raised while evaluating over a preferential interpretation."""


class TypicalityInPreferenceFormulaError(PreferentialError):
    """Raised when a preference order is requested for a formula containing ``T``."""

    def __init__(self, formula: Formula) -> None:
        """Initialize with the offending formula."""
        self.formula = formula
        super().__init__(f"Preference formulas must be typicality-free: {render(formula)}")


class LabellingNotInSigmaError(PreferentialError):
    """Raised when a labelling outside Σ is evaluated against Σ."""

    def __init__(self, labelling: Labelling) -> None:
        """Initialize with the foreign labelling."""
        self.labelling = labelling
        super().__init__(f"Labelling is not a member of Σ: {labelling}")


@dataclass(frozen=True)
class PreferentialInterpretation:
    """
    The pair (C_n, Σ) together with the logic used to evaluate formulas.

    Every formula α induces a strict modular order on Σ: σ is preferred to σ' when
    σ'(α) < σ(α). Maxima of α over Σ are memoized per formula; the interpretation is
    otherwise immutable.
    """

    sigma: LabellingSet
    logic: LogicSystem
    _maxima: dict[Formula, TruthDegree | None] = field(default_factory=dict, init=False, repr=False, compare=False)

    @property
    def resolution(self) -> int:
        """Return n."""
        return self.sigma.resolution

    def plain_value(self, labelling: Labelling, formula: Formula) -> TruthDegree:
        """Return σ(α) for a typicality-free α, with ``label(i)`` resolved against σ's position in Σ."""
        return eval_plain(labelling, formula, self.logic, label_index=self.sigma.index_of(labelling))

    def maximum(self, formula: Formula) -> TruthDegree | None:
        """Return max over Σ of σ(α) for a typicality-free α, or ``None`` when Σ is empty."""
        _require_plain(formula)
        if formula not in self._maxima:
            values = [self.plain_value(labelling, formula) for labelling in self.sigma]
            self._maxima[formula] = max(values, default=None)
        return self._maxima[formula]


def _require_plain(formula: Formula) -> None:
    if contains_typicality(formula):
        raise TypicalityInPreferenceFormulaError(formula)


def _require_member(interpretation: PreferentialInterpretation, labelling: Labelling) -> int:
    index = interpretation.sigma.index_of(labelling)
    if index is None:
        raise LabellingNotInSigmaError(labelling)
    return index


def prefers(
    interpretation: PreferentialInterpretation,
    formula: Formula,
    labelling: Labelling,
    other: Labelling,
) -> bool:
    """Return whether ``labelling <_α other``, that is other(α) < labelling(α)."""
    _require_plain(formula)
    _require_member(interpretation, labelling)
    _require_member(interpretation, other)
    return interpretation.plain_value(other, formula) < interpretation.plain_value(labelling, formula)


def preferred_labellings(interpretation: PreferentialInterpretation, formula: Formula) -> tuple[Labelling, ...]:
    """
    Return min_{<α}(Σ) in canonical order.

    C_n is totally ordered, so the minimal elements of ``<_α`` are exactly the members
    of Σ attaining the maximum value of α.
    """
    best = interpretation.maximum(formula)
    if best is None:
        return ()
    return tuple(
        labelling for labelling in interpretation.sigma if interpretation.plain_value(labelling, formula) == best
    )


def typicality_value(interpretation: PreferentialInterpretation, labelling: Labelling, formula: Formula) -> TruthDegree:
    """
    Return σ(T(α)): σ(α) when σ is a preferred labelling for α, else 0.

    Raises:
        LabellingNotInSigmaError: If ``labelling`` is not in Σ.
        TypicalityInPreferenceFormulaError: If ``formula`` contains ``T``.

    """
    _require_plain(formula)
    _require_member(interpretation, labelling)
    value = interpretation.plain_value(labelling, formula)
    if value == interpretation.maximum(formula):
        return value
    return TruthDegree.bottom(interpretation.resolution)


def typicality_context(
    interpretation: PreferentialInterpretation,
    labelling: Labelling,
    formula: Formula,
) -> dict[Typ, TruthDegree]:
    """Return the value in ``labelling`` of every ``T(γ)`` occurring in ``formula``."""
    return {node: typicality_value(interpretation, labelling, node.operand) for node in typicality_subformulas(formula)}


def evaluate(interpretation: PreferentialInterpretation, labelling: Labelling, formula: Formula) -> TruthDegree:
    """
    Evaluate a formula in a member of Σ, resolving typicality and labelling atoms globally.

    Raises:
        LabellingNotInSigmaError: If ``labelling`` is not in Σ.

    """
    index = _require_member(interpretation, labelling)
    return eval_plain(
        labelling,
        formula,
        interpretation.logic,
        typ_context=typicality_context(interpretation, labelling, formula),
        label_index=index,
    )


def _implication_values(
    interpretation: PreferentialInterpretation, antecedent: Formula, consequent: Formula
) -> list[TruthDegree]:
    implication = Impl(antecedent, consequent)
    return [evaluate(interpretation, labelling, implication) for labelling in interpretation.sigma]


def implication_degree(
    interpretation: PreferentialInterpretation,
    antecedent: Formula,
    consequent: Formula,
) -> TruthDegree:
    """
    Return (α → β)^I, the minimum over Σ of σ(α) ▷ σ(β).

    Typicality subformulas on either side are evaluated with their global preferred
    sets. An empty Σ gives 1, the empty infimum; a warning is logged.
    """
    values = _implication_values(interpretation, antecedent, consequent)
    if not values:
        logger.warning("implication degree over an empty Σ is vacuously 1")
        return TruthDegree.top(interpretation.resolution)
    return min(values)


class BoundKind(StrEnum):
    """Direction of a graded implication bound."""

    AT_LEAST = ">="
    AT_MOST = "<="


@dataclass(frozen=True)
class GradedImplication:
    """
    ``antecedent -> consequent >= l`` or ``antecedent -> consequent <= u``.

    Attributes:
        antecedent: Left side; may contain unnested typicality.
        consequent: Right side; may contain unnested typicality.
        bound_kind: Lower (``>=``) or upper (``<=``) bound.
        bound: The bound, a member of C_n.

    """

    antecedent: Formula
    consequent: Formula
    bound_kind: BoundKind
    bound: TruthDegree

    @property
    def implication(self) -> Impl:
        """Return the implication formula being graded."""
        return Impl(self.antecedent, self.consequent)

    def __str__(self) -> str:
        """Return the DSL spelling."""
        return f"{render(self.implication)} {self.bound_kind.value} {self.bound}"


@dataclass(frozen=True)
class QueryLeaf:
    """A graded implication used as a two-valued query atom."""

    implication: GradedImplication


@dataclass(frozen=True)
class QueryNot:
    """Classical negation of a query."""

    operand: Query


@dataclass(frozen=True)
class QueryAnd:
    """Classical conjunction of queries."""

    left: Query
    right: Query


@dataclass(frozen=True)
class QueryOr:
    """Classical disjunction of queries."""

    left: Query
    right: Query


@dataclass(frozen=True)
class QueryImplies:
    """Classical material implication between queries."""

    left: Query
    right: Query


Query = QueryLeaf | QueryNot | QueryAnd | QueryOr | QueryImplies


@dataclass(frozen=True)
class Verdict:
    """
    Outcome of checking one graded implication.

    Attributes:
        implication: The graded implication checked.
        satisfied: Whether the bound holds.
        degree: (α → β)^I.
        preferred_count: Number of preferred labellings when the antecedent is ``T(γ)``.
        counterexample: For a failed ``>=`` bound, the first labelling in canonical order
            realizing the violating degree.
        warnings: Report warnings raised while checking.

    """

    implication: GradedImplication
    satisfied: bool
    degree: TruthDegree
    preferred_count: int | None = None
    counterexample: Labelling | None = None
    warnings: tuple[str, ...] = ()


def check_graded(interpretation: PreferentialInterpretation, graded: GradedImplication) -> Verdict:
    """Check a graded implication against the interpretation and explain the outcome."""
    values = _implication_values(interpretation, graded.antecedent, graded.consequent)
    warnings: tuple[str, ...] = ()
    if values:
        degree = min(values)
    else:
        degree = TruthDegree.top(interpretation.resolution)
        warnings = (EMPTY_SIGMA_DEGREE_WARNING,)

    if graded.bound_kind is BoundKind.AT_LEAST:
        satisfied = degree >= graded.bound
    else:
        satisfied = degree <= graded.bound

    counterexample = None
    if not satisfied and graded.bound_kind is BoundKind.AT_LEAST:
        counterexample = interpretation.sigma[values.index(degree)]

    preferred_count = None
    if isinstance(graded.antecedent, Typ):
        preferred_count = len(preferred_labellings(interpretation, graded.antecedent.operand))

    return Verdict(
        implication=graded,
        satisfied=satisfied,
        degree=degree,
        preferred_count=preferred_count,
        counterexample=counterexample,
        warnings=warnings,
    )


def query_leaves(query: Query) -> tuple[GradedImplication, ...]:
    """Return the graded implications of a query, left to right."""
    match query:
        case QueryLeaf(implication):
            return (implication,)
        case QueryNot(operand):
            return query_leaves(operand)
        case QueryAnd(left, right) | QueryOr(left, right) | QueryImplies(left, right):
            return query_leaves(left) + query_leaves(right)
    msg = f"Not a query: {query!r}"
    raise TypeError(msg)


def _truth(query: Query, verdicts: dict[GradedImplication, Verdict]) -> bool:
    match query:
        case QueryLeaf(implication):
            return verdicts[implication].satisfied
        case QueryNot(operand):
            return not _truth(operand, verdicts)
        case QueryAnd(left, right):
            return _truth(left, verdicts) and _truth(right, verdicts)
        case QueryOr(left, right):
            return _truth(left, verdicts) or _truth(right, verdicts)
        case QueryImplies(left, right):
            return not _truth(left, verdicts) or _truth(right, verdicts)
    msg = f"Not a query: {query!r}"
    raise TypeError(msg)


def collect_verdicts(interpretation: PreferentialInterpretation, query: Query) -> tuple[Verdict, ...]:
    """Check every distinct leaf of ``query``, in left-to-right order."""
    leaves = dict.fromkeys(query_leaves(query))
    return tuple(check_graded(interpretation, leaf) for leaf in leaves)


def eval_query(interpretation: PreferentialInterpretation, query: Query) -> bool:
    """Evaluate a boolean combination of graded implications classically."""
    verdicts = {verdict.implication: verdict for verdict in collect_verdicts(interpretation, query)}
    return _truth(query, verdicts)


def query_truth(query: Query, verdicts: tuple[Verdict, ...]) -> bool:
    """Combine already computed leaf verdicts into the truth value of ``query``."""
    return _truth(query, {verdict.implication: verdict for verdict in verdicts})
