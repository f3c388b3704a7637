"""Session orchestration: enumerate Σ once, evaluate every statement, build a report."""

from __future__ import annotations

import json
import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

from .enumeration import LabellingSet, enumerate_labellings
from .logic import GOEDEL, LogicSystem
from .preferential import (
    BoundKind,
    GradedImplication,
    PreferentialInterpretation,
    QueryLeaf,
    Verdict,
    check_graded,
    collect_verdicts,
    preferred_labellings,
    query_truth,
    typicality_value,
)
from .probability import DistributionSpec, conditional_probability, probability
from .query_dsl import (
    CheckStatement,
    DegreeStatement,
    ListLabellingsStatement,
    PreferredStatement,
    ProbStatement,
    Statement,
    TypicalityStatement,
)
from .semantics import SemanticsChoice
from .truth_degree import TruthDegree

if TYPE_CHECKING:
    from .graph import WeightedGraph
    from .labelling import Labelling
    from .probability import Distribution

logger = logging.getLogger(__name__)

EMPTY_SIGMA_WARNING = "Σ is empty: no labelling satisfies the semantics"
EMPTY_SIGMA_PROBABILITY_WARNING = "Σ is empty: probabilities are undefined"


@dataclass(frozen=True)
class Session:
    """
    Everything needed to answer a query file against one graph.

    Attributes:
        graph: The argumentation graph.
        resolution: The session-wide ``n``; degrees, bounds and φ ranges all live in C_n.
        semantics: Which labellings make up Σ.
        logic: Truth functions for the connectives.
        distribution: How p over Σ is built once Σ is known.
        statements: Parsed statements, in file order.
        workers: Processes used by the enumeration.

    """

    graph: WeightedGraph
    resolution: int
    semantics: SemanticsChoice = field(default_factory=SemanticsChoice.phi_coherent)
    logic: LogicSystem = GOEDEL
    distribution: DistributionSpec = field(default_factory=DistributionSpec)
    statements: tuple[Statement, ...] = ()
    workers: int = 1


@dataclass(frozen=True)
class IndexedLabelling:
    """A member of Σ with its canonical index and, for ``typicality``, the degree of ``T(α)``."""

    index: int
    values: dict[str, str]
    degree: str | None = None

    def to_dict(self) -> dict[str, Any]:
        """Return the JSON record."""
        record: dict[str, Any] = {"index": self.index, "labelling": self.values}
        if self.degree is not None:
            record["degree"] = self.degree
        return record


@dataclass(frozen=True)
class LeafResult:
    """The verdict on one graded implication of a compound query."""

    implication: str
    satisfied: bool
    degree: str
    preferred_count: int | None
    counterexample: dict[str, str] | None

    def to_dict(self) -> dict[str, Any]:
        """Return the JSON record."""
        return {
            "implication": self.implication,
            "satisfied": self.satisfied,
            "degree": self.degree,
            "preferred_count": self.preferred_count,
            "counterexample": self.counterexample,
        }


@dataclass(frozen=True)
class StatementResult:
    """
    The answer to one statement.

    Fields that do not apply to a statement kind stay ``None``.
    """

    kind: str
    input_text: str
    satisfied: bool | None = None
    degree: str | None = None
    preferred_count: int | None = None
    counterexample: dict[str, str] | None = None
    probability: float | None = None
    labellings: tuple[IndexedLabelling, ...] | None = None
    leaves: tuple[LeafResult, ...] | None = None
    warnings: tuple[str, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        """Return the JSON record."""
        record: dict[str, Any] = {
            "kind": self.kind,
            "input_text": self.input_text,
            "satisfied": self.satisfied,
            "degree": self.degree,
            "preferred_count": self.preferred_count,
            "counterexample": self.counterexample,
            "probability": self.probability,
            "warnings": list(self.warnings),
        }
        if self.labellings is not None:
            record["labellings"] = [labelling.to_dict() for labelling in self.labellings]
        if self.leaves is not None:
            record["leaves"] = [leaf.to_dict() for leaf in self.leaves]
        return record


@dataclass(frozen=True)
class SigmaSummary:
    """How Σ was built and what it contains."""

    size: int
    semantics: str
    resolution: int
    logic: str
    distribution: str
    warnings: tuple[str, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        """Return the JSON record."""
        return {
            "size": self.size,
            "semantics": self.semantics,
            "n": self.resolution,
            "logic": self.logic,
            "distribution": self.distribution,
            "warnings": list(self.warnings),
        }


@dataclass(frozen=True)
class Report:
    """The outcome of a session: a Σ summary plus one result per statement."""

    sigma: SigmaSummary
    statements: tuple[StatementResult, ...]

    @property
    def failed_checks(self) -> int:
        """Return how many ``check`` statements are unsatisfied."""
        return sum(1 for result in self.statements if result.kind == "check" and result.satisfied is False)

    def to_dict(self) -> dict[str, Any]:
        """Return the whole report as one JSON-ready document."""
        return {"sigma": self.sigma.to_dict(), "statements": [result.to_dict() for result in self.statements]}


def _indexed(sigma: LabellingSet, labellings: Iterable[Labelling]) -> tuple[IndexedLabelling, ...]:
    rows = []
    for labelling in labellings:
        index = sigma.index_of(labelling)
        if index is not None:
            rows.append(IndexedLabelling(index, labelling.to_record()))
    return tuple(rows)


def _leaf(verdict: Verdict) -> LeafResult:
    return LeafResult(
        implication=str(verdict.implication),
        satisfied=verdict.satisfied,
        degree=str(verdict.degree),
        preferred_count=verdict.preferred_count,
        counterexample=verdict.counterexample.to_record() if verdict.counterexample is not None else None,
    )


def _warnings(verdicts: tuple[Verdict, ...]) -> tuple[str, ...]:
    return tuple(dict.fromkeys(warning for verdict in verdicts for warning in verdict.warnings))


def _run_check(interpretation: PreferentialInterpretation, statement: CheckStatement) -> StatementResult:
    verdicts = collect_verdicts(interpretation, statement.query)
    satisfied = query_truth(statement.query, verdicts)
    if isinstance(statement.query, QueryLeaf):
        leaf = _leaf(verdicts[0])
        return StatementResult(
            kind=statement.kind,
            input_text=statement.text,
            satisfied=satisfied,
            degree=leaf.degree,
            preferred_count=leaf.preferred_count,
            counterexample=leaf.counterexample,
            warnings=_warnings(verdicts),
        )
    return StatementResult(
        kind=statement.kind,
        input_text=statement.text,
        satisfied=satisfied,
        leaves=tuple(_leaf(verdict) for verdict in verdicts),
        warnings=_warnings(verdicts),
    )


def _run_degree(interpretation: PreferentialInterpretation, statement: DegreeStatement) -> StatementResult:
    implication = statement.implication
    # A bound of 0 is always met, so the verdict carries just the degree.
    verdict = check_graded(
        interpretation,
        GradedImplication(
            implication.left, implication.right, BoundKind.AT_LEAST, TruthDegree.bottom(interpretation.resolution)
        ),
    )
    return StatementResult(
        kind=statement.kind,
        input_text=statement.text,
        degree=str(verdict.degree),
        preferred_count=verdict.preferred_count,
        warnings=verdict.warnings,
    )


def _run_prob(
    interpretation: PreferentialInterpretation, weights: Distribution | None, statement: ProbStatement
) -> StatementResult:
    if weights is None:
        return StatementResult(
            kind=statement.kind, input_text=statement.text, warnings=(EMPTY_SIGMA_PROBABILITY_WARNING,)
        )
    if statement.given is None:
        value = probability(interpretation, weights, statement.formula)
    else:
        value = conditional_probability(interpretation, weights, statement.formula, statement.given)
    return StatementResult(kind=statement.kind, input_text=statement.text, probability=value)


def _run_typicality(interpretation: PreferentialInterpretation, statement: TypicalityStatement) -> StatementResult:
    rows = tuple(
        IndexedLabelling(
            index,
            labelling.to_record(),
            str(typicality_value(interpretation, labelling, statement.formula)),
        )
        for index, labelling in enumerate(interpretation.sigma)
    )
    return StatementResult(
        kind=statement.kind,
        input_text=statement.text,
        preferred_count=len(preferred_labellings(interpretation, statement.formula)),
        labellings=rows,
    )


def _run_statement(
    interpretation: PreferentialInterpretation, weights: Distribution | None, statement: Statement
) -> StatementResult:
    sigma = interpretation.sigma
    match statement:
        case CheckStatement():
            return _run_check(interpretation, statement)
        case DegreeStatement():
            return _run_degree(interpretation, statement)
        case ProbStatement():
            return _run_prob(interpretation, weights, statement)
        case ListLabellingsStatement():
            return StatementResult(kind=statement.kind, input_text=statement.text, labellings=_indexed(sigma, sigma))
        case PreferredStatement():
            preferred = preferred_labellings(interpretation, statement.formula)
            return StatementResult(
                kind=statement.kind,
                input_text=statement.text,
                preferred_count=len(preferred),
                labellings=_indexed(sigma, preferred),
            )
        case TypicalityStatement():
            return _run_typicality(interpretation, statement)
    msg = f"Not a statement: {statement!r}"
    raise TypeError(msg)


def run_session(session: Session) -> Report:
    """
    Enumerate Σ once and answer every statement against it.

    An empty Σ is reported through warnings, never as a failure.

    Raises:
        ConditioningOnNullEventError: If a ``prob ... given β`` has P(β) = 0.
        InvalidDistributionError: If the distribution does not fit a non-empty Σ.
        OSError: If a distribution file cannot be read.
        TruthDegreeError: If a φ table value is not a member of C_n.

    """
    sigma = enumerate_labellings(session.graph, session.resolution, session.semantics, workers=session.workers)
    logger.debug("Σ has %d labellings", len(sigma))
    warnings: list[str] = []
    if not sigma.labellings:
        warnings.append(EMPTY_SIGMA_WARNING)
    if session.semantics.phi is not None:
        warnings.extend(session.semantics.phi.warnings())

    interpretation = PreferentialInterpretation(sigma, session.logic)
    weights = session.distribution.build(sigma) if sigma.labellings else None
    results = tuple(_run_statement(interpretation, weights, statement) for statement in session.statements)
    summary = SigmaSummary(
        size=len(sigma),
        semantics=session.semantics.kind.value,
        resolution=session.resolution,
        logic=session.logic.name,
        distribution=session.distribution.label,
        warnings=tuple(warnings),
    )
    return Report(summary, results)


def _format_probability(value: float) -> str:
    return format(value, ".12g")


def _labelling_lines(result: StatementResult) -> list[str]:
    lines = []
    for row in result.labellings or ():
        suffix = f"  T={row.degree}" if row.degree is not None else ""
        lines.append(f"  #{row.index} {_record_text(row.values)}{suffix}")
    return lines


def _details(degree: str | None, preferred_count: int | None) -> str:
    details = []
    if degree is not None:
        details.append(f"degree {degree}")
    if preferred_count is not None:
        label = "labelling" if preferred_count == 1 else "labellings"
        details.append(f"{preferred_count} preferred {label}")
    return ", ".join(details)


def _verdict_line(*, satisfied: bool, degree: str | None, preferred_count: int | None) -> str:
    mark = "✓ satisfied" if satisfied else "✗ not satisfied"
    details = _details(degree, preferred_count)
    return f"{mark} ({details})" if details else mark


def _record_text(record: dict[str, str]) -> str:
    return " ".join(f"{name}={value}" for name, value in record.items())


def _result_lines(result: StatementResult) -> list[str]:
    lines = [result.input_text]
    if result.kind == "check":
        verdict = _verdict_line(
            satisfied=bool(result.satisfied), degree=result.degree, preferred_count=result.preferred_count
        )
        lines.append(f"  {verdict}")
        if result.counterexample is not None:
            lines.append(f"  counterexample: {_record_text(result.counterexample)}")
        for leaf in result.leaves or ():
            lines.append(f"  {leaf.implication}")
            verdict = _verdict_line(satisfied=leaf.satisfied, degree=leaf.degree, preferred_count=leaf.preferred_count)
            lines.append(f"    {verdict}")
            if leaf.counterexample is not None:
                lines.append(f"    counterexample: {_record_text(leaf.counterexample)}")
    elif result.kind == "degree":
        lines.append(f"  {_details(result.degree, result.preferred_count)}")
    elif result.kind == "prob":
        if result.probability is not None:
            lines.append(f"  {_format_probability(result.probability)}")
    else:
        if result.preferred_count is not None:
            label = "labelling" if result.preferred_count == 1 else "labellings"
            lines.append(f"  {result.preferred_count} preferred {label}")
        lines.extend(_labelling_lines(result))
    lines.extend(f"  warning: {warning}" for warning in result.warnings)
    return lines


def render_text(report: Report) -> str:
    """Render a report as plain text; identical reports give identical text."""
    sigma = report.sigma
    label = "labelling" if sigma.size == 1 else "labellings"
    lines = [
        f"Σ: {sigma.size} {label} (semantics {sigma.semantics}, n={sigma.resolution}, "
        f"logic {sigma.logic}, distribution {sigma.distribution})",
    ]
    lines.extend(f"warning: {warning}" for warning in sigma.warnings)
    for result in report.statements:
        lines.append("")
        lines.extend(_result_lines(result))
    return "\n".join(lines) + "\n"


def render_json(report: Report) -> str:
    """Render a report as a single JSON document."""
    return json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n"

