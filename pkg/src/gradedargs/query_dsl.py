"""
Reader for the query language, one statement per line.

    check T(A & B) -> C >= 4/5
    check (T(A) -> B <= 3/10) and not (C -> D >= 1)
    degree T(B) -> A
    prob A given B
    list_labellings
    preferred B
    typicality B

Formulas use ``~ & | ->`` (tightest first, ``->`` to the right), ``true``, ``false``,
``label(i)`` and ``T(...)``. Queries combine graded implications with ``not``, ``and``,
``or`` and ``implies`` in the same precedence order.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

import lark
from lark.exceptions import UnexpectedInput

from .dsl_error import BoundOutOfRangeError, DslSyntaxError, NestedTypicalityError
from .formula import And, Arg, Bot, Formula, Impl, LabelAtom, Neg, Or, Top, Typ, contains_typicality, render
from .graph_error import UnknownArgumentError
from .preferential import (
    BoundKind,
    GradedImplication,
    Query,
    QueryAnd,
    QueryImplies,
    QueryLeaf,
    QueryNot,
    QueryOr,
)
from .truth_degree import TruthDegree

if TYPE_CHECKING:
    from .graph import WeightedGraph

QUERY_GRAMMAR = r"""
    ?start: "check" query                     -> check
          | "degree" formula                  -> degree
          | "prob" formula ("given" formula)? -> prob
          | "list_labellings"                 -> list_labellings
          | "preferred" formula               -> preferred
          | "typicality" formula              -> typicality

    ?query: q_or
          | q_or "implies" query   -> implies_query
    ?q_or: q_and
         | q_or "or" q_and         -> or_query
    ?q_and: q_not
          | q_and "and" q_not      -> and_query
    ?q_not: "not" q_not            -> not_query
          | "(" query ")"
          | graded

    graded: formula COMPARE BOUND

    ?formula: disjunction
            | disjunction "->" formula   -> implication
    ?disjunction: conjunction
                | disjunction "|" conjunction  -> or_formula
    ?conjunction: negation
                | conjunction "&" negation     -> and_formula
    ?negation: "~" negation                    -> not_formula
             | atom
    ?atom: NAME                     -> argument
         | "true"                   -> top
         | "false"                  -> bottom
         | "label" "(" INT ")"      -> label
         | "T" "(" formula ")"      -> typicality_op
         | "(" formula ")"

    COMPARE: ">=" | "<="
    BOUND: /\d+\/\d+|\d*\.\d+|\d+/
    NAME: /(?!(and|or|not|implies|given|true|false|label|T)\b)[A-Za-z_][A-Za-z0-9_]*/

    %import common.INT
    %import common.WS_INLINE
    %ignore WS_INLINE
"""


@functools.cache
def _parser() -> lark.Lark:
    return lark.Lark(QUERY_GRAMMAR, parser="earley", propagate_positions=True)


@dataclass(frozen=True)
class CheckStatement:
    """``check <query>``: evaluate a boolean combination of graded implications."""

    query: Query
    text: str
    line: int

    kind = "check"


@dataclass(frozen=True)
class DegreeStatement:
    """``degree <formula> -> <formula>``: report the implication degree."""

    implication: Impl
    text: str
    line: int

    kind = "degree"


@dataclass(frozen=True)
class ProbStatement:
    """``prob <formula> [given <formula>]``."""

    formula: Formula
    given: Formula | None
    text: str
    line: int

    kind = "prob"


@dataclass(frozen=True)
class ListLabellingsStatement:
    """``list_labellings``: print Σ in canonical order."""

    text: str
    line: int

    kind = "list_labellings"


@dataclass(frozen=True)
class PreferredStatement:
    """``preferred <formula>``: list the preferred labellings for a formula."""

    formula: Formula
    text: str
    line: int

    kind = "preferred"


@dataclass(frozen=True)
class TypicalityStatement:
    """``typicality <formula>``: the degree of ``T(formula)`` in every labelling."""

    formula: Formula
    text: str
    line: int

    kind = "typicality"


Statement = (
    CheckStatement
    | DegreeStatement
    | ProbStatement
    | ListLabellingsStatement
    | PreferredStatement
    | TypicalityStatement
)


def _column(tree: lark.Tree) -> int | None:
    return None if tree.meta.empty else tree.meta.column


class _Reader:
    """Turns parse trees of one line into formulas, queries and statements."""

    def __init__(self, graph: WeightedGraph, resolution: int, line: int) -> None:
        self.graph = graph
        self.resolution = resolution
        self.line = line

    def formula(self, node: lark.Tree | lark.Token) -> Formula:  # noqa: PLR0911
        if isinstance(node, lark.Token):  # pragma: no cover - every token sits under a named rule
            msg = f"unexpected token '{node}'"
            raise DslSyntaxError(msg, self.line, node.column)
        match node.data:
            case "argument":
                name = str(node.children[0])
                if name not in self.graph:
                    raise UnknownArgumentError(name)
                return Arg(name)
            case "top":
                return Top()
            case "bottom":
                return Bot()
            case "label":
                return LabelAtom(int(node.children[0]))
            case "typicality_op":
                operand = self.formula(node.children[0])
                if contains_typicality(operand):
                    msg = f"typicality cannot be nested: T({render(operand)})"
                    raise NestedTypicalityError(msg, self.line, _column(node))
                return Typ(operand)
            case "not_formula":
                return Neg(self.formula(node.children[0]))
            case "and_formula":
                return And(self.formula(node.children[0]), self.formula(node.children[1]))
            case "or_formula":
                return Or(self.formula(node.children[0]), self.formula(node.children[1]))
            case "implication":
                return Impl(self.formula(node.children[0]), self.formula(node.children[1]))
        msg = f"unexpected '{node.data}'"  # pragma: no cover
        raise DslSyntaxError(msg, self.line, _column(node))  # pragma: no cover

    def bound(self, token: lark.Token) -> TruthDegree:
        text = str(token)
        try:
            value = Fraction(text)
        except ZeroDivisionError:
            msg = f"bound {text} has a zero denominator"
            raise BoundOutOfRangeError(msg, self.line, token.column) from None
        scaled = value * self.resolution
        if scaled.denominator != 1 or not 0 <= scaled <= self.resolution:
            msg = f"bound {text} is not a member of C_{self.resolution}"
            raise BoundOutOfRangeError(msg, self.line, token.column)
        return TruthDegree(int(scaled), self.resolution)

    def graded(self, node: lark.Tree) -> GradedImplication:
        formula_node, compare, bound = node.children
        formula = self.formula(formula_node)
        if not isinstance(formula, Impl):
            msg = "graded implication needs '->'"
            raise DslSyntaxError(msg, self.line, _column(node))
        return GradedImplication(formula.left, formula.right, BoundKind(str(compare)), self.bound(bound))

    def query(self, node: lark.Tree) -> Query:
        match node.data:
            case "graded":
                return QueryLeaf(self.graded(node))
            case "not_query":
                return QueryNot(self.query(node.children[0]))
            case "and_query":
                return QueryAnd(self.query(node.children[0]), self.query(node.children[1]))
            case "or_query":
                return QueryOr(self.query(node.children[0]), self.query(node.children[1]))
            case "implies_query":
                return QueryImplies(self.query(node.children[0]), self.query(node.children[1]))
        msg = f"unexpected '{node.data}'"  # pragma: no cover
        raise DslSyntaxError(msg, self.line, _column(node))  # pragma: no cover

    def plain(self, node: lark.Tree, keyword: str) -> Formula:
        formula = self.formula(node)
        if contains_typicality(formula):
            msg = f"'{keyword}' takes a typicality-free formula"
            raise NestedTypicalityError(msg, self.line, _column(node))
        return formula

    def statement(self, tree: lark.Tree, text: str) -> Statement:
        match tree.data:
            case "check":
                return CheckStatement(self.query(tree.children[0]), text, self.line)
            case "degree":
                formula = self.formula(tree.children[0])
                if not isinstance(formula, Impl):
                    msg = "'degree' needs an implication 'formula -> formula'"
                    raise DslSyntaxError(msg, self.line, _column(tree))
                return DegreeStatement(formula, text, self.line)
            case "prob":
                given = self.formula(tree.children[1]) if len(tree.children) > 1 else None
                return ProbStatement(self.formula(tree.children[0]), given, text, self.line)
            case "list_labellings":
                return ListLabellingsStatement(text, self.line)
            case "preferred":
                return PreferredStatement(self.plain(tree.children[0], "preferred"), text, self.line)
            case "typicality":
                return TypicalityStatement(self.plain(tree.children[0], "typicality"), text, self.line)
        msg = f"unexpected '{tree.data}'"  # pragma: no cover
        raise DslSyntaxError(msg, self.line, _column(tree))  # pragma: no cover


def _parse_line(content: str, line: int) -> lark.Tree:
    try:
        return _parser().parse(content)
    except UnexpectedInput as error:
        column = error.column if isinstance(error.column, int) and error.column > 0 else len(content) + 1
        near = content[column - 1 : column + 9].strip() or "end of line"
        msg = f"unexpected input near '{near}'"
        raise DslSyntaxError(msg, line, column) from None


def parse_formula(text: str, graph: WeightedGraph) -> Formula:
    """
    Parse a single formula, e.g. for programmatic use or tests.

    Raises:
        DslSyntaxError: If ``text`` is not a formula.
        NestedTypicalityError: On nested ``T``.
        UnknownArgumentError: If an argument is not in ``graph``.

    """
    statement = _Reader(graph, 1, 1).statement(_parse_line(f"prob {text}", 1), text)
    if not isinstance(statement, ProbStatement) or statement.given is not None:
        msg = f"not a single formula: {text}"
        raise DslSyntaxError(msg, 1)
    return statement.formula


def parse_queries(text: str, graph: WeightedGraph, resolution: int) -> tuple[Statement, ...]:
    """
    Parse query-language text into statements.

    Blank lines and ``#`` comments are skipped; every statement records its source text
    and 1-based line.

    Raises:
        DslSyntaxError: On malformed statements or a graded formula without ``->``.
        NestedTypicalityError: On nested ``T``, or ``T`` in ``preferred``/``typicality``.
        BoundOutOfRangeError: If a bound is not exactly a member of C_n.
        UnknownArgumentError: If a formula names an argument not in ``graph``.

    """
    statements: list[Statement] = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].rstrip()
        if not content.strip():
            continue
        tree = _parse_line(content, line_number)
        statements.append(_Reader(graph, resolution, line_number).statement(tree, content.strip()))
    return tuple(statements)
