"""
Reader and writer for the line-based graph language.

    # a two-argument graph
    arg A
    arg B
    edge A B 2.0
    phi B step 0.0
    phi A table -inf:0 0.0:1/2 1.5:1

Lines are independent; ``#`` starts a comment. Edges and ``phi`` lines may refer to
arguments declared further down.
"""

from __future__ import annotations

import functools
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction

import lark
from lark.exceptions import UnexpectedInput

from .dsl_error import DslSyntaxError
from .graph import Edge, WeightedGraph, build_graph
from .graph_error import UnknownArgumentError
from .phi import ExplicitTable, PhiFunction, SigmoidNearest, StepThreshold

GRAPH_GRAMMAR = r"""
    ?start: arg_stmt | edge_stmt | phi_stmt

    arg_stmt: "arg" NAME
    edge_stmt: "edge" NAME NAME NUMBER
    phi_stmt: "phi" NAME phi_function

    ?phi_function: "sigmoid"             -> sigmoid
                 | "step" NUMBER?        -> step
                 | "table" table_entry+  -> table

    table_entry: NUMBER ":" DEGREE

    NAME: /[A-Za-z_][A-Za-z0-9_]*/
    NUMBER: /[+-]?(inf|(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)/
    DEGREE: /\d+\/\d+|\d*\.?\d+/

    %import common.WS_INLINE
    %ignore WS_INLINE
"""

# Words the query language gives a meaning to, plus this language's own keywords.
RESERVED_NAMES = frozenset(
    {
        *("and", "or", "not", "implies", "given", "true", "false", "label", "T"),
        *("arg", "edge", "phi", "sigmoid", "step", "table", "inf"),
    },
)


@functools.cache
def _parser() -> lark.Lark:
    return lark.Lark(GRAPH_GRAMMAR, parser="lalr")


@dataclass(frozen=True)
class ParsedGraph:
    """
    A parsed graph file.

    Attributes:
        graph: The validated graph.
        phi_overrides: Per-argument φ functions from ``phi`` lines.

    """

    graph: WeightedGraph
    phi_overrides: Mapping[str, PhiFunction] = field(default_factory=dict)


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def _syntax_error(error: UnexpectedInput, line_number: int, content: str) -> DslSyntaxError:
    column = error.column if isinstance(error.column, int) and error.column > 0 else len(content) + 1
    near = content[column - 1 : column + 9].strip() or "end of line"
    return DslSyntaxError(f"unexpected input near '{near}'", line_number, column)


def _name(token: lark.Token, line_number: int) -> str:
    name = str(token)
    if name in RESERVED_NAMES:
        msg = f"'{name}' is reserved and cannot name an argument"
        raise DslSyntaxError(msg, line_number, token.column)
    return name


def _degree(token: lark.Token, line_number: int) -> Fraction:
    try:
        return Fraction(str(token))
    except ZeroDivisionError:
        msg = f"degree {token} has a zero denominator"
        raise DslSyntaxError(msg, line_number, token.column) from None


def _phi_function(tree: lark.Tree, line_number: int) -> PhiFunction:
    if tree.data == "sigmoid":
        return SigmoidNearest()
    if tree.data == "step":
        return StepThreshold(float(tree.children[0])) if tree.children else StepThreshold()
    breakpoints = tuple(float(entry.children[0]) for entry in tree.children)
    values = tuple(_degree(entry.children[1], line_number) for entry in tree.children)
    try:
        return ExplicitTable(breakpoints, values)
    except ValueError as error:
        raise DslSyntaxError(str(error), line_number) from None


def parse_graph(text: str) -> ParsedGraph:
    """
    Parse graph-language text into a validated graph and its φ overrides.

    Raises:
        DslSyntaxError: On malformed lines, reserved names, bad φ tables or a repeated
            ``phi`` line for one argument.
        GraphError: Forwarded from graph construction (duplicate arguments, unknown
            endpoints, duplicate edges, zero or non-finite weights), or an unknown
            argument in a ``phi`` line.

    """
    arguments: list[str] = []
    edges: list[Edge] = []
    overrides: dict[str, PhiFunction] = {}
    for line_number, line in enumerate(text.splitlines(), start=1):
        content = _strip_comment(line)
        if not content.strip():
            continue
        try:
            tree = _parser().parse(content)
        except UnexpectedInput as error:
            raise _syntax_error(error, line_number, content) from None

        if tree.data == "arg_stmt":
            arguments.append(_name(tree.children[0], line_number))
        elif tree.data == "edge_stmt":
            source, target, weight = tree.children
            edges.append(Edge(_name(source, line_number), _name(target, line_number), float(weight)))
        else:
            name = _name(tree.children[0], line_number)
            if name in overrides:
                msg = f"φ for '{name}' is given twice"
                raise DslSyntaxError(msg, line_number, tree.children[0].column)
            overrides[name] = _phi_function(tree.children[1], line_number)

    graph = build_graph(arguments, edges)
    for name in overrides:
        if name not in graph:
            raise UnknownArgumentError(name)
    ordered = {name: overrides[name] for name in graph.arguments if name in overrides}
    return ParsedGraph(graph, ordered)


def serialize_graph(graph: WeightedGraph, phi_overrides: Mapping[str, PhiFunction] | None = None) -> str:
    """
    Write a graph back in the graph language.

    Arguments, edges and ``phi`` lines come out in canonical order with ``repr``-exact
    weights, so ``parse_graph(serialize_graph(g))`` rebuilds an equal graph.
    """
    lines = [f"arg {name}" for name in graph.arguments]
    lines.extend(f"edge {edge.source} {edge.target} {edge.weight!r}" for edge in graph.edges)
    overrides = phi_overrides or {}
    lines.extend(f"phi {name} {overrides[name].describe()}" for name in graph.arguments if name in overrides)
    return "\n".join(lines) + "\n"
