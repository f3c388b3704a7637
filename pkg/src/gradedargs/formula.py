"""Formulas over arguments: connectives, constants, typicality and labelling atoms."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .dsl_error import NestedTypicalityError


@dataclass(frozen=True)
class Arg:
    """An argument used as a propositional variable."""

    name: str


@dataclass(frozen=True)
class Top:
    """⊤, true in every labelling."""


@dataclass(frozen=True)
class Bot:
    """⊥, false in every labelling."""


@dataclass(frozen=True)
class Neg:
    """Negation ⊖."""

    operand: Formula


@dataclass(frozen=True)
class And:
    """Conjunction, evaluated by the t-norm ⊗."""

    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or:
    """Disjunction, evaluated by the s-norm ⊕."""

    left: Formula
    right: Formula


@dataclass(frozen=True)
class Impl:
    """Implication, evaluated by ▷."""

    left: Formula
    right: Formula


@dataclass(frozen=True)
class Typ:
    """
    The typicality operator T(operand).

    Nesting is rejected at construction: ``operand`` may not contain another ``Typ``.
    """

    operand: Formula

    def __post_init__(self) -> None:
        """Reject nested typicality."""
        if contains_typicality(self.operand):
            msg = f"Typicality cannot be nested: T({render(self.operand)})"
            raise NestedTypicalityError(msg)


@dataclass(frozen=True)
class LabelAtom:
    """{σ_index}: 1 in the labelling at canonical position ``index`` of Σ, 0 elsewhere."""

    index: int


Formula = Arg | Top | Bot | Neg | And | Or | Impl | Typ | LabelAtom


def subformulas(formula: Formula) -> Iterator[Formula]:
    """Yield ``formula`` and all its subformulas, pre-order, left to right."""
    yield formula
    match formula:
        case Neg(operand) | Typ(operand):
            yield from subformulas(operand)
        case And(left, right) | Or(left, right) | Impl(left, right):
            yield from subformulas(left)
            yield from subformulas(right)


def contains_typicality(formula: Formula) -> bool:
    """Return whether ``formula`` has a ``Typ`` node anywhere."""
    return any(isinstance(node, Typ) for node in subformulas(formula))


def typicality_subformulas(formula: Formula) -> tuple[Typ, ...]:
    """Return the distinct ``Typ`` nodes of ``formula`` in first-occurrence order."""
    return tuple(dict.fromkeys(node for node in subformulas(formula) if isinstance(node, Typ)))


def argument_names(formula: Formula) -> tuple[str, ...]:
    """Return the distinct argument names of ``formula`` in first-occurrence order."""
    return tuple(dict.fromkeys(node.name for node in subformulas(formula) if isinstance(node, Arg)))


# Binding strength for rendering: higher binds tighter.
_PRECEDENCE = {Impl: 1, Or: 2, And: 3}
_SYMBOL = {Impl: "->", Or: "|", And: "&"}


def render(formula: Formula) -> str:
    """
    Render a formula in the query DSL's concrete syntax.

    Parentheses are emitted only where precedence (``~`` > ``&`` > ``|`` > ``->``) or
    associativity (``&``/``|`` left, ``->`` right) requires them, so the output parses
    back to an equal formula.
    """
    match formula:
        case Arg(name):
            return name
        case Top():
            return "true"
        case Bot():
            return "false"
        case LabelAtom(index):
            return f"label({index})"
        case Typ(operand):
            return f"T({render(operand)})"
        case Neg(operand):
            inner = render(operand)
            return f"~{inner}" if isinstance(operand, Arg | Top | Bot | LabelAtom | Typ | Neg) else f"~({inner})"
        case And(left, right) | Or(left, right) | Impl(left, right):
            return _render_binary(formula, left, right)
    msg = f"Not a formula: {formula!r}"
    raise TypeError(msg)


def _render_binary(formula: And | Or | Impl, left: Formula, right: Formula) -> str:
    kind = type(formula)
    own = _PRECEDENCE[kind]
    left_text, right_text = render(left), render(right)
    left_prec = _PRECEDENCE.get(type(left))
    right_prec = _PRECEDENCE.get(type(right))
    # & and | associate to the left, -> to the right.
    left_assoc = kind is not Impl
    if left_prec is not None and (left_prec < own or (left_prec == own and not left_assoc)):
        left_text = f"({left_text})"
    if right_prec is not None and (right_prec < own or (right_prec == own and left_assoc)):
        right_text = f"({right_text})"
    return f"{left_text} {_SYMBOL[kind]} {right_text}"
