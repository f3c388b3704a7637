"""Finitely-valued logics over C_n and truth-functional formula evaluation."""

from __future__ import annotations

import itertools
from collections.abc import Callable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from .formula import And, Arg, Bot, Formula, Impl, LabelAtom, Neg, Or, Top, Typ
from .truth_degree import TruthDegree

if TYPE_CHECKING:
    from .labelling import Labelling

_ZERO = Fraction(0)
_ONE = Fraction(1)

BinaryFunction = Callable[[Fraction, Fraction], Fraction]
UnaryFunction = Callable[[Fraction], Fraction]


class MissingTypicalityContextError(LookupError):
    """Raised when a ``Typ`` node is evaluated without a value supplied for it."""

    def __init__(self, formula: Typ) -> None:
        """Initialize with the typicality subformula that had no value."""
        self.formula = formula
        super().__init__(f"No typicality value supplied for {formula!r}.")


@dataclass(frozen=True)
class LogicSystem:
    """
    The four truth functions interpreting the connectives on [0, 1].

    Functions take and return exact rationals; ``closure_check`` verifies they stay
    inside C_n.

    Attributes:
        name: Identifier used on the command line and in reports.
        tnorm: ⊗, interprets ``&``.
        snorm: ⊕, interprets ``|``.
        implication: ▷, interprets ``->``.
        negation: ⊖, interprets ``~``.

    """

    name: str
    tnorm: BinaryFunction
    snorm: BinaryFunction
    implication: BinaryFunction
    negation: UnaryFunction


def _goedel_implication(a: Fraction, b: Fraction) -> Fraction:
    return _ONE if a <= b else b


GOEDEL = LogicSystem(
    name="goedel",
    tnorm=min,
    snorm=max,
    implication=_goedel_implication,
    negation=lambda a: _ONE - a,
)

LUKASIEWICZ = LogicSystem(
    name="lukasiewicz",
    tnorm=lambda a, b: max(_ZERO, a + b - _ONE),
    snorm=lambda a, b: min(_ONE, a + b),
    implication=lambda a, b: min(_ONE, _ONE - a + b),
    negation=lambda a: _ONE - a,
)

LOGICS: Mapping[str, LogicSystem] = {logic.name: logic for logic in (GOEDEL, LUKASIEWICZ)}


def _in_c_n(value: Fraction, resolution: int) -> bool:
    scaled = value * resolution
    return scaled.denominator == 1 and 0 <= scaled <= resolution


def closure_check(logic: LogicSystem, resolution: int) -> bool:
    """
    Exhaustively check that all four functions map C_n (x C_n) into C_n.

    Args:
        logic: The logic to check.
        resolution: ``n >= 1``.

    Returns:
        True iff every output over C_n is again a member of C_n.

    """
    members = [Fraction(k, resolution) for k in range(resolution + 1)]
    for a, b in itertools.product(members, repeat=2):
        for function in (logic.tnorm, logic.snorm, logic.implication):
            if not _in_c_n(Fraction(function(a, b)), resolution):
                return False
    return all(_in_c_n(Fraction(logic.negation(a)), resolution) for a in members)


def _evaluate(
    labelling: Labelling,
    formula: Formula,
    logic: LogicSystem,
    typ_context: Mapping[Typ, TruthDegree],
    label_index: int | None,
) -> Fraction:
    match formula:
        case Arg(name):
            return Fraction(labelling.numerator(name), labelling.resolution)
        case Top():
            return _ONE
        case Bot():
            return _ZERO
        case LabelAtom(index):
            return _ONE if index == label_index else _ZERO
        case Typ():
            if formula not in typ_context:
                raise MissingTypicalityContextError(formula)
            return typ_context[formula].value
        case Neg(operand):
            return logic.negation(_evaluate(labelling, operand, logic, typ_context, label_index))
        case And(left, right):
            function = logic.tnorm
        case Or(left, right):
            function = logic.snorm
        case Impl(left, right):
            function = logic.implication
        case _:
            msg = f"Not a formula: {formula!r}"
            raise TypeError(msg)
    return function(
        _evaluate(labelling, left, logic, typ_context, label_index),
        _evaluate(labelling, right, logic, typ_context, label_index),
    )


def eval_plain(
    labelling: Labelling,
    formula: Formula,
    logic: LogicSystem,
    typ_context: Mapping[Typ, TruthDegree] | None = None,
    label_index: int | None = None,
) -> TruthDegree:
    """
    Evaluate a formula in one labelling, truth-functionally.

    Args:
        labelling: The labelling σ.
        formula: The formula to evaluate.
        logic: Truth functions for the connectives.
        typ_context: Value of every ``Typ`` subformula in σ (computed globally over Σ by
            the preferential module).
        label_index: Canonical index of σ in Σ; ``label(i)`` is 1 iff ``i`` equals it.
            ``None`` means σ is not a member of Σ, so every labelling atom is 0.

    Returns:
        σ(formula) as a member of C_n.

    Raises:
        UnknownArgumentError: If the formula names an argument σ does not label.
        MissingTypicalityContextError: If a ``Typ`` node has no value in ``typ_context``.

    """
    value = _evaluate(labelling, formula, logic, typ_context or {}, label_index)
    return TruthDegree.from_fraction(value, labelling.resolution)
