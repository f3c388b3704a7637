"""Unit tests for preferential interpretations, typicality and graded implications."""

import unittest

from gradedargs import (
    GOEDEL,
    LUKASIEWICZ,
    And,
    Arg,
    Bot,
    BoundKind,
    Formula,
    GradedImplication,
    Impl,
    LabelAtom,
    Labelling,
    LabellingNotInSigmaError,
    Neg,
    PreferentialInterpretation,
    QueryAnd,
    QueryImplies,
    QueryLeaf,
    QueryNot,
    QueryOr,
    SemanticsChoice,
    TruthDegree,
    Typ,
    TypicalityInPreferenceFormulaError,
    build_graph,
    check_graded,
    enumerate_labellings,
    eval_query,
    implication_degree,
    preferred_labellings,
    prefers,
    typicality_value,
)
from gradedargs.preferential import EMPTY_SIGMA_DEGREE_WARNING, evaluate, query_leaves

A, B = Arg("A"), Arg("B")


def _labelling(a: int, b: int) -> Labelling:
    return Labelling(("A", "B"), (a, b), 2)


def _graded(antecedent: Formula, consequent: Formula, kind: BoundKind, numerator: int) -> GradedImplication:
    return GradedImplication(antecedent, consequent, kind, TruthDegree(numerator, 2))


class _ThreeLabellings(unittest.TestCase):
    """Σ = {(0, 1/2), (1/2, 1/2), (1, 1)} from (A, B, +2) at n=2."""

    def setUp(self) -> None:
        """Enumerate Σ and wrap it in a Gödel interpretation."""
        graph = build_graph(["A", "B"], [("A", "B", 2.0)])
        self.sigma = enumerate_labellings(graph, 2, SemanticsChoice.phi_coherent())
        self.interpretation = PreferentialInterpretation(self.sigma, GOEDEL)


class TestPreference(_ThreeLabellings):
    """Unit tests for prefers and preferred_labellings."""

    def test_should_prefer_labelling_with_higher_value(self) -> None:
        """Test (1, 1) <_B (0, 1/2)."""
        # arrange / act / assert
        self.assertTrue(prefers(self.interpretation, B, _labelling(2, 2), _labelling(0, 1)))
        self.assertFalse(prefers(self.interpretation, B, _labelling(0, 1), _labelling(2, 2)))

    def test_should_be_irreflexive_and_ignore_ties(self) -> None:
        """Test that equal values are incomparable."""
        # arrange / act / assert
        self.assertFalse(prefers(self.interpretation, B, _labelling(0, 1), _labelling(0, 1)))
        self.assertFalse(prefers(self.interpretation, B, _labelling(0, 1), _labelling(1, 1)))
        self.assertFalse(prefers(self.interpretation, B, _labelling(1, 1), _labelling(0, 1)))

    def test_should_reject_typicality_in_preference_formula(self) -> None:
        """Test that preference formulas must be plain."""
        # arrange / act / assert
        with self.assertRaises(TypicalityInPreferenceFormulaError):
            prefers(self.interpretation, Typ(B), _labelling(0, 1), _labelling(2, 2))

    def test_should_reject_labelling_outside_sigma(self) -> None:
        """Test that both labellings must belong to Σ."""
        # arrange / act / assert
        with self.assertRaises(LabellingNotInSigmaError):
            prefers(self.interpretation, B, _labelling(0, 0), _labelling(2, 2))

    def test_should_return_argmax_as_preferred(self) -> None:
        """Test min_{<B}(Σ) = {(1, 1)}."""
        # arrange / act
        result = preferred_labellings(self.interpretation, B)

        # assert
        self.assertEqual(result, (_labelling(2, 2),))

    def test_should_prefer_only_the_labelling_named_by_a_label_atom(self) -> None:
        """Test min_{<label(1)}(Σ) = {(1/2, 1/2)} and the order it induces."""
        # arrange
        formula = LabelAtom(1)

        # act
        result = preferred_labellings(self.interpretation, formula)

        # assert
        self.assertEqual(result, (_labelling(1, 1),))
        self.assertTrue(prefers(self.interpretation, formula, _labelling(1, 1), _labelling(0, 1)))
        self.assertFalse(prefers(self.interpretation, formula, _labelling(0, 1), _labelling(2, 2)))

    def test_should_prefer_every_labelling_for_bottom(self) -> None:
        """Test that all labellings tie at ⊥."""
        # arrange / act / assert
        self.assertEqual(len(preferred_labellings(self.interpretation, Bot())), 3)

    def test_should_prefer_nothing_in_empty_sigma(self) -> None:
        """Test the empty Σ."""
        # arrange
        graph = build_graph(["A"], [("A", "A", -10.0)])
        with self.assertLogs("gradedargs", level="WARNING"):
            sigma = enumerate_labellings(graph, 1, SemanticsChoice.phi_coherent())

        # act / assert
        self.assertEqual(preferred_labellings(PreferentialInterpretation(sigma, GOEDEL), A), ())


class TestTypicality(_ThreeLabellings):
    """Unit tests for typicality_value and evaluate."""

    def test_should_keep_value_on_preferred_labelling(self) -> None:
        """Test σ(T(B)) = 1 at (1, 1)."""
        # arrange / act / assert
        self.assertEqual(typicality_value(self.interpretation, _labelling(2, 2), B), TruthDegree(2, 2))

    def test_should_zero_value_elsewhere(self) -> None:
        """Test σ(T(B)) = 0 at (0, 1/2)."""
        # arrange / act / assert
        self.assertEqual(typicality_value(self.interpretation, _labelling(0, 1), B), TruthDegree(0, 2))

    def test_should_be_zero_for_bottom_even_when_preferred(self) -> None:
        """Test σ(T(⊥)) = 0."""
        # arrange / act / assert
        for labelling in self.sigma:
            self.assertEqual(typicality_value(self.interpretation, labelling, Bot()), TruthDegree(0, 2))

    def test_should_resolve_label_atoms_by_canonical_index(self) -> None:
        """Test that label(1) holds exactly in the second labelling."""
        # arrange / act
        result = [evaluate(self.interpretation, labelling, LabelAtom(1)) for labelling in self.sigma]

        # assert
        self.assertEqual([str(value) for value in result], ["0/2", "2/2", "0/2"])

    def test_should_resolve_label_atoms_under_typicality(self) -> None:
        """Test σ(T(label(1))) is 1 at the second labelling and 0 elsewhere."""
        # arrange
        formula = Typ(LabelAtom(1))

        # act
        direct = [typicality_value(self.interpretation, labelling, LabelAtom(1)) for labelling in self.sigma]
        evaluated = [evaluate(self.interpretation, labelling, formula) for labelling in self.sigma]

        # assert
        self.assertEqual([str(value) for value in direct], ["0/2", "2/2", "0/2"])
        self.assertEqual(evaluated, direct)


class TestImplicationDegree(_ThreeLabellings):
    """Unit tests for implication_degree."""

    def test_should_compute_defeasible_degree(self) -> None:
        """Test (T(B) -> A)^I = 1."""
        # arrange / act / assert
        self.assertEqual(implication_degree(self.interpretation, Typ(B), A), TruthDegree(2, 2))

    def test_should_compute_strict_degree(self) -> None:
        """Test (B -> A)^I = 0 because 1/2 ▷ 0 = 0 at (0, 1/2)."""
        # arrange / act / assert
        self.assertEqual(implication_degree(self.interpretation, B, A), TruthDegree(0, 2))

    def test_should_depend_on_logic(self) -> None:
        """Test that Łukasiewicz gives 1/2 ▷ 0 = 1/2."""
        # arrange
        interpretation = PreferentialInterpretation(self.sigma, LUKASIEWICZ)

        # act / assert
        self.assertEqual(implication_degree(interpretation, B, A), TruthDegree(1, 2))

    def test_should_be_vacuously_top_on_empty_sigma(self) -> None:
        """Test the empty infimum with its warning."""
        # arrange
        graph = build_graph(["A"], [("A", "A", -10.0)])
        with self.assertLogs("gradedargs", level="WARNING"):
            sigma = enumerate_labellings(graph, 1, SemanticsChoice.phi_coherent())
        interpretation = PreferentialInterpretation(sigma, GOEDEL)

        # act
        with self.assertLogs("gradedargs.preferential", level="WARNING"):
            result = implication_degree(interpretation, A, Neg(A))

        # assert
        self.assertEqual(result, TruthDegree(1, 1))


class TestCheckGraded(_ThreeLabellings):
    """Unit tests for check_graded."""

    def test_should_satisfy_defeasible_implication(self) -> None:
        """Test T(B) -> A >= 1 with one preferred labelling."""
        # arrange / act
        result = check_graded(self.interpretation, _graded(Typ(B), A, BoundKind.AT_LEAST, 2))

        # assert
        self.assertTrue(result.satisfied)
        self.assertEqual(result.degree, TruthDegree(2, 2))
        self.assertEqual(result.preferred_count, 1)
        self.assertIsNone(result.counterexample)

    def test_should_report_counterexample_for_failed_lower_bound(self) -> None:
        """Test B -> A >= 1/2 fails at (0, 1/2)."""
        # arrange / act
        result = check_graded(self.interpretation, _graded(B, A, BoundKind.AT_LEAST, 1))

        # assert
        self.assertFalse(result.satisfied)
        self.assertEqual(result.degree, TruthDegree(0, 2))
        self.assertEqual(result.counterexample, _labelling(0, 1))
        self.assertIsNone(result.preferred_count)
        self.assertEqual(evaluate(self.interpretation, result.counterexample, Impl(B, A)), result.degree)

    def test_should_check_upper_bound_without_counterexample(self) -> None:
        """Test <= bounds in both directions."""
        # arrange / act
        met = check_graded(self.interpretation, _graded(B, A, BoundKind.AT_MOST, 0))
        missed = check_graded(self.interpretation, _graded(Typ(B), A, BoundKind.AT_MOST, 1))

        # assert
        self.assertTrue(met.satisfied)
        self.assertFalse(missed.satisfied)
        self.assertIsNone(missed.counterexample)

    def test_should_always_satisfy_zero_lower_bound(self) -> None:
        """Test that every degree is at least 0."""
        # arrange / act
        result = check_graded(self.interpretation, _graded(A, And(B, Neg(B)), BoundKind.AT_LEAST, 0))

        # assert
        self.assertTrue(result.satisfied)

    def test_should_warn_on_empty_sigma(self) -> None:
        """Test that an empty Σ gives degree 1 and a warning."""
        # arrange
        graph = build_graph(["A"], [("A", "A", -10.0)])
        with self.assertLogs("gradedargs", level="WARNING"):
            sigma = enumerate_labellings(graph, 1, SemanticsChoice.phi_coherent())
        graded = GradedImplication(A, A, BoundKind.AT_MOST, TruthDegree(0, 1))

        # act
        result = check_graded(PreferentialInterpretation(sigma, GOEDEL), graded)

        # assert
        self.assertFalse(result.satisfied)
        self.assertEqual(result.degree, TruthDegree(1, 1))
        self.assertEqual(result.warnings, (EMPTY_SIGMA_DEGREE_WARNING,))

    def test_should_render_in_query_syntax(self) -> None:
        """Test the string form of a graded implication."""
        # arrange / act / assert
        self.assertEqual(str(_graded(Typ(B), A, BoundKind.AT_LEAST, 1)), "T(B) -> A >= 1/2")


class TestEvalQuery(_ThreeLabellings):
    """Unit tests for boolean combinations of graded implications."""

    def setUp(self) -> None:
        """Build a satisfied and an unsatisfied leaf."""
        super().setUp()
        self.holds = QueryLeaf(_graded(Typ(B), A, BoundKind.AT_LEAST, 2))
        self.fails = QueryLeaf(_graded(B, A, BoundKind.AT_LEAST, 1))

    def test_should_combine_leaves_classically(self) -> None:
        """Test and, or, not and implies."""
        # arrange / act / assert
        self.assertTrue(eval_query(self.interpretation, QueryAnd(self.holds, self.holds)))
        self.assertFalse(eval_query(self.interpretation, QueryAnd(self.holds, self.fails)))
        self.assertTrue(eval_query(self.interpretation, QueryOr(self.fails, self.holds)))
        self.assertTrue(eval_query(self.interpretation, QueryNot(self.fails)))
        self.assertTrue(eval_query(self.interpretation, QueryImplies(self.fails, self.fails)))
        self.assertFalse(eval_query(self.interpretation, QueryImplies(self.holds, self.fails)))

    def test_should_list_leaves_left_to_right(self) -> None:
        """Test query_leaves order."""
        # arrange
        query = QueryImplies(QueryNot(self.fails), QueryOr(self.holds, self.fails))

        # act
        result = query_leaves(query)

        # assert
        self.assertEqual(result, (self.fails.implication, self.holds.implication, self.fails.implication))
