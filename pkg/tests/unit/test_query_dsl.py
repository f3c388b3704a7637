"""Unit tests for the query language reader."""

import unittest

from gradedargs import (
    And,
    Arg,
    Bot,
    BoundKind,
    BoundOutOfRangeError,
    DslSyntaxError,
    GradedImplication,
    Impl,
    LabelAtom,
    Neg,
    NestedTypicalityError,
    Or,
    QueryAnd,
    QueryImplies,
    QueryLeaf,
    QueryNot,
    QueryOr,
    Top,
    TruthDegree,
    Typ,
    UnknownArgumentError,
    build_graph,
    parse_queries,
    render,
)
from gradedargs.query_dsl import (
    CheckStatement,
    DegreeStatement,
    ListLabellingsStatement,
    PreferredStatement,
    ProbStatement,
    Statement,
    TypicalityStatement,
    parse_formula,
)

A, B, C, D = Arg("A"), Arg("B"), Arg("C"), Arg("D")


class TestParseQueries(unittest.TestCase):
    """Unit tests for parse_queries."""

    def setUp(self) -> None:
        """Build a four-argument graph."""
        self.graph = build_graph(["A", "B", "C", "D"])

    def _single(self, text: str, resolution: int = 5) -> Statement:
        statements = parse_queries(text, self.graph, resolution)
        self.assertEqual(len(statements), 1)
        return statements[0]

    def test_should_parse_defeasible_check(self) -> None:
        """Test a single graded implication with typicality."""
        # arrange / act
        result = self._single("check T(A & B) -> C >= 4/5")

        # assert
        expected = GradedImplication(Typ(And(A, B)), C, BoundKind.AT_LEAST, TruthDegree(4, 5))
        self.assertEqual(result, CheckStatement(QueryLeaf(expected), "check T(A & B) -> C >= 4/5", 1))

    def test_should_parse_boolean_combination_of_checks(self) -> None:
        """Test and/not with parenthesized queries and decimal bounds."""
        # arrange / act
        result = self._single("check (T(A) -> B <= 0.3) and not (T(C | A) -> D >= 0.6)", resolution=10)

        # assert
        left = QueryLeaf(GradedImplication(Typ(A), B, BoundKind.AT_MOST, TruthDegree(3, 10)))
        right = QueryLeaf(GradedImplication(Typ(Or(C, A)), D, BoundKind.AT_LEAST, TruthDegree(6, 10)))
        text = "check (T(A) -> B <= 0.3) and not (T(C | A) -> D >= 0.6)"
        self.assertEqual(result, CheckStatement(QueryAnd(left, QueryNot(right)), text, 1))

    def test_should_bind_not_and_or_implies_in_order(self) -> None:
        """Test query precedence and right-associative implies."""
        # arrange
        text = "check A -> B >= 1 or A -> C <= 0 and not A -> D >= 1 implies B -> A >= 1 implies C -> A >= 0"

        # act
        result = self._single(text, resolution=1)

        # assert
        def leaf(consequent: Arg, kind: BoundKind, numerator: int, antecedent: Arg = A) -> QueryLeaf:
            return QueryLeaf(GradedImplication(antecedent, consequent, kind, TruthDegree(numerator, 1)))

        expected = QueryImplies(
            QueryOr(
                leaf(B, BoundKind.AT_LEAST, 1),
                QueryAnd(leaf(C, BoundKind.AT_MOST, 0), QueryNot(leaf(D, BoundKind.AT_LEAST, 1))),
            ),
            QueryImplies(leaf(A, BoundKind.AT_LEAST, 1, B), leaf(A, BoundKind.AT_LEAST, 0, C)),
        )
        self.assertEqual(result, CheckStatement(expected, text, 1))

    def test_should_parse_every_statement_kind(self) -> None:
        """Test degree, prob, list_labellings, preferred and typicality."""
        # arrange
        text = "degree T(B) -> A\nprob A given B\nprob label(2)\nlist_labellings\npreferred B | C\ntypicality ~D\n"

        # act
        result = parse_queries(text, self.graph, 2)

        # assert
        self.assertEqual(
            result,
            (
                DegreeStatement(Impl(Typ(B), A), "degree T(B) -> A", 1),
                ProbStatement(A, B, "prob A given B", 2),
                ProbStatement(LabelAtom(2), None, "prob label(2)", 3),
                ListLabellingsStatement("list_labellings", 4),
                PreferredStatement(Or(B, C), "preferred B | C", 5),
                TypicalityStatement(Neg(D), "typicality ~D", 6),
            ),
        )

    def test_should_skip_comments_and_record_lines(self) -> None:
        """Test that comments and blank lines are skipped but counted."""
        # arrange
        text = "# queries\n\nprob A   # marginal\n\n  prob true\n"

        # act
        result = parse_queries(text, self.graph, 2)

        # assert
        self.assertEqual([(statement.text, statement.line) for statement in result], [("prob A", 3), ("prob true", 5)])
        self.assertEqual(result[1], ProbStatement(Top(), None, "prob true", 5))

    def test_should_reject_bound_outside_c_n(self) -> None:
        """Test that 1/3 is not a bound in C_5 and 1.5 is not a degree."""
        # arrange / act / assert
        for text in ("check A -> B >= 1/3", "check A -> B <= 1.5"):
            with self.subTest(text=text), self.assertRaises(BoundOutOfRangeError) as ctx:
                parse_queries(text, self.graph, 5)
            self.assertEqual(ctx.exception.line, 1)

    def test_should_reject_bound_with_zero_denominator(self) -> None:
        """Test that 1/0 is a bound error rather than an arithmetic one."""
        # arrange / act
        with self.assertRaises(BoundOutOfRangeError) as ctx:
            parse_queries("prob A\ncheck A -> B >= 1/0", self.graph, 2)

        # assert
        self.assertEqual(ctx.exception.line, 2)
        self.assertIn("zero denominator", str(ctx.exception))

    def test_should_reject_nested_typicality(self) -> None:
        """Test that T(T(A)) is rejected with a position."""
        # arrange / act / assert
        with self.assertRaises(NestedTypicalityError) as ctx:
            parse_queries("prob A\ncheck T(T(A)) -> B >= 1", self.graph, 5)
        self.assertEqual(ctx.exception.line, 2)

    def test_should_reject_typicality_in_preferred_and_typicality(self) -> None:
        """Test that preference formulas must be plain."""
        # arrange / act / assert
        for text in ("preferred T(A)", "typicality A & T(B)"):
            with self.subTest(text=text), self.assertRaises(NestedTypicalityError):
                parse_queries(text, self.graph, 5)

    def test_should_require_implication_in_graded_leaf(self) -> None:
        """Test that a graded formula must be an implication."""
        # arrange / act / assert
        with self.assertRaises(DslSyntaxError) as ctx:
            parse_queries("check A & B >= 1/5", self.graph, 5)
        self.assertIn("needs '->'", str(ctx.exception))

    def test_should_require_implication_in_degree(self) -> None:
        """Test that degree needs an implication."""
        # arrange / act / assert
        with self.assertRaises(DslSyntaxError):
            parse_queries("degree A", self.graph, 5)

    def test_should_reject_unknown_argument(self) -> None:
        """Test that formulas may only use declared arguments."""
        # arrange / act / assert
        with self.assertRaises(UnknownArgumentError) as ctx:
            parse_queries("prob A given Z", self.graph, 5)
        self.assertEqual(ctx.exception.name, "Z")

    def test_should_report_syntax_error_position(self) -> None:
        """Test that malformed input carries line and column."""
        # arrange / act
        with self.assertRaises(DslSyntaxError) as ctx:
            parse_queries("prob A\n\ncheck A -> >= 1", self.graph, 5)

        # assert
        self.assertEqual(ctx.exception.line, 3)
        self.assertIsNotNone(ctx.exception.column)

    def test_should_reject_unknown_keyword(self) -> None:
        """Test that statements start with a known keyword."""
        # arrange / act / assert
        with self.assertRaises(DslSyntaxError):
            parse_queries("assert A -> B >= 1", self.graph, 5)


class TestParseFormula(unittest.TestCase):
    """Unit tests for parse_formula."""

    def setUp(self) -> None:
        """Build a three-argument graph."""
        self.graph = build_graph(["A", "B", "C"])

    def test_should_follow_connective_precedence(self) -> None:
        """Test ~ over & over | over ->."""
        # arrange / act
        result = parse_formula("~A & B | C -> A", self.graph)

        # assert
        self.assertEqual(result, Impl(Or(And(Neg(A), B), C), A))

    def test_should_associate_implication_to_the_right(self) -> None:
        """Test A -> B -> C reads as A -> (B -> C)."""
        # arrange / act / assert
        self.assertEqual(parse_formula("A -> B -> C", self.graph), Impl(A, Impl(B, C)))

    def test_should_parse_constants(self) -> None:
        """Test true and false."""
        # arrange / act / assert
        self.assertEqual(parse_formula("true | false", self.graph), Or(Top(), Bot()))

    def test_should_parse_back_rendered_formulas(self) -> None:
        """Test that render output reads back as the same formula."""
        # arrange
        formulas = [
            And(A, And(B, C)),
            Impl(Impl(A, B), C),
            Neg(Or(A, Neg(B))),
            Impl(Typ(Or(A, B)), And(C, LabelAtom(0))),
        ]

        # act / assert
        for formula in formulas:
            with self.subTest(formula=render(formula)):
                self.assertEqual(parse_formula(render(formula), self.graph), formula)

    def test_should_reject_conditional_probability_syntax(self) -> None:
        """Test that 'given' is not part of a single formula."""
        # arrange / act / assert
        with self.assertRaises(DslSyntaxError):
            parse_formula("A given B", self.graph)
