"""Unit tests for the graph language reader and writer."""

import math
import unittest
from fractions import Fraction

from gradedargs import (
    DslSyntaxError,
    DuplicateEdgeError,
    Edge,
    ExplicitTable,
    SigmoidNearest,
    StepThreshold,
    UnknownArgumentError,
    UnknownEndpointError,
    build_graph,
    parse_graph,
    serialize_graph,
)


class TestParseGraph(unittest.TestCase):
    """Unit tests for parse_graph."""

    def test_should_parse_arguments_and_edges(self) -> None:
        """Test a two-argument graph with one attack."""
        # arrange
        text = "arg A\narg B\nedge A B -1.0"

        # act
        result = parse_graph(text)

        # assert
        self.assertEqual(result.graph.arguments, ("A", "B"))
        self.assertEqual(result.graph.edges, (Edge("A", "B", -1.0),))
        self.assertEqual(result.phi_overrides, {})

    def test_should_skip_comments_and_blank_lines(self) -> None:
        """Test that # starts a comment anywhere on a line."""
        # arrange
        text = "# header\n\narg A   # first\n   \narg B\nedge B A 2.5e-1 # support\n"

        # act
        result = parse_graph(text)

        # assert
        self.assertEqual(result.graph.edges, (Edge("B", "A", 0.25),))

    def test_should_allow_edges_before_declarations(self) -> None:
        """Test that line order does not matter for references."""
        # arrange
        text = "edge A B 1\narg A\narg B\n"

        # act
        result = parse_graph(text)

        # assert
        self.assertEqual(result.graph.edges, (Edge("A", "B", 1.0),))

    def test_should_reject_edge_to_undeclared_argument(self) -> None:
        """Test that edges need declared endpoints."""
        # arrange / act / assert
        with self.assertRaises(UnknownEndpointError):
            parse_graph("edge A B 1.0")

    def test_should_forward_graph_validation_errors(self) -> None:
        """Test that duplicate edges surface as graph errors."""
        # arrange / act / assert
        with self.assertRaises(DuplicateEdgeError):
            parse_graph("arg A\narg B\nedge A B 1.0\nedge A B 2.0")

    def test_should_report_position_of_syntax_error(self) -> None:
        """Test that a missing weight is reported with its line."""
        # arrange / act
        with self.assertRaises(DslSyntaxError) as ctx:
            parse_graph("arg A\narg B\nedge A B\n")

        # assert
        self.assertEqual(ctx.exception.line, 3)
        self.assertIsNotNone(ctx.exception.column)

    def test_should_reject_unknown_statement(self) -> None:
        """Test that an unknown keyword is a syntax error on its line."""
        # arrange / act / assert
        with self.assertRaises(DslSyntaxError) as ctx:
            parse_graph("arg A\nnode B\n")
        self.assertEqual(ctx.exception.line, 2)

    def test_should_reject_reserved_names(self) -> None:
        """Test that query keywords cannot name arguments."""
        # arrange / act / assert
        for name in ("and", "given", "T", "label"):
            with self.subTest(name=name), self.assertRaises(DslSyntaxError):
                parse_graph(f"arg {name}")

    def test_should_parse_phi_lines(self) -> None:
        """Test sigmoid, step and table overrides."""
        # arrange
        text = "arg A\narg B\narg C\nphi C sigmoid\nphi B step 0.5\nphi A table -inf:0 0.0:1/2 1.5:1\n"

        # act
        result = parse_graph(text)

        # assert
        self.assertEqual(list(result.phi_overrides), ["A", "B", "C"])
        self.assertEqual(result.phi_overrides["B"], StepThreshold(0.5))
        self.assertEqual(result.phi_overrides["C"], SigmoidNearest())
        self.assertEqual(
            result.phi_overrides["A"],
            ExplicitTable((-math.inf, 0.0, 1.5), (Fraction(0), Fraction(1, 2), Fraction(1))),
        )

    def test_should_default_bare_step_threshold_to_zero(self) -> None:
        """Test that ``phi B step`` reads like the ``--phi step`` flag."""
        # arrange / act
        result = parse_graph("arg B\nphi B step\n")

        # assert
        self.assertEqual(result.phi_overrides["B"], StepThreshold(0.0))

    def test_should_reject_table_degree_with_zero_denominator(self) -> None:
        """Test that 1/0 is a positioned syntax error."""
        # arrange / act
        with self.assertRaises(DslSyntaxError) as ctx:
            parse_graph("arg A\nphi A table 0:1/0\n")

        # assert
        self.assertEqual((ctx.exception.line, ctx.exception.column), (2, 15))
        self.assertIn("zero denominator", str(ctx.exception))

    def test_should_reject_repeated_phi_line(self) -> None:
        """Test that an argument gets at most one φ."""
        # arrange / act / assert
        with self.assertRaises(DslSyntaxError) as ctx:
            parse_graph("arg A\nphi A sigmoid\nphi A step 0\n")
        self.assertEqual(ctx.exception.line, 3)

    def test_should_reject_phi_for_unknown_argument(self) -> None:
        """Test that φ lines must name a declared argument."""
        # arrange / act / assert
        with self.assertRaises(UnknownArgumentError):
            parse_graph("arg A\nphi B sigmoid\n")

    def test_should_reject_unordered_table(self) -> None:
        """Test that table breakpoints must increase."""
        # arrange / act / assert
        with self.assertRaises(DslSyntaxError) as ctx:
            parse_graph("arg A\nphi A table 1.0:0 0.0:1\n")
        self.assertEqual(ctx.exception.line, 2)


class TestSerializeGraph(unittest.TestCase):
    """Unit tests for serialize_graph."""

    def test_should_write_canonical_text(self) -> None:
        """Test the arg/edge/phi layout with repr weights."""
        # arrange
        graph = build_graph(["A", "B"], [("A", "B", 0.1), ("B", "B", -2.0)])

        # act
        result = serialize_graph(graph, {"B": StepThreshold(0.0)})

        # assert
        self.assertEqual(result, "arg A\narg B\nedge A B 0.1\nedge B B -2.0\nphi B step 0.0\n")

    def test_should_round_trip_through_parser(self) -> None:
        """Test parse(serialize(g)) rebuilds g and its overrides."""
        # arrange
        graph = build_graph(["X", "Y"], [("Y", "X", 1 / 3), ("X", "Y", -1e-7)])
        overrides = {"X": ExplicitTable((-math.inf, 0.25), (Fraction(1, 3), Fraction(2, 3)))}

        # act
        result = parse_graph(serialize_graph(graph, overrides))

        # assert
        self.assertEqual(result.graph, graph)
        self.assertEqual(result.phi_overrides, overrides)
