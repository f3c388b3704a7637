"""Unit tests for the DSL error family."""

import unittest

from gradedargs import BoundOutOfRangeError, DslError, DslSyntaxError, NestedTypicalityError


class TestDslError(unittest.TestCase):
    """Unit tests for DslError."""

    def test_should_prefix_message_with_line_and_column(self) -> None:
        """Test the line:column: message form."""
        # arrange / act
        sut = DslSyntaxError("unexpected input near 'x'", 3, 7)

        # assert
        self.assertEqual(str(sut), "3:7: unexpected input near 'x'")
        self.assertEqual((sut.line, sut.column, sut.message), (3, 7, "unexpected input near 'x'"))

    def test_should_omit_unknown_column(self) -> None:
        """Test the line: message form."""
        # arrange / act / assert
        self.assertEqual(str(BoundOutOfRangeError("bad bound", 2)), "2: bad bound")

    def test_should_print_bare_message_without_position(self) -> None:
        """Test that errors without a position print just the message."""
        # arrange / act / assert
        self.assertEqual(str(NestedTypicalityError("nested")), "nested")

    def test_should_share_dsl_error_base(self) -> None:
        """Test that every DSL error is a DslError and a ValueError."""
        # arrange / act / assert
        for error_type in (DslSyntaxError, NestedTypicalityError, BoundOutOfRangeError):
            with self.subTest(error=error_type.__name__):
                self.assertTrue(issubclass(error_type, DslError))
                self.assertTrue(issubclass(error_type, ValueError))
