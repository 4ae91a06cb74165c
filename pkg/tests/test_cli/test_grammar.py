from textwrap import dedent

from pycompact.cli import parse_tree
from pycompact.dev.testutil import TestCase
from pycompact.exceptions import DefinitionError, DefinitionSyntaxError


class TestParseTree(TestCase):
    """
    Tests for :func:`pycompact.cli.parse_tree`
    """
    def test_empty(self):
        self.assertEqual(parse_tree("").children, [])

    def test_declarations(self):
        tree = parse_tree(dedent("""
            # two points
            finite two { points = a, b; d(a, b) = 1/2 }
            gauge soft { h = bend }
            product p { cycle = two, binary; weights = geometric(1/3, 2); }
        """))
        self.assertEqual(len(tree.children), 3)
        kinds = [str(child.children[0]) for child in tree.children]
        self.assertEqual(kinds, ["finite", "gauge", "product"])

    def test_settings(self):
        tree = parse_tree("finite two { points = a, b; d(a, b) = 1 }")
        declaration = tree.children[0]
        assign, distance = declaration.children[2:]
        self.assertEqual(assign.data, "assign")
        self.assertEqual(distance.data, "distance")
        self.assertEqual(
            [str(item) for item in distance.children], ["a", "b", "1"])

    def test_d_as_a_label(self):
        tree = parse_tree("finite x { points = c, d }")
        values = tree.children[0].children[2].children[1].children
        self.assertEqual([str(value) for value in values], ["c", "d"])

    def test_positions(self):
        tree = parse_tree("\n\n  interval unit { endpoints = 0, 1 }")
        declaration = tree.children[0]
        self.assertEqual(declaration.meta.line, 3)
        self.assertEqual(declaration.meta.column, 3)

    def test_unexpected_token(self):
        with self.assertRaises(DefinitionSyntaxError) as error:
            parse_tree("finite x { points = a b }")
        self.assertEqual(error.exception.line, 1)
        self.assertEqual(error.exception.column, 23)
        self.assertIn("'b'", error.exception.message)

    def test_unexpected_character(self):
        with self.assertRaises(DefinitionSyntaxError) as error:
            parse_tree("finite x { points = a! }")
        self.assertEqual(
            (error.exception.line, error.exception.column), (1, 22))
        self.assertIn("unexpected character '!'", error.exception.message)

    def test_error_on_later_line(self):
        with self.assertRaises(DefinitionSyntaxError) as error:
            parse_tree("finite x {\n  points = a,\n}")
        self.assertEqual(error.exception.line, 3)

    def test_unexpected_end(self):
        with self.assertRaises(DefinitionSyntaxError) as error:
            parse_tree("finite x {")
        self.assertIn("end of input", error.exception.message)

    def test_is_a_definition_error(self):
        with self.assertRaises(DefinitionError):
            parse_tree("{")
