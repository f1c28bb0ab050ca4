from fractions import Fraction

from gmc.exception import ParseError
from gmc.testing.base import GMCTestCase
from gmc.util import (
    dump_tree, element, format_rational, parse_rational, read_document,
    sub_element)


class RationalTestCase(GMCTestCase):

    def test_format(self):
        self.assertEqual("1/2", format_rational(Fraction(2, 4)))
        self.assertEqual("3/1", format_rational(3))

    def test_parse(self):
        self.assertEqual(Fraction(1, 2), parse_rational(" 2/4 "))
        self.assertEqual(Fraction(3), parse_rational("3"))

    def test_parse_bad_denominator(self):
        self.assertRaises(ValueError, parse_rational, "1/0")
        self.assertRaises(ValueError, parse_rational, "a/b")


class DocumentTestCase(GMCTestCase):

    def test_dump_and_read(self):
        """Dumped trees read back with their attributes."""
        root = element("model", name="flip")
        sub_element(root, "grade", value="1", is_top=True)
        text = dump_tree(root)
        self.assertTrue(text.startswith("<?xml"))
        tree = read_document(text, "model")
        [grade] = list(tree)
        self.assertEqual("True", grade.get("is-top"))

    def test_namespaces_dropped(self):
        tree = read_document('<m:model xmlns:m="urn:x"><m:grade/></m:model>',
                             "model")
        self.assertEqual(["grade"], [child.tag for child in tree])

    def test_wrong_root(self):
        error = self.assertRaises(ParseError, read_document, "<pcm/>",
                                  "model")
        self.assertEqual("Expected a <model> document, got <pcm>",
                         error.message)

    def test_malformed(self):
        """Malformed XML is a parse error with a position."""
        error = self.assertRaises(ParseError, read_document, "<model>",
                                  "model")
        self.assertEqual("E-PARSE", error.diagnostic)
        self.assertEqual(1, error.line)
