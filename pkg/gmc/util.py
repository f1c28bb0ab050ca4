"""Generally useful utilities not specific to one gmc module.

New things in this module should be of relevance to more than one of the
document formats or modules.
"""

from fractions import Fraction
from xml.etree.ElementTree import (
    Element, SubElement, TreeBuilder, XMLParser, indent, tostring)


__all__ = ["XML", "format_rational", "parse_rational", "element",
           "sub_element", "dump_tree", "read_document"]


def format_rational(value):
    """Format a L{Fraction} as C{p/q} in lowest terms, always with a slash."""
    value = Fraction(value)
    return "%d/%d" % (value.numerator, value.denominator)


def parse_rational(text):
    """Parse C{p/q} or C{n} into a reduced L{Fraction}.

    @raises ValueError: If C{text} is not a rational with positive denominator.
    """
    text = text.strip()
    if "/" in text:
        numerator, denominator = text.split("/", 1)
        numerator, denominator = int(numerator), int(denominator)
        if denominator <= 0:
            raise ValueError("Denominator must be positive in %r" % text)
        return Fraction(numerator, denominator)
    return Fraction(int(text))


class NamespaceFixTreeBuilder(TreeBuilder):

    def _fixname(self, key):
        if "}" in key:
            key = key.split("}", 1)[1]
        return key

    def start(self, tag, attrs):
        attrs = dict((self._fixname(key), value)
                     for key, value in attrs.items())
        return TreeBuilder.start(self, self._fixname(tag), attrs)

    def end(self, tag):
        return TreeBuilder.end(self, self._fixname(tag))


def XML(text):
    parser = XMLParser(target=NamespaceFixTreeBuilder())
    parser.feed(text)
    return parser.close()


def element(tag, **attributes):
    """Create an L{Element} with string-valued C{attributes}.

    Attribute names use underscores for dashes.
    """
    node = Element(tag)
    for key in sorted(attributes):
        node.set(key.replace("_", "-"), str(attributes[key]))
    return node


def sub_element(parent, tag, **attributes):
    """Append a child created like L{element} to C{parent} and return it."""
    node = SubElement(parent, tag)
    for key in sorted(attributes):
        node.set(key.replace("_", "-"), str(attributes[key]))
    return node


def dump_tree(root):
    """Serialize C{root} as indented UTF-8 text with an XML declaration."""
    indent(root, space="  ")
    body = tostring(root, encoding="unicode")
    return "<?xml version=\"1.0\" encoding=\"utf-8\"?>\n%s\n" % body


def read_document(text, root_tag):
    """Parse C{text} and check its root element is C{root_tag}.

    @raises ParseError: If the text is not XML or has a different root.
    """
    from xml.etree.ElementTree import ParseError as XMLParseError
    from gmc.exception import ParseError
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        tree = XML(text)
    except XMLParseError as error:
        line, column = getattr(error, "position", (None, None))
        raise ParseError("Malformed document: %s" % (error,), line,
                         None if column is None else column + 1)
    if tree.tag != root_tag:
        raise ParseError("Expected a <%s> document, got <%s>" % (
            root_tag, tree.tag))
    return tree
