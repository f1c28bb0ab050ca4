"""Text syntax for PCM descriptors and grade literals.

Descriptors look like C{powerset{a,b}}, C{interval(3/2)} or
C{product(two,nat_max)}; grade literals are sets C{{a,b}}, rationals
C{p/q}, naturals, tuples C{(x,y)} and element names.
"""

from lark import Lark, Transformer, UnexpectedInput
from lark.exceptions import VisitError

from gmc.exception import GradedError, ParseError
from gmc.pcm.model import (
    IntervalPCM, NatMaxPCM, NatPlusPCM, PowersetPCM, ProductPCM, RWPCM,
    SemilatticePCM, SingletonPCM, ThreePCM, TwoPCM)
from gmc.util import parse_rational


__all__ = ["VALUE_GRAMMAR", "DESCRIPTOR_GRAMMAR", "COMMON_GRAMMAR",
           "ValueTransformer", "DescriptorTransformer", "construct",
           "parse_descriptor", "parse_value", "parse_grade",
           "raise_parse_error"]


VALUE_GRAMMAR = r"""
?value: "{" "}"                         -> empty_set
      | "{" value ("," value)* "}"      -> set_value
      | "(" value ("," value)+ ")"      -> tuple_value
      | RATIONAL                        -> number
      | NAME                            -> name
"""

DESCRIPTOR_GRAMMAR = r"""
?descriptor: "singleton"                               -> singleton
           | "two"                                     -> two
           | "three"                                   -> three
           | "nat_plus"                                -> nat_plus
           | "nat_max"                                 -> nat_max
           | "powerset" "{" "}"                        -> powerset
           | "powerset" "{" NAME ("," NAME)* "}"       -> powerset
           | "rw" "{" "}"                              -> rw
           | "rw" "{" NAME ("," NAME)* "}"             -> rw
           | "interval" "(" RATIONAL ")"               -> interval
           | "product" "(" descriptor ("," descriptor)* ")" -> product
           | "semilattice" "{" chain ("," chain)* "}"  -> semilattice
chain: NAME ("<" NAME)*
"""

COMMON_GRAMMAR = r"""
RATIONAL: /[0-9]+(\/[0-9]+)?/
NAME: /[A-Za-z_][A-Za-z0-9_']*/
COMMENT: /#[^\n]*/
%import common.WS
%ignore WS
%ignore COMMENT
"""


class ValueTransformer(Transformer):
    """Turn grade-literal trees into plain Python values.

    Sets become C{frozenset}s of names, tuples stay tuples, C{p/q} becomes a
    L{Fraction} and a bare number an C{int}.
    """

    def empty_set(self, children):
        return frozenset()

    def set_value(self, children):
        return frozenset(str(child) for child in children)

    def tuple_value(self, children):
        return tuple(children)

    def number(self, children):
        text = str(children[0])
        if "/" in text:
            return parse_rational(text)
        return int(text)

    def name(self, children):
        return str(children[0])


class DescriptorTransformer(ValueTransformer):
    """Build L{PCM} instances from descriptor trees.

    @param validate: Whether finite PCMs run their law suite when built.
    """

    def __init__(self, validate=False):
        super(DescriptorTransformer, self).__init__()
        self.validate = validate

    def singleton(self, children):
        return SingletonPCM(self.validate)

    def two(self, children):
        return TwoPCM(self.validate)

    def three(self, children):
        return ThreePCM(self.validate)

    def nat_plus(self, children):
        return NatPlusPCM(self.validate)

    def nat_max(self, children):
        return NatMaxPCM(self.validate)

    def powerset(self, children):
        return PowersetPCM([str(child) for child in children], self.validate)

    def rw(self, children):
        return RWPCM([str(child) for child in children], self.validate)

    def interval(self, children):
        return IntervalPCM(parse_rational(str(children[0])), self.validate)

    def product(self, children):
        return ProductPCM(children, self.validate)

    def chain(self, children):
        return [str(child) for child in children]

    def semilattice(self, children):
        elements = []
        pairs = []
        for chain in children:
            elements.extend(chain)
            pairs.extend(zip(chain, chain[1:]))
        return SemilatticePCM.from_order(pairs, elements)


_parser = Lark(VALUE_GRAMMAR + DESCRIPTOR_GRAMMAR + COMMON_GRAMMAR,
               parser="lalr", start=["descriptor", "value"],
               propagate_positions=True)


def raise_parse_error(error, text):
    """Re-raise a lark L{UnexpectedInput} as a L{ParseError}."""
    line = getattr(error, "line", -1)
    column = getattr(error, "column", -1)
    if line is None or line < 1:
        lines = text.split("\n")
        line, column = len(lines), len(lines[-1]) + 1
    message = "Unexpected input"
    token = getattr(error, "token", None)
    if token is not None and str(token):
        message = "Unexpected %r" % (str(token),)
    elif line == len(text.split("\n")):
        message = "Unexpected end of input"
    raise ParseError(message, line, column)


def _transform(tree, transformer):
    try:
        return transformer.transform(tree)
    except VisitError as error:
        if isinstance(error.orig_exc, GradedError):
            raise error.orig_exc
        raise


def parse_descriptor(text, validate=False):
    """Parse a descriptor and build its PCM.

    @raises ParseError: On syntax errors.
    @raises MalformedSpecError: On bad parameters.
    @raises LawViolationError: If C{validate} is set and a law fails.
    """
    try:
        tree = _parser.parse(text, start="descriptor")
    except UnexpectedInput as error:
        raise_parse_error(error, text)
    return _transform(tree, DescriptorTransformer(validate))


construct = parse_descriptor


def parse_value(text):
    try:
        tree = _parser.parse(text, start="value")
    except UnexpectedInput as error:
        raise_parse_error(error, text)
    return _transform(tree, ValueTransformer())


def parse_grade(pcm, text):
    """Parse a grade literal of C{pcm}.

    @raises MalformedSpecError: If the literal is not an element of C{pcm}.
    """
    return pcm.coerce(parse_value(text))
