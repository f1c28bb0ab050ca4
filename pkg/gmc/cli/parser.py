"""The C{.gmc} source format.

A source document declares a PCM, object generators, graded morphism
generators and named terms::

  pcm powerset{db,lock}
  object A B
  gen f : A -> A @ {db}
  gen g : B -> B @ {lock}
  term both = (f @ {db}) * (g @ {lock})

Terms are built from C{id WORD}, generator and term names, C{;}
(composition), C{*} (monoidal product) and C{@ GRADE} (regrading), binding
in that order from loosest to tightest. C{I} is the empty word.
"""

from lark import Lark, UnexpectedInput
from lark.exceptions import VisitError

from gmc.exception import GradedError, ParseError
from gmc.freecat.signature import format_word
from gmc.pcm.syntax import (
    COMMON_GRAMMAR, DESCRIPTOR_GRAMMAR, VALUE_GRAMMAR, DescriptorTransformer,
    raise_parse_error)


__all__ = ["SourceDocument", "GeneratorDeclaration", "TermBinding",
           "Identity", "Reference", "Compose", "Tensor", "Regrade", "parse",
           "format_term", "format_morphism", "format_document",
           "DOCUMENT_GRAMMAR"]


DOCUMENT_GRAMMAR = r"""
start: pcm_decl declaration*

pcm_decl: "pcm" descriptor
?declaration: object_decl | gen_decl | term_decl
object_decl: "object" NAME+
gen_decl: "gen" NAME ":" word "->" word "@" value
term_decl: "term" NAME "=" expr

word: EMPTY_WORD                         -> empty_word
    | NAME+                              -> word

?expr: expr ";" tensor_expr              -> compose
     | tensor_expr
?tensor_expr: tensor_expr "*" regrade_expr -> tensor
            | regrade_expr
?regrade_expr: regrade_expr "@" value    -> regrade
             | atom
?atom: ID word                           -> identity
     | NAME                              -> reference
     | "(" expr ")"

ID: "id"
EMPTY_WORD: "I"
"""


class Term(object):
    """A node of a term, remembering where it starts in the source.

    @ivar line: The line of the first character, starting at 1.
    @ivar column: The column of the first character, starting at 1.
    """

    precedence = 3

    def __init__(self, line, column):
        self.line = line
        self.column = column


class Identity(Term):

    def __init__(self, word, line, column):
        super(Identity, self).__init__(line, column)
        self.word = tuple(word)


class Reference(Term):
    """A generator name or the name of an earlier term."""

    def __init__(self, name, line, column):
        super(Reference, self).__init__(line, column)
        self.name = name


class Compose(Term):

    precedence = 0

    def __init__(self, first, second, line, column):
        super(Compose, self).__init__(line, column)
        self.first = first
        self.second = second


class Tensor(Term):

    precedence = 1

    def __init__(self, left, right, line, column):
        super(Tensor, self).__init__(line, column)
        self.left = left
        self.right = right


class Regrade(Term):
    """Regrading of C{body} to the grade literal C{grade}.

    @ivar grade: The parsed literal, coerced against the PCM when the term
        is elaborated.
    """

    precedence = 2

    def __init__(self, body, grade, line, column):
        super(Regrade, self).__init__(line, column)
        self.body = body
        self.grade = grade


class GeneratorDeclaration(object):
    """A C{gen} line: C{name : dom -> cod @ grade}, the grade unparsed."""

    def __init__(self, name, dom, cod, grade, line, column):
        self.name = name
        self.dom = tuple(dom)
        self.cod = tuple(cod)
        self.grade = grade
        self.line = line
        self.column = column


class TermBinding(object):
    """A C{term} line binding C{name} to the term C{body}."""

    def __init__(self, name, body, line, column):
        self.name = name
        self.body = body
        self.line = line
        self.column = column


class SourceDocument(object):
    """A parsed source document.

    @ivar pcm: The declared L{PCM}.
    @ivar objects: The object generator names in declaration order.
    @ivar generators: The L{GeneratorDeclaration}s in declaration order.
    @ivar terms: The L{TermBinding}s in declaration order.
    """

    def __init__(self, pcm, objects, generators, terms):
        self.pcm = pcm
        self.objects = tuple(objects)
        self.generators = list(generators)
        self.terms = list(terms)
        self._terms = dict((binding.name, binding) for binding in self.terms)

    def term(self, name):
        """Return the L{TermBinding} named C{name}, or C{None}."""
        return self._terms.get(name)

    def term_names(self):
        return [binding.name for binding in self.terms]

    def __repr__(self):
        return "<SourceDocument over %s: %d generators, %d terms>" % (
            self.pcm.tag, len(self.generators), len(self.terms))


class DocumentTransformer(DescriptorTransformer):
    """Build a L{SourceDocument} from a parse tree."""

    def start(self, children):
        pcm = children[0]
        objects, generators, terms = [], [], []
        seen = set()
        for kind, value in children[1:]:
            if kind == "objects":
                for token in value:
                    if str(token) in objects:
                        raise ParseError("Object %s is declared twice" % (
                            token,), token.line, token.column)
                    objects.append(str(token))
            elif kind == "gen":
                generators.append(value)
            else:
                if value.name in seen:
                    raise ParseError("Term %s is bound twice" % (value.name,),
                                     value.line, value.column)
                seen.add(value.name)
                terms.append(value)
        return SourceDocument(pcm, objects, generators, terms)

    def pcm_decl(self, children):
        return children[0]

    def object_decl(self, children):
        return ("objects", children)

    def gen_decl(self, children):
        name, dom, cod, grade = children
        return ("gen", GeneratorDeclaration(str(name), dom, cod, grade,
                                            name.line, name.column))

    def term_decl(self, children):
        name, body = children
        return ("term", TermBinding(str(name), body, name.line, name.column))

    def empty_word(self, children):
        return ()

    def word(self, children):
        return tuple(str(child) for child in children)

    def compose(self, children):
        first, second = children
        return Compose(first, second, first.line, first.column)

    def tensor(self, children):
        left, right = children
        return Tensor(left, right, left.line, left.column)

    def regrade(self, children):
        body, grade = children
        return Regrade(body, grade, body.line, body.column)

    def identity(self, children):
        token, word = children
        return Identity(word, token.line, token.column)

    def reference(self, children):
        token = children[0]
        return Reference(str(token), token.line, token.column)


_parser = Lark(DOCUMENT_GRAMMAR + VALUE_GRAMMAR + DESCRIPTOR_GRAMMAR +
               COMMON_GRAMMAR, parser="lalr")


def parse(text):
    """Parse a source document.

    Grade literals are parsed but not yet checked against the PCM; that
    happens when terms are elaborated.

    @raises ParseError: On syntax errors, with the line and column of the
        first one.
    @raises MalformedSpecError: If the PCM descriptor has bad parameters.
    """
    try:
        tree = _parser.parse(text)
    except UnexpectedInput as error:
        raise_parse_error(error, text)
    try:
        return DocumentTransformer().transform(tree)
    except VisitError as error:
        if isinstance(error.orig_exc, GradedError):
            raise error.orig_exc
        raise


def format_term(term, grade_text):
    """Print C{term} in source syntax with as few parentheses as parse back.

    @param grade_text: A callable turning a parsed grade literal into text.
    """
    if isinstance(term, Identity):
        return "id %s" % (format_word(term.word),)
    if isinstance(term, Reference):
        return term.name

    def operand(child, precedence):
        text = format_term(child, grade_text)
        if child.precedence < precedence:
            return "(%s)" % (text,)
        return text

    if isinstance(term, Compose):
        return "%s ; %s" % (operand(term.first, 0), operand(term.second, 1))
    if isinstance(term, Tensor):
        return "%s * %s" % (operand(term.left, 1), operand(term.right, 2))
    return "%s @ %s" % (operand(term.body, 2), grade_text(term.grade))


def format_morphism(morphism):
    """Print a L{FreeMorphism} as a term, one C{id L * g @ c * id R} slice
    per step, steps joined by C{;}."""
    grade = str(morphism.grade)
    if not morphism.slices:
        return "id %s @ %s" % (format_word(morphism.dom), grade)
    steps = []
    for piece in morphism.slices:
        parts = ["%s @ %s" % (piece.gen, grade)]
        if piece.left:
            parts.insert(0, "id %s" % (format_word(piece.left),))
        if piece.right:
            parts.append("id %s" % (format_word(piece.right),))
        steps.append(" * ".join(parts))
    return " ; ".join(steps)


def format_document(document, terms=None):
    """Print C{document} in source syntax.

    @param terms: A C{dict} from term names to replacement term text; the
        other terms are printed from their syntax trees.
    """
    terms = terms or {}
    pcm = document.pcm

    def grade_text(value):
        return str(pcm.coerce(value))

    lines = ["pcm %s" % (pcm.tag,)]
    if document.objects:
        lines.append("object %s" % (" ".join(document.objects),))
    for declaration in document.generators:
        lines.append("gen %s : %s -> %s @ %s" % (
            declaration.name, format_word(declaration.dom),
            format_word(declaration.cod), grade_text(declaration.grade)))
    for binding in document.terms:
        text = terms.get(binding.name)
        if text is None:
            text = format_term(binding.body, grade_text)
        lines.append("term %s = %s" % (binding.name, text))
    return "\n".join(lines) + "\n"
