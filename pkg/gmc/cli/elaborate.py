"""Elaboration of source terms into free graded morphisms.

Terms elaborate eagerly and bottom-up, so a failure is reported at the
smallest subterm whose parts elaborate but which does not.
"""

from contextlib import contextmanager

from twisted.python import log

from gmc.cli.parser import Compose, Identity, Reference, Tensor
from gmc.exception import ElaborationError, GradedError, UnknownGeneratorError
from gmc.freecat import morphism as free
from gmc.freecat.signature import GradedSignature


__all__ = ["Elaborator", "elaborate"]


class Elaborator(object):
    """Elaborate the terms of a L{SourceDocument}.

    @ivar signature: The L{GradedSignature} declared by the document.
    """

    def __init__(self, document):
        self.document = document
        self.pcm = document.pcm
        self._signature = None
        self._morphisms = {}

    @property
    def signature(self):
        """The declared signature, built on first use.

        @raises ElaborationError: If a generator grade is not an element of
            the PCM or a generator name is reused.
        """
        if self._signature is None:
            signature = GradedSignature(self.pcm, self.document.objects)
            for declaration in self.document.generators:
                with _located(declaration):
                    grade = self.pcm.coerce(declaration.grade)
                    signature.add_generator(declaration.name, declaration.dom,
                                            declaration.cod, grade)
            self._signature = signature
        return self._signature

    def grade(self, value, node):
        with _located(node):
            return self.pcm.coerce(value)

    def term(self, name):
        """Return the L{FreeMorphism} bound to C{name}.

        @raises UnknownGeneratorError: If no term has that name.
        @raises ElaborationError: If the term does not elaborate.
        """
        binding = self.document.term(name)
        if binding is None:
            raise UnknownGeneratorError(name, "term")
        if name not in self._morphisms:
            bound = self.document.term_names()
            earlier = set(bound[:bound.index(name)])
            morphism = self._elaborate(binding.body, earlier)
            log.msg("Elaborated %s at grade %s" % (name, morphism.grade))
            self._morphisms[name] = morphism
        return self._morphisms[name]

    def _elaborate(self, node, earlier):
        signature = self.signature
        if isinstance(node, Identity):
            with _located(node):
                return free.identity(signature, node.word)
        if isinstance(node, Reference):
            if node.name in earlier:
                return self.term(node.name)
            with _located(node):
                if node.name in self.document.term_names():
                    raise UnknownGeneratorError(node.name, "earlier term")
                return free.generator(signature, node.name)
        if isinstance(node, Compose):
            first = self._elaborate(node.first, earlier)
            second = self._elaborate(node.second, earlier)
            with _located(node):
                return free.compose(first, second)
        if isinstance(node, Tensor):
            left = self._elaborate(node.left, earlier)
            right = self._elaborate(node.right, earlier)
            with _located(node):
                return free.tensor(left, right)
        body = self._elaborate(node.body, earlier)
        grade = self.grade(node.grade, node)
        with _located(node):
            return free.regrade(body, grade)


@contextmanager
def _located(node):
    """Re-raise L{GradedError}s as L{ElaborationError}s at C{node}."""
    try:
        yield
    except ElaborationError:
        raise
    except GradedError as error:
        raise ElaborationError(error, node.line, node.column)


def elaborate(document, name):
    """Elaborate the term C{name} of C{document} into a L{FreeMorphism}.

    @raises ElaborationError: With the diagnostic code of the failing rule:
        C{E-TYPE} for boundary mismatches, C{E-GRADE} for grade mismatches
        and regradings against the order, C{E-ORTHO} for products of
        interfering grades.
    """
    return Elaborator(document).term(name)
