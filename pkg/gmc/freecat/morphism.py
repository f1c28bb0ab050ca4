"""Morphisms of the free graded monoidal category as slice lists."""

from gmc.exception import (
    GradeMismatchError, NonOrthogonalGradesError, NotLeqError,
    TypeMismatchError)
from gmc.freecat.signature import Slice, format_word


__all__ = ["FreeMorphism", "identity", "generator", "regrade", "compose",
           "tensor", "format_slices"]


class FreeMorphism(object):
    """A morphism C{dom -> cod} at an ambient grade.

    @ivar signature: The L{GradedSignature} the slices are drawn from.
    @ivar grade: The ambient grade; every slice's generator grade is below it.
    @ivar dom: The domain word.
    @ivar cod: The codomain word.
    @ivar slices: A C{tuple} of chaining L{Slice}s.
    """

    def __init__(self, signature, grade, dom, cod, slices=()):
        self.signature = signature
        self.grade = grade
        self.dom = tuple(dom)
        self.cod = tuple(cod)
        self.slices = tuple(slices)
        pcm = signature.pcm
        pcm._own(grade)
        current = self.dom
        for piece in self.slices:
            generator = signature.generator(piece.gen)
            piece_dom = signature.slice_dom(piece)
            if piece_dom != current:
                raise TypeMismatchError(
                    format_word(current), format_word(piece_dom),
                    "Slice %s expects %s but receives %s" % (
                        piece.gen, format_word(piece_dom),
                        format_word(current)))
            if not pcm.leq(generator.grade, grade):
                raise NotLeqError(generator.grade, grade)
            current = signature.slice_cod(piece)
        if current != self.cod:
            raise TypeMismatchError(format_word(self.cod),
                                    format_word(current))

    def _key(self):
        return (self.grade, self.dom, self.cod, self.slices)

    def __eq__(self, other):
        return (isinstance(other, FreeMorphism) and
                self.signature == other.signature and
                self._key() == other._key())

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._key())

    def __len__(self):
        return len(self.slices)

    def grades(self):
        """Return the generator grades of the slices, in order."""
        return [self.signature.generator(piece.gen).grade
                for piece in self.slices]

    def keys(self):
        return tuple(piece.key() for piece in self.slices)

    def with_slices(self, slices):
        return FreeMorphism(self.signature, self.grade, self.dom, self.cod,
                            slices)

    def __repr__(self):
        return "<FreeMorphism %s -> %s @ %s: %s>" % (
            format_word(self.dom), format_word(self.cod), self.grade,
            "; ".join(piece.gen for piece in self.slices) or "id")


def format_slices(morphism):
    """Return one C{left | gen@grade | right} line per slice."""
    lines = []
    for piece in morphism.slices:
        grade = morphism.signature.generator(piece.gen).grade
        lines.append("%s | %s@%s | %s" % (format_word(piece.left), piece.gen,
                                          grade, format_word(piece.right)))
    return lines


def identity(signature, word, grade=None):
    """Return the identity on C{word}, at grade 0 unless C{grade} is given."""
    if grade is None:
        grade = signature.pcm.zero
    word = signature.word(word)
    return FreeMorphism(signature, grade, word, word)


def generator(signature, name):
    """Inject a generator as a one-slice morphism at its own grade.

    @raises UnknownGeneratorError: If C{name} is not declared.
    """
    declared = signature.generator(name)
    return FreeMorphism(signature, declared.grade, declared.dom, declared.cod,
                        [Slice((), name, ())])


def regrade(morphism, grade):
    """Move C{morphism} up the extension order to C{grade}.

    @raises NotLeqError: If the ambient grade is not below C{grade}.
    """
    pcm = morphism.signature.pcm
    if not pcm.leq(morphism.grade, grade):
        raise NotLeqError(morphism.grade, grade)
    return FreeMorphism(morphism.signature, grade, morphism.dom, morphism.cod,
                        morphism.slices)


def compose(first, second):
    """Compose C{first} then C{second} at their shared grade.

    @raises TypeMismatchError: If the boundaries do not meet.
    @raises GradeMismatchError: If the ambient grades differ.
    """
    if first.cod != second.dom:
        raise TypeMismatchError(
            format_word(first.cod), format_word(second.dom),
            "Cannot compose: codomain %s does not match domain %s" % (
                format_word(first.cod), format_word(second.dom)))
    if first.grade != second.grade:
        raise GradeMismatchError(first.grade, second.grade)
    return FreeMorphism(first.signature, first.grade, first.dom, second.cod,
                        first.slices + second.slices)


def tensor(left, right):
    """Place C{left} and C{right} side by side at the sum of their grades.

    The slices of C{left} act first, padded on the right with the domain of
    C{right}; the slices of C{right} follow, padded with the codomain of
    C{left}.

    @raises NonOrthogonalGradesError: If the grades do not combine.
    """
    pcm = left.signature.pcm
    total = pcm.add(left.grade, right.grade)
    if total is None:
        raise NonOrthogonalGradesError(left.grade, right.grade)
    slices = [Slice(piece.left, piece.gen, piece.right + right.dom)
              for piece in left.slices]
    slices.extend(Slice(left.cod + piece.left, piece.gen, piece.right)
                  for piece in right.slices)
    return FreeMorphism(left.signature, total, left.dom + right.dom,
                        left.cod + right.cod, slices)
