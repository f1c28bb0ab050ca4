"""Graded signatures: object generators and graded morphism generators."""

from collections import namedtuple

from gmc.exception import MalformedSpecError, UnknownGeneratorError


__all__ = ["Generator", "GradedSignature", "Slice", "format_word"]


def format_word(word):
    """Format a word of object names, writing the empty word as C{I}."""
    if not word:
        return "I"
    return " ".join(word)


class Generator(namedtuple("Generator", "name dom cod grade")):
    """A morphism generator C{name : dom -> cod} at C{grade}.

    @ivar dom: The domain word, a C{tuple} of object names.
    @ivar cod: The codomain word.
    """

    @property
    def degenerate(self):
        return not self.dom or not self.cod

    def __str__(self):
        return "%s : %s -> %s @ %s" % (self.name, format_word(self.dom),
                                       format_word(self.cod), self.grade)


class Slice(namedtuple("Slice", "left gen right")):
    """A generator whiskered by identity wires on both sides.

    @ivar left: The word to the left of the generator.
    @ivar gen: The generator name.
    @ivar right: The word to the right of the generator.
    """

    @property
    def position(self):
        return len(self.left)

    def key(self):
        return (len(self.left), self.gen)


class GradedSignature(object):
    """Create a GradedSignature.

    @param pcm: The L{PCM} grading the signature.
    @param objects: The object generator names.
    @param generators: L{Generator}s with words over C{objects} and grades
        owned by C{pcm}.
    @raises MalformedSpecError: If names clash or a grade has another owner.
    @raises UnknownGeneratorError: If a word uses an undeclared object.
    """

    def __init__(self, pcm, objects, generators=()):
        self.pcm = pcm
        self.objects = tuple(objects)
        if len(set(self.objects)) != len(self.objects):
            raise MalformedSpecError("Duplicate object generators")
        self.generators = []
        self._by_name = {}
        for generator in generators:
            self.add_generator(*generator)

    def add_generator(self, name, dom, cod, grade):
        if name in self._by_name or name in self.objects:
            raise MalformedSpecError("Generator %s is declared twice" % name)
        if not self.pcm.owns(grade):
            raise MalformedSpecError("Grade %s of %s is not in %s" % (
                grade, name, self.pcm.tag))
        generator = Generator(name, self.word(dom), self.word(cod), grade)
        self.generators.append(generator)
        self._by_name[name] = generator
        return generator

    def generator(self, name):
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownGeneratorError(name)

    def word(self, names):
        """Check and return C{names} as a word."""
        word = tuple(names)
        for name in word:
            if name not in self.objects:
                raise UnknownGeneratorError(name, "object")
        return word

    @property
    def degenerate(self):
        """Whether some generator has an empty domain or codomain."""
        return any(generator.degenerate for generator in self.generators)

    def slice_dom(self, piece):
        return piece.left + self.generator(piece.gen).dom + piece.right

    def slice_cod(self, piece):
        return piece.left + self.generator(piece.gen).cod + piece.right

    def _key(self):
        return (self.pcm.tag, self.objects, tuple(self.generators))

    def __eq__(self, other):
        return (isinstance(other, GradedSignature) and
                self._key() == other._key())

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "<GradedSignature over %s: %d objects, %d generators>" % (
            self.pcm.tag, len(self.objects), len(self.generators))
