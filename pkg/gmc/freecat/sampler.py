"""Seeded random generation of words and free morphisms."""

from itertools import product

from gmc.freecat.morphism import FreeMorphism
from gmc.freecat.rewrite import successors
from gmc.freecat.signature import Slice
from gmc.settings import Settings


__all__ = ["Sampler"]


class Sampler(object):
    """Draw well-typed instances from a signature.

    @param signature: The L{GradedSignature} to draw from.
    @param settings: The L{Settings} whose seed drives the draws.
    @param salt: Distinguishes independent streams for the same seed.
    """

    def __init__(self, signature, settings=None, salt=""):
        self.signature = signature
        self.pcm = signature.pcm
        self.settings = settings or Settings()
        self.rng = self.settings.random("%s:%s" % (salt, signature.pcm.tag))
        self._grades = self._interesting_grades()

    def _interesting_grades(self):
        pcm = self.pcm
        if pcm.finite:
            return list(pcm.elements())
        grades = [pcm.zero]
        for generator in self.signature.generators:
            if generator.grade not in grades:
                grades.append(generator.grade)
        base = list(grades)
        for a, b in product(base, repeat=2):
            total = pcm.add(a, b)
            if total is not None and total not in grades:
                grades.append(total)
        return grades

    def grade(self):
        return self.rng.choice(self._grades)

    def grade_above(self, grade):
        """Return a grade extending C{grade}."""
        candidates = [other for other in self._grades
                      if self.pcm.leq(grade, other)]
        if not candidates:
            return grade
        return self.rng.choice(candidates)

    def orthogonal_grades(self):
        """Return a pair of grades whose sum is defined."""
        pairs = [(a, b) for a in self._grades for b in self._grades
                 if self.pcm.is_orthogonal(a, b)]
        return self.rng.choice(pairs)

    def word(self, max_length=3):
        objects = self.signature.objects
        length = self.rng.randint(0, max_length)
        return tuple(self.rng.choice(objects) for _ in range(length))

    def source_word(self):
        """A word made of generator domains and objects, so slices apply."""
        pieces = self.rng.randint(1, 3)
        word = ()
        for _ in range(pieces):
            if self.signature.generators and self.rng.random() < 0.7:
                word += self.rng.choice(self.signature.generators).dom
            elif self.signature.objects:
                word += (self.rng.choice(self.signature.objects),)
        return word

    def morphism(self, grade=None, dom=None, max_slices=4):
        """Draw a morphism admissible at C{grade} starting from C{dom}."""
        if grade is None:
            grade = self.grade()
        if dom is None:
            dom = self.source_word()
        usable = [generator for generator in self.signature.generators
                  if self.pcm.leq(generator.grade, grade)]
        count = self.rng.randint(0, max_slices)
        current = tuple(dom)
        slices = []
        for _ in range(count):
            options = []
            for generator in usable:
                width = len(generator.dom)
                for position in range(len(current) - width + 1):
                    if current[position:position + width] == generator.dom:
                        options.append((position, generator))
            if not options:
                break
            position, generator = self.rng.choice(options)
            piece = Slice(current[:position], generator.name,
                          current[position + len(generator.dom):])
            slices.append(piece)
            current = self.signature.slice_cod(piece)
        return FreeMorphism(self.signature, grade, dom, current, slices)

    def composable(self, grade=None, count=2):
        """Draw C{count} morphisms at one grade, each starting where the
        previous one ends."""
        if grade is None:
            grade = self.grade()
        morphisms = [self.morphism(grade)]
        while len(morphisms) < count:
            morphisms.append(self.morphism(grade, morphisms[-1].cod))
        return morphisms

    def pair(self, max_slices=6):
        """Draw two morphisms with the same boundary and ambient grade.

        The second reshuffles the first by exchange moves taken at random
        grades above the ambient one, so both equal and unequal pairs occur.
        """
        grade = self.grade()
        first = self.morphism(grade, max_slices=max_slices)
        slices = first.slices
        for _ in range(self.rng.randint(0, 6)):
            options = list(successors(self.signature, slices,
                                      self.grade_above(grade)))
            if not options:
                break
            slices = self.rng.choice(options)
        second = FreeMorphism(self.signature, grade, first.dom, first.cod,
                              slices)
        return first, second
