"""Export a finite truncation of a free graded category as a table model.

Objects are the words of length at most C{max_word} plus an absorbing
object C{*} standing for every longer word. Arrows are the exchange classes
with at most C{max_slices} slices, labelled by their canonical form, plus an
absorbing label C{bot} per hom-set for everything longer. Both truncations
are ideals, so the quotient is again a graded monoidal category, provided
generators preserve word length.
"""

from itertools import product

from twisted.python import log

from gmc.exception import MalformedSpecError
from gmc.finmodel.model import FiniteGradedModel
from gmc.freecat.morphism import FreeMorphism, compose, regrade, tensor
from gmc.freecat.rewrite import canonical_form
from gmc.freecat.signature import Slice, format_word
from gmc.settings import Settings


__all__ = ["export_truncation", "morphism_label", "OVERFLOW", "BOTTOM",
           "IDENTITY"]


OVERFLOW = "*"
BOTTOM = "bot"
IDENTITY = "id"


def morphism_label(morphism):
    """Label a slice list as C{gen[position];...}, or C{id} when empty."""
    if not morphism.slices:
        return IDENTITY
    return ";".join("%s[%d]" % (piece.gen, piece.position)
                    for piece in morphism.slices)


def _words(objects, max_word):
    words = [()]
    layer = [()]
    for _ in range(max_word):
        layer = [word + (name,) for word in layer for name in objects]
        words.extend(layer)
    return words


class _Truncation(object):

    def __init__(self, signature, max_word, max_slices, settings):
        self.signature = signature
        self.pcm = signature.pcm
        self.max_word = max_word
        self.max_slices = max_slices
        self.settings = settings
        self.words = _words(signature.objects, max_word)
        self.names = dict((word, format_word(word)) for word in self.words)
        self.morphisms = {}

    def name(self, word):
        if len(word) > self.max_word:
            return OVERFLOW
        return self.names[word]

    def canonical(self, morphism):
        canonical = canonical_form(morphism, self.settings)
        self.morphisms[(canonical.grade, morphism_label(canonical),
                        canonical.dom)] = canonical
        return canonical

    def lookup(self, grade, label, word):
        return self.morphisms[(grade, label, word)]

    def enumerate(self, grade, word):
        """Return the canonical morphisms out of C{word} admissible at
        C{grade} with at most C{max_slices} slices."""
        pcm, signature = self.pcm, self.signature
        usable = [generator for generator in signature.generators
                  if pcm.leq(generator.grade, grade)]
        found = {}
        frontier = [((), word)]
        for depth in range(self.max_slices + 1):
            following = []
            for slices, current in frontier:
                morphism = FreeMorphism(signature, grade, word, current,
                                        slices)
                canonical = self.canonical(morphism)
                found[(canonical.cod, morphism_label(canonical))] = canonical
                if depth == self.max_slices:
                    continue
                for generator in usable:
                    width = len(generator.dom)
                    for position in range(len(current) - width + 1):
                        if current[position:position + width] != \
                                generator.dom:
                            continue
                        piece = Slice(current[:position], generator.name,
                                      current[position + width:])
                        following.append((slices + (piece,),
                                          signature.slice_cod(piece)))
            frontier = following
        return found


def _ordered(labels):
    return tuple(sorted(labels, key=lambda label: (
        label != IDENTITY, label.count(";"), label)))


def export_truncation(signature, max_word=2, max_slices=2, settings=None,
                      name=None):
    """Return the truncated free category of C{signature} as a model.

    @raises MalformedSpecError: If a generator changes word length.
    @raises InfiniteCarrierError: If the PCM is infinite.
    """
    settings = settings or Settings()
    for generator in signature.generators:
        if len(generator.dom) != len(generator.cod) or not generator.dom:
            raise MalformedSpecError(
                "Generator %s does not preserve word length" % (
                    generator.name,))
    truncation = _Truncation(signature, max_word, max_slices, settings)
    pcm = signature.pcm
    grades = pcm.elements()
    words = truncation.words
    objects = [truncation.name(word) for word in words] + [OVERFLOW]
    products = {}
    for x, y in product(words, repeat=2):
        products[(truncation.name(x), truncation.name(y))] = \
            truncation.name(x + y)
    for x in objects:
        products[(x, OVERFLOW)] = products[(OVERFLOW, x)] = OVERFLOW
    hom = {}
    for e in grades:
        for x, y in product(objects, repeat=2):
            hom[(e, x, y)] = ()
        hom[(e, OVERFLOW, OVERFLOW)] = (BOTTOM,)
        for x in words:
            found = truncation.enumerate(e, x)
            for y in words:
                if len(y) != len(x):
                    continue
                labels = [label for (cod, label) in found if cod == y]
                hom[(e, truncation.name(x), truncation.name(y))] = \
                    _ordered(labels) + (BOTTOM,)
    by_name = dict((truncation.name(word), word) for word in words)

    def morphism(e, x, label):
        return truncation.lookup(e, label, by_name[x])

    def labelled(candidate):
        if len(candidate) > max_slices:
            return BOTTOM
        return morphism_label(truncation.canonical(candidate))

    comp, regrades, tensors = {}, {}, {}
    for e in grades:
        for x, y, z in product(objects, repeat=3):
            for f in hom[(e, x, y)]:
                for g in hom[(e, y, z)]:
                    if BOTTOM in (f, g):
                        result = BOTTOM
                    else:
                        result = labelled(compose(morphism(e, x, f),
                                                  morphism(e, y, g)))
                    comp[(e, x, y, z, f, g)] = result
    for e, e2 in product(grades, repeat=2):
        if pcm.leq(e, e2):
            for x, y in product(objects, repeat=2):
                for f in hom[(e, x, y)]:
                    if f == BOTTOM:
                        result = BOTTOM
                    else:
                        result = labelled(regrade(morphism(e, x, f), e2))
                    regrades[(e, e2, x, y, f)] = result
        if not pcm.is_orthogonal(e, e2):
            continue
        for x, y, x2, y2 in product(objects, repeat=4):
            for f in hom[(e, x, y)]:
                for g in hom[(e2, x2, y2)]:
                    if BOTTOM in (f, g) or OVERFLOW in (products[(x, x2)],
                                                        products[(y, y2)]):
                        result = BOTTOM
                    else:
                        result = labelled(tensor(morphism(e, x, f),
                                                 morphism(e2, x2, g)))
                    tensors[(e, e2, x, y, x2, y2, f, g)] = result
    ids = dict((truncation.name(word), IDENTITY) for word in words)
    ids[OVERFLOW] = BOTTOM
    model = FiniteGradedModel(pcm, objects, products, truncation.name(()),
                              hom, ids, comp, regrades, tensors, None,
                              name or "free(%s)" % (pcm.tag,))
    log.msg("Exported %r" % (model,))
    return model
