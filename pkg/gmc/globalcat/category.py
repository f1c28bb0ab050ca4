"""The global category: morphisms of every grade in one category.

A global morphism is a pair of a grade and a morphism at that grade. Pairs
related by regrading are identified, which is decidable once both sides are
regraded to a grade above every exchange that could ever apply.

Both free categories and finite models provide the graded hom-sets, through
L{FreeHoms} and L{ModelHoms}.
"""

from itertools import product

from twisted.python import log

from gmc.exception import (
    IllFormedError, NoJoinError, NotDirectedError, NotLeqError, NotTotalError,
    TypeMismatchError)
from gmc.freecat import morphism as free
from gmc.freecat.rewrite import equal_at
from gmc.freecat.signature import format_word


__all__ = ["GlobalMorphism", "FreeHoms", "ModelHoms", "global_identity",
           "global_compose", "global_tensor", "quotient_equal",
           "stabilization_grade", "to_top", "from_top"]


class FreeHoms(object):
    """Graded hom-sets of the free category over C{signature}.

    Bodies are L{FreeMorphism}s whose ambient grade is the global grade.
    """

    def __init__(self, signature, settings=None):
        self.signature = signature
        self.pcm = signature.pcm
        self.settings = settings

    def check(self, grade, body):
        if body.grade != grade:
            raise IllFormedError("Body is at grade %s, not %s" % (
                body.grade, grade))

    def dom(self, body):
        return body.dom

    def cod(self, body):
        return body.cod

    def format_object(self, word):
        return format_word(word)

    def identity(self, word):
        return free.identity(self.signature, word)

    def regrade(self, body, source, target):
        return free.regrade(body, target)

    def compose(self, first, second, grade):
        return free.compose(first, second)

    def tensor(self, first, a, second, b):
        return free.tensor(first, second)

    def same(self, first, second, grade):
        return equal_at(first, second, grade, self.settings)

    def grades(self, body):
        """The grades an exchange inside C{body} may need to cover."""
        pcm = self.pcm
        found = list(body.grades())
        for left, right in product(body.grades(), repeat=2):
            total = pcm.add(left, right)
            if total is not None:
                found.append(total)
        return found


class ModelHoms(object):
    """Graded hom-sets of a L{FiniteGradedModel}.

    Bodies are C{(source, target, label)} triples.
    """

    def __init__(self, model):
        self.model = model
        self.pcm = model.pcm

    def check(self, grade, body):
        x, y, label = body
        if label not in self.model.homset(grade, x, y):
            raise IllFormedError("No such arrow", (grade, x, y, label))

    def dom(self, body):
        return body[0]

    def cod(self, body):
        return body[1]

    def format_object(self, x):
        return x

    def identity(self, x):
        return (x, x, self.model.identity(x))

    def regrade(self, body, source, target):
        x, y, label = body
        return (x, y, self.model.regrade(source, target, x, y, label))

    def compose(self, first, second, grade):
        x, y, f = first
        _, z, g = second
        return (x, z, self.model.compose(grade, x, y, z, f, g))

    def tensor(self, first, a, second, b):
        model = self.model
        (x, y, f), (x2, y2, g) = first, second
        return (model.otimes(x, x2), model.otimes(y, y2),
                model.tensor(a, b, x, y, x2, y2, f, g))

    def same(self, first, second, grade):
        return first == second

    def grades(self, body):
        return []


class GlobalMorphism(object):
    """A morphism C{dom -> cod} of the global category.

    @ivar homs: The L{FreeHoms} or L{ModelHoms} the body belongs to.
    @ivar grade: The grade the body lives at.
    @ivar body: The morphism itself.
    """

    def __init__(self, homs, grade, body):
        homs.pcm._own(grade)
        homs.check(grade, body)
        self.homs = homs
        self.grade = grade
        self.body = body

    @property
    def dom(self):
        return self.homs.dom(self.body)

    @property
    def cod(self):
        return self.homs.cod(self.body)

    def regrade(self, grade):
        """@raises NotLeqError: If C{grade} does not extend the grade."""
        if not self.homs.pcm.leq(self.grade, grade):
            raise NotLeqError(self.grade, grade)
        return GlobalMorphism(self.homs, grade,
                              self.homs.regrade(self.body, self.grade, grade))

    def __eq__(self, other):
        return (isinstance(other, GlobalMorphism) and
                (self.grade, self.body) == (other.grade, other.body))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.grade, self.body))

    def __repr__(self):
        return "<GlobalMorphism %s -> %s @ %s>" % (
            self.homs.format_object(self.dom),
            self.homs.format_object(self.cod), self.grade)


def global_identity(homs, x):
    """Return C{(0, id_x)}."""
    return GlobalMorphism(homs, homs.pcm.zero, homs.identity(x))


def _check_boundary(homs, expected, actual):
    if expected != actual:
        raise TypeMismatchError(homs.format_object(expected),
                                homs.format_object(actual))


def global_compose(first, second, op, settings=None):
    """Compose C{first} then C{second} at C{op} of their grades.

    @raises TypeMismatchError: If the boundaries do not meet.
    @raises OpInvalidError: If C{op} is not upper-bounding.
    """
    homs = first.homs
    _check_boundary(homs, first.cod, second.dom)
    op.validate(settings)
    grade = op(first.grade, second.grade)
    body = homs.compose(first.regrade(grade).body,
                        second.regrade(grade).body, grade)
    return GlobalMorphism(homs, grade, body)


def global_tensor(first, second):
    """Tensor two global morphisms at the sum of their grades.

    @raises NotTotalError: If the PCM is partial.
    """
    homs = first.homs
    pcm = homs.pcm
    if not pcm.is_total:
        raise NotTotalError(pcm)
    grade = pcm.add(first.grade, second.grade)
    return GlobalMorphism(homs, grade,
                          homs.tensor(first.body, first.grade, second.body,
                                      second.grade))


def stabilization_grade(*morphisms):
    """Return a grade above every grade an exchange between the bodies of
    C{morphisms} may need.

    Over a PCM with a top this is the top. Otherwise it is the join of the
    global grades and of every defined sum of two slice grades.

    @raises NotDirectedError: If no common upper bound can be computed.
    """
    homs = morphisms[0].homs
    pcm = homs.pcm
    if pcm.has_top():
        return pcm.top()
    grade = pcm.zero
    try:
        for morphism in morphisms:
            for other in [morphism.grade] + homs.grades(morphism.body):
                grade = pcm.join(grade, other)
    except NoJoinError:
        raise NotDirectedError("%s has no common upper bounds" % (pcm.tag,))
    return grade


def quotient_equal(first, second):
    """Decide whether two global morphisms are identified by regrading.

    @raises TypeMismatchError: If the boundaries differ.
    @raises NotDirectedError: If the PCM is not directed.
    """
    homs = first.homs
    _check_boundary(homs, first.dom, second.dom)
    _check_boundary(homs, first.cod, second.cod)
    grade = stabilization_grade(first, second)
    log.msg("Comparing global morphisms at %s" % (grade,))
    return homs.same(first.regrade(grade).body, second.regrade(grade).body,
                     grade)


def to_top(morphism):
    """Return the body of C{morphism} regraded to the top.

    @raises NoTopError: If the PCM has no top.
    """
    return morphism.regrade(morphism.homs.pcm.top()).body


def from_top(homs, body):
    """Tag a body at the top grade as a global morphism.

    @raises NoTopError: If the PCM has no top.
    """
    return GlobalMorphism(homs, homs.pcm.top(), body)
