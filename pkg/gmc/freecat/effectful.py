"""The pure/effectful reading of a free category over a PCM with a top."""

from gmc.freecat.morphism import compose, identity, regrade, tensor
from gmc.freecat.rewrite import equal_at


__all__ = ["EffectfulView", "effectful_view", "interchange_forms"]


class EffectfulView(object):
    """Pure morphisms live at grade 0, effectful ones at the top grade.

    @param signature: A L{GradedSignature} over a PCM with a top element.
    @raises NoTopError: If the PCM has no top.
    """

    def __init__(self, signature, settings=None):
        self.signature = signature
        self.settings = settings
        self.zero = signature.pcm.zero
        self.top = signature.pcm.top()

    def pure(self, morphism):
        return regrade(morphism, self.zero)

    def effectful(self, morphism):
        return regrade(morphism, self.top)

    def include(self, morphism):
        """The inclusion of a pure morphism into the effectful level."""
        return regrade(self.pure(morphism), self.top)

    def compose(self, first, second):
        return compose(self.effectful(first), self.effectful(second))

    def tensor(self, left, right):
        """Tensor two effectful morphisms.

        @raises NonOrthogonalGradesError: If the top is not orthogonal to
            itself.
        """
        return tensor(self.effectful(left), self.effectful(right))

    def left_whisker(self, word, morphism):
        """Return C{word ⋉ morphism}, the morphism with wires on its left."""
        return self.effectful(tensor(identity(self.signature, word),
                                     morphism))

    def right_whisker(self, morphism, word):
        return self.effectful(tensor(morphism,
                                     identity(self.signature, word)))

    def interchanges(self, first, second):
        """Whether C{first} and C{second} commute past each other.

        Both orders, C{(first ⋊ X');(Y ⋉ second)} and
        C{(X ⋉ second);(first ⋊ Y')}, are compared at the top grade.
        """
        one = compose(self.right_whisker(first, second.dom),
                      self.left_whisker(first.cod, second))
        other = compose(self.left_whisker(first.dom, second),
                        self.right_whisker(first, second.cod))
        return equal_at(one, other, self.top, self.settings)

    def is_central(self, morphism, others):
        return all(self.interchanges(morphism, other) and
                   self.interchanges(other, morphism) for other in others)


def effectful_view(signature, settings=None):
    return EffectfulView(signature, settings)


def interchange_forms(pure, effect):
    """Return the three composites of a grade-0 and a graded morphism.

    C{(pure ⊗ id);(id ⊗ effect)}, C{(id ⊗ effect);(pure ⊗ id)} and
    C{pure ⊗ effect}, all at the grade of C{effect}.
    """
    signature = pure.signature
    grade = effect.grade
    pure = regrade(pure, signature.pcm.zero)
    first = compose(
        regrade(tensor(pure, identity(signature, effect.dom)), grade),
        tensor(identity(signature, pure.cod), effect))
    second = compose(
        tensor(identity(signature, pure.dom), effect),
        regrade(tensor(pure, identity(signature, effect.cod)), grade))
    return first, second, tensor(pure, effect)
