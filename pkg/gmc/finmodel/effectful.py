"""Effectful categories and their translation to models graded by C{two}.

An effectful category pairs a monoidal category of values with a
premonoidal category of computations on the same objects, linked by an
identity-on-objects functor C{eta} whose image is central.
"""

from itertools import product

from twisted.python import log

from gmc.exception import AxiomFailureError, PcmMismatchError
from gmc.finmodel.axioms import check_axioms
from gmc.finmodel.model import FiniteGradedModel, format_coordinates
from gmc.finmodel.views import monoidal_view, premonoidal_view
from gmc.pcm.model import TwoPCM
from gmc.report import Report


__all__ = ["EffectfulCategory", "to_effectful", "from_effectful"]


def _cex(*items):
    return format_coordinates(items)


class EffectfulCategory(object):
    """A strict effectful category.

    @param value: The L{MonoidalCategory} of pure morphisms.
    @param computation: The L{PremonoidalCategory} of effectful morphisms,
        on the same object monoid.
    @param eta: A C{dict} sending C{(x, y, f)} for a value C{f} to its
        computation label.
    @param check: Whether to validate on construction.
    @raises AxiomFailureError: If C{check} is set and an axiom fails.
    """

    def __init__(self, value, computation, eta, name="effectful", check=True):
        self.value = value
        self.computation = computation
        self.eta = dict(eta)
        self.name = name
        if check:
            self.validate()

    def apply(self, x, y, f):
        return self.eta[(x, y, f)]

    def check(self):
        """Check both categories and the laws tying them together."""
        value, computation = self.value, self.computation
        report = Report(self.name)
        report.declare("Objects", "Eta-Functor", "Eta-Whisker", "Eta-Central")
        report.extend(value.check(), "Value-")
        report.extend(computation.check(), "Computation-")
        same = ((value.objects, value.products, value.unit) ==
                (computation.objects, computation.products, computation.unit))
        report.record("Objects", same, "(%s)" % (computation.name,))
        if not same:
            return report
        for x, y, f in value.arrows():
            if self.eta.get((x, y, f)) not in computation.homset(x, y):
                report.fail("Eta-Functor", _cex(x, y, f))
        if not report.passed:
            return report
        for x in value.objects:
            report.record("Eta-Functor",
                          self.apply(x, x, value.identity(x)) ==
                          computation.identity(x), _cex(x))
        for x, y, z in product(value.objects, repeat=3):
            for f in value.homset(x, y):
                for g in value.homset(y, z):
                    report.record(
                        "Eta-Functor",
                        self.apply(x, z, value.compose(x, y, z, f, g)) ==
                        computation.compose(x, y, z, self.apply(x, y, f),
                                            self.apply(y, z, g)),
                        _cex(x, y, z, f, g))
        otimes = value.otimes
        for w in value.objects:
            identity = value.identity(w)
            for x, y, f in value.arrows():
                image = self.apply(x, y, f)
                report.record(
                    "Eta-Whisker",
                    self.apply(otimes(w, x), otimes(w, y),
                               value.tensor(w, w, x, y, identity, f)) ==
                    computation.left_whisker(w, x, y, image) and
                    self.apply(otimes(x, w), otimes(y, w),
                               value.tensor(x, y, w, w, f, identity)) ==
                    computation.right_whisker(x, y, w, image),
                    _cex(w, x, y, f))
        for x, y, f in value.arrows():
            report.record("Eta-Central",
                          computation.is_central(x, y, self.apply(x, y, f)),
                          _cex(x, y, f))
        if value.braiding is not None:
            report.declare("Eta-Braid")
            for x, y in product(value.objects, repeat=2):
                expected = (None if computation.braiding is None else
                            computation.sigma(x, y))
                report.record("Eta-Braid",
                              self.apply(otimes(x, y), otimes(y, x),
                                         value.sigma(x, y)) == expected,
                              _cex(x, y))
        return report

    def validate(self):
        report = self.check()
        if not report.passed:
            raise AxiomFailureError(report)

    def __eq__(self, other):
        return (isinstance(other, EffectfulCategory) and
                (self.value, self.computation, self.eta) ==
                (other.value, other.computation, other.eta))

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "<EffectfulCategory %s>" % (self.name,)


def _require_two(model):
    if model.pcm.kind != "two":
        raise PcmMismatchError(model.pcm, TwoPCM())


def to_effectful(model):
    """Read a C{two}-graded model as an effectful category.

    Values are the grade-0 arrows, computations the grade-1 arrows and
    C{eta} is regrading along C{0 <= 1}.

    @raises PcmMismatchError: If the model is not graded by C{two}.
    @raises AxiomFailureError: If the model fails its axioms.
    """
    _require_two(model)
    report = check_axioms(model)
    if not report.passed:
        raise AxiomFailureError(report)
    zero, one = model.pcm.elements()
    eta = {}
    for x, y, f in model.arrows(zero):
        eta[(x, y, f)] = model.regrade(zero, one, x, y, f)
    log.msg("Translating %s to an effectful category" % (model.name,))
    return EffectfulCategory(monoidal_view(model, zero),
                             premonoidal_view(model, one), eta, model.name)


def from_effectful(effectful):
    """Build the C{two}-graded model of an effectful category.

    Mixed tensors come from whiskering:
    C{f ⊗(0,1) g = (eta(f) ⋊ x2) ; (y ⋉ g)} and
    C{f ⊗(1,0) g = (f ⋊ x2) ; (y ⋉ eta(g))}.

    @raises AxiomFailureError: If C{effectful} fails its axioms.
    """
    effectful.validate()
    value, computation = effectful.value, effectful.computation
    pcm = TwoPCM()
    zero, one = pcm.elements()
    objects, otimes = value.objects, value.otimes
    hom, comp, regrades, tensors = {}, {}, {}, {}
    for grade, category in ((zero, value), (one, computation)):
        for x, y in product(objects, repeat=2):
            hom[(grade, x, y)] = category.homset(x, y)
        for (x, y, z, f, g), h in category.comp.items():
            comp[(grade, x, y, z, f, g)] = h
    for (x, y, f), image in effectful.eta.items():
        regrades[(zero, one, x, y, f)] = image
    for (x, y, x2, y2, f, g), h in value.tensors.items():
        tensors[(zero, zero, x, y, x2, y2, f, g)] = h
    for x, y, f in value.arrows():
        image = effectful.apply(x, y, f)
        for x2, y2, g in computation.arrows():
            tensors[(zero, one, x, y, x2, y2, f, g)] = computation.compose(
                otimes(x, x2), otimes(y, x2), otimes(y, y2),
                computation.right_whisker(x, y, x2, image),
                computation.left_whisker(y, x2, y2, g))
    for x, y, f in computation.arrows():
        for x2, y2, g in value.arrows():
            tensors[(one, zero, x, y, x2, y2, f, g)] = computation.compose(
                otimes(x, x2), otimes(y, x2), otimes(y, y2),
                computation.right_whisker(x, y, x2, f),
                computation.left_whisker(y, x2, y2,
                                         effectful.apply(x2, y2, g)))
    return FiniteGradedModel(pcm, objects, value.products, value.unit, hom,
                             value.ids, comp, regrades, tensors,
                             value.braiding, effectful.name)
