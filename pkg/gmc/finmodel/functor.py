"""Graded functors between finite models, reindexing and the coreflection.

A graded functor sits over a PCM homomorphism C{phi} and sends arrows of
grade C{e} to arrows of grade C{phi(e)}. Reindexing a model along C{phi}
reads the hom-set at C{e} from the one at C{phi(e)}; reindexing along the
top-preserving map out of C{two} is the coreflection.
"""

from itertools import product

from twisted.python import log

from gmc.exception import (
    EnumerationTooLargeError, InvalidHomError, PcmMismatchError)
from gmc.finmodel.model import FiniteGradedModel, format_coordinates
from gmc.pcm.laws import check_hom
from gmc.pcm.model import PcmHomomorphism, identity_hom, top_preserving_hom
from gmc.report import Report
from gmc.settings import Settings


__all__ = ["GradedFunctorData", "check_graded_functor", "identity_functor",
           "compose_functors", "pullback", "coreflect", "check_couniversal",
           "FUNCTOR_LAWS"]


FUNCTOR_LAWS = ("PCM-Hom", "Object-Monoid", "Hom-Typing", "Functoriality",
                "Tensor", "Regrade")


def _cex(*items):
    return format_coordinates(items)


class GradedFunctorData(object):
    """A candidate graded functor, checked by L{check_graded_functor}.

    @param source: The source L{FiniteGradedModel}.
    @param target: The target L{FiniteGradedModel}.
    @param phi: The L{PcmHomomorphism} between their PCMs.
    @param objects: A C{dict} mapping source objects to target objects.
    @param labels: A C{dict} mapping C{(e, x, y, f)} to a target label.
    """

    def __init__(self, source, target, phi, objects, labels, name="functor"):
        self.source = source
        self.target = target
        self.phi = phi
        self.objects = dict(objects)
        self.labels = dict(labels)
        self.name = name

    def map_object(self, x):
        return self.objects[x]

    def apply(self, e, x, y, f):
        return self.labels[(e, x, y, f)]

    def replace(self, **changes):
        arguments = dict(source=self.source, target=self.target,
                         phi=self.phi, objects=self.objects,
                         labels=self.labels, name=self.name)
        arguments.update(changes)
        return GradedFunctorData(**arguments)

    def mutate(self, key, label):
        """Return a copy where the arrow C{key} is sent to C{label}."""
        labels = dict(self.labels)
        labels[key] = label
        return self.replace(labels=labels)

    def __repr__(self):
        return "<GradedFunctorData %s: %s -> %s>" % (
            self.name, self.source.name, self.target.name)


def identity_functor(model):
    labels = dict(((e, x, y, f), f) for e in model.grades
                  for x, y, f in model.arrows(e))
    return GradedFunctorData(model, model, identity_hom(model.pcm),
                             dict((x, x) for x in model.objects), labels,
                             "id")


def compose_functors(first, second):
    """Return C{second ∘ first}."""
    phi1, phi2 = first.phi, second.phi
    phi = PcmHomomorphism(phi1.source, phi2.target,
                          lambda grade: phi2(phi1(grade)),
                          "%s.%s" % (phi2.name, phi1.name))
    objects = dict((x, second.map_object(image))
                   for x, image in first.objects.items())
    labels = {}
    for (e, x, y, f), image in first.labels.items():
        labels[(e, x, y, f)] = second.apply(
            phi1(e), first.map_object(x), first.map_object(y), image)
    return GradedFunctorData(first.source, second.target, phi, objects,
                             labels, "%s.%s" % (second.name, first.name))


def check_graded_functor(functor, settings=None):
    """Check that C{functor} is a strict graded monoidal functor.

    Typing failures make the equational laws meaningless, so those are then
    reported as skipped.
    """
    source, target, phi = functor.source, functor.target, functor.phi
    report = Report(functor.name)
    report.declare(*FUNCTOR_LAWS)
    if phi.source != source.pcm or phi.target != target.pcm:
        report.fail("PCM-Hom", "(%s -> %s)" % (phi.source.tag,
                                              phi.target.tag))
    else:
        for check in check_hom(phi, settings).failures():
            report.fail("PCM-Hom", check.line())
    _check_objects(functor, report)
    if report.check("Object-Monoid").passed:
        _check_typing(functor, report)
    else:
        report.skip("Hom-Typing")
    if not report.passed:
        for name in FUNCTOR_LAWS[3:]:
            report.skip(name)
        return report
    _check_functoriality(functor, report)
    _check_tensor(functor, report)
    _check_regrade(functor, report)
    return report


def _check_objects(functor, report):
    source, target = functor.source, functor.target
    for x in source.objects:
        if functor.objects.get(x) not in target.objects:
            report.fail("Object-Monoid", _cex(x))
            return
    report.record("Object-Monoid",
                  functor.map_object(source.unit) == target.unit,
                  _cex(source.unit))
    for x, y in product(source.objects, repeat=2):
        report.record("Object-Monoid",
                      functor.map_object(source.otimes(x, y)) ==
                      target.otimes(functor.map_object(x),
                                    functor.map_object(y)), _cex(x, y))


def _check_typing(functor, report):
    source, target, phi = functor.source, functor.target, functor.phi
    for e in source.grades:
        for x, y, f in source.arrows(e):
            image = functor.labels.get((e, x, y, f))
            report.record(
                "Hom-Typing",
                image in target.homset(phi(e), functor.map_object(x),
                                       functor.map_object(y)),
                _cex(e, x, y, f))


def _check_functoriality(functor, report):
    source, target, phi = functor.source, functor.target, functor.phi
    m = functor.map_object
    for x in source.objects:
        report.record("Functoriality",
                      functor.apply(source.zero, x, x, source.identity(x)) ==
                      target.identity(m(x)), _cex(x))
    for e in source.grades:
        for x, y, z in product(source.objects, repeat=3):
            for f in source.homset(e, x, y):
                for g in source.homset(e, y, z):
                    left = functor.apply(e, x, z,
                                         source.compose(e, x, y, z, f, g))
                    right = target.compose(phi(e), m(x), m(y), m(z),
                                           functor.apply(e, x, y, f),
                                           functor.apply(e, y, z, g))
                    report.record("Functoriality", left == right,
                                  _cex(e, x, y, z, f, g))


def _check_tensor(functor, report):
    source, target, phi = functor.source, functor.target, functor.phi
    m = functor.map_object
    for e, e2, total in source.orthogonal_pairs():
        for x, y, f in source.arrows(e):
            for x2, y2, g in source.arrows(e2):
                left = functor.apply(
                    total, source.otimes(x, x2), source.otimes(y, y2),
                    source.tensor(e, e2, x, y, x2, y2, f, g))
                right = target.tensor(phi(e), phi(e2), m(x), m(y), m(x2),
                                      m(y2), functor.apply(e, x, y, f),
                                      functor.apply(e2, x2, y2, g))
                report.record("Tensor", left == right,
                              _cex(e, e2, x, y, x2, y2, f, g))


def _check_regrade(functor, report):
    source, target, phi = functor.source, functor.target, functor.phi
    m = functor.map_object
    for e, e2 in source.leq_pairs():
        for x, y, f in source.arrows(e):
            left = functor.apply(e2, x, y, source.regrade(e, e2, x, y, f))
            right = target.regrade(phi(e), phi(e2), m(x), m(y),
                                   functor.apply(e, x, y, f))
            report.record("Regrade", left == right, _cex(e, e2, x, y, f))


def pullback(model, phi, settings=None, name=None):
    """Reindex C{model} along C{phi}, a homomorphism into its PCM.

    @raises PcmMismatchError: If C{phi} does not land in the model's PCM.
    @raises InvalidHomError: If C{phi} fails the homomorphism laws.
    @raises InfiniteCarrierError: If the source of C{phi} is infinite.
    """
    if phi.target != model.pcm:
        raise PcmMismatchError(phi.target, model.pcm)
    failures = check_hom(phi, settings).failures()
    if failures:
        raise InvalidHomError("%s is not a homomorphism: %s" % (
            phi.name, failures[0].line()))
    pcm = phi.source
    grades = pcm.elements()
    objects = model.objects
    hom, comp, regrades, tensors = {}, {}, {}, {}
    for e in grades:
        image = phi(e)
        for x, y in product(objects, repeat=2):
            hom[(e, x, y)] = model.homset(image, x, y)
        for x, y, z in product(objects, repeat=3):
            for f in model.homset(image, x, y):
                for g in model.homset(image, y, z):
                    comp[(e, x, y, z, f, g)] = model.compose(image, x, y, z,
                                                             f, g)
    for e in grades:
        for e2 in grades:
            if not pcm.leq(e, e2):
                continue
            for x, y, f in model.arrows(phi(e)):
                regrades[(e, e2, x, y, f)] = model.regrade(phi(e), phi(e2),
                                                           x, y, f)
    for e, e2 in product(grades, repeat=2):
        if not pcm.is_orthogonal(e, e2):
            continue
        for x, y, f in model.arrows(phi(e)):
            for x2, y2, g in model.arrows(phi(e2)):
                tensors[(e, e2, x, y, x2, y2, f, g)] = model.tensor(
                    phi(e), phi(e2), x, y, x2, y2, f, g)
    log.msg("Pulled %s back along %s" % (model.name, phi.name))
    return FiniteGradedModel(pcm, objects, model.products, model.unit, hom,
                             model.ids, comp, regrades, tensors,
                             model.braiding,
                             name or "%s*%s" % (phi.name, model.name))


def coreflect(model, settings=None):
    """Return the C{two}-graded coreflection of C{model} and its counit.

    The result keeps the grade-0 arrows at 0 and the top-grade arrows at 1;
    the counit is the identity on objects and labels.

    @raises NoTopError: If the model's PCM has no top.
    """
    phi = top_preserving_hom(model.pcm)
    reflected = pullback(model, phi, settings, "R(%s)" % (model.name,))
    labels = {}
    for e in reflected.grades:
        for x, y, f in reflected.arrows(e):
            labels[(e, x, y, f)] = f
    counit = GradedFunctorData(reflected, model, phi,
                               dict((x, x) for x in model.objects), labels,
                               "counit")
    return reflected, counit


def _same_functor(first, second):
    if first.objects != second.objects or first.labels != second.labels:
        return False
    return all(first.phi(e) == second.phi(e) for e in first.source.grades)


def check_couniversal(model, source, functor, settings=None):
    """Check that C{functor} factors uniquely through the coreflection.

    @param model: The target model, over a PCM with a top.
    @param source: A model over C{two}.
    @param functor: A L{GradedFunctorData} from C{source} to C{model}.
    @raises EnumerationTooLargeError: If the candidate factorizations are
        too many to enumerate.
    """
    settings = settings or Settings()
    report = Report("couniversal %s" % (functor.name,))
    report.declare("Precondition", "Existence", "Factorization", "Uniqueness")
    reflected, counit = coreflect(model, settings)
    top = model.pcm.top()
    ok = (functor.source is source or functor.source == source) and (
        functor.target is model or functor.target == model)
    if ok:
        failures = check_graded_functor(functor, settings).failures()
        ok = not failures
        cex = "(%s)" % (failures[0].name,) if failures else None
    else:
        cex = "(%s)" % (functor.name,)
    if ok and functor.phi(source.pcm.top()) != top:
        ok, cex = False, "(%s)" % (functor.phi(source.pcm.top()),)
    report.record("Precondition", ok, cex)
    if not ok:
        for name in ("Existence", "Factorization", "Uniqueness"):
            report.skip(name)
        return report
    lifted = GradedFunctorData(source, reflected, identity_hom(source.pcm),
                               functor.objects, functor.labels, "lift")
    failures = check_graded_functor(lifted, settings).failures()
    report.record("Existence", not failures,
                  "(%s)" % (failures[0].name,) if failures else None)
    report.record("Factorization",
                  _same_functor(compose_functors(lifted, counit), functor),
                  "(%s)" % (functor.name,))
    count = _count_factorizations(source, reflected, counit, functor,
                                  settings)
    report.fact("factorizations", count)
    report.record("Uniqueness", count == 1, "(%d)" % (count,))
    return report


def _count_factorizations(source, reflected, counit, functor, settings):
    arrows, choices, total = [], [], 1
    m = functor.map_object
    for e in source.grades:
        for x, y, f in source.arrows(e):
            candidates = reflected.homset(e, m(x), m(y))
            if len(candidates) > settings.enumeration_labels:
                raise EnumerationTooLargeError(
                    "Hom-set %s has %d labels, more than %d" % (
                        _cex(e, m(x), m(y)), len(candidates),
                        settings.enumeration_labels))
            arrows.append((e, x, y, f))
            choices.append(candidates)
            total *= len(candidates)
    if total > settings.enumeration_limit:
        raise EnumerationTooLargeError(
            "%d candidate functors, more than %d" % (
                total, settings.enumeration_limit))
    log.msg("Enumerating %d candidate factorizations" % (total,))
    identity = identity_hom(source.pcm)
    count = 0
    for images in product(*choices):
        candidate = GradedFunctorData(source, reflected, identity,
                                      functor.objects,
                                      dict(zip(arrows, images)), "candidate")
        if not _same_functor(compose_functors(candidate, counit), functor):
            continue
        if check_graded_functor(candidate, settings).passed:
            count += 1
    return count
