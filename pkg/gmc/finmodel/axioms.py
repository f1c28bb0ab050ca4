"""Exhaustive axiom checks on finite graded models.

Instances are scanned grades first, then objects, then labels, so the first
failure recorded for each axiom is the least counterexample in that order.
"""

from itertools import product

from twisted.python import log

from gmc.exception import NoBraidingError
from gmc.finmodel.model import format_coordinates
from gmc.report import Report


__all__ = ["AXIOMS", "check_axioms", "check_derived", "check_symmetric"]


AXIOMS = ("Category", "Reg-Functor", "Reg-Act", "Reg-⊗", "⊗-U-A", "⊗-ID",
          "Inter")


def _cex(*items):
    return format_coordinates(items)


def check_axioms(model):
    """Check the axioms of an E-graded monoidal category on C{model}."""
    report = Report(model.name)
    report.declare(*AXIOMS)
    _check_category(model, report)
    _check_regrade_functor(model, report)
    _check_regrade_action(model, report)
    _check_regrade_tensor(model, report)
    _check_tensor_unit_associativity(model, report)
    _check_tensor_identity(model, report)
    _check_interchange(model, report)
    if not report.passed:
        log.msg("Model %s fails %s" % (
            model.name, ", ".join(check.name for check in report.failures())))
    return report


def _check_category(model, report):
    objects = model.objects
    for e in model.grades:
        for x, y, f in model.arrows(e):
            left = model.compose(e, x, x, y, model.identity(x, e), f)
            right = model.compose(e, x, y, y, f, model.identity(y, e))
            report.record("Category", left == f == right, _cex(e, x, y, f))
        for x, y, z, w in product(objects, repeat=4):
            for f in model.homset(e, x, y):
                for g in model.homset(e, y, z):
                    fg = model.compose(e, x, y, z, f, g)
                    for h in model.homset(e, z, w):
                        report.record(
                            "Category",
                            model.compose(e, x, z, w, fg, h) ==
                            model.compose(e, x, y, w, f,
                                          model.compose(e, y, z, w, g, h)),
                            _cex(e, x, y, z, w, f, g, h))


def _check_regrade_functor(model, report):
    for e, e2 in model.leq_pairs():
        for x in model.objects:
            report.record("Reg-Functor",
                          model.regrade(e, e2, x, x, model.identity(x, e)) ==
                          model.identity(x, e2), _cex(e, e2, x))
        for x, y, z in product(model.objects, repeat=3):
            for f in model.homset(e, x, y):
                for g in model.homset(e, y, z):
                    left = model.regrade(e, e2, x, z,
                                         model.compose(e, x, y, z, f, g))
                    right = model.compose(e2, x, y, z,
                                          model.regrade(e, e2, x, y, f),
                                          model.regrade(e, e2, y, z, g))
                    report.record("Reg-Functor", left == right,
                                  _cex(e, e2, x, y, z, f, g))


def _check_regrade_action(model, report):
    pcm = model.pcm
    for e in model.grades:
        for x, y, f in model.arrows(e):
            report.record("Reg-Act", model.regrade(e, e, x, y, f) == f,
                          _cex(e, e, x, y, f))
    for e, e2 in model.leq_pairs():
        for e3 in model.grades:
            if not pcm.leq(e2, e3):
                continue
            for x, y, f in model.arrows(e):
                twice = model.regrade(e2, e3, x, y,
                                      model.regrade(e, e2, x, y, f))
                report.record("Reg-Act",
                              twice == model.regrade(e, e3, x, y, f),
                              _cex(e, e2, e3, x, y, f))


def _check_regrade_tensor(model, report):
    pcm = model.pcm
    for e, e2 in model.leq_pairs():
        for d, d2 in model.leq_pairs():
            if not pcm.is_orthogonal(e2, d2):
                continue
            source, target = pcm.add(e, d), pcm.add(e2, d2)
            for x, y, f in model.arrows(e):
                for x2, y2, g in model.arrows(d):
                    xx, yy = model.otimes(x, x2), model.otimes(y, y2)
                    left = model.tensor(e2, d2, x, y, x2, y2,
                                        model.regrade(e, e2, x, y, f),
                                        model.regrade(d, d2, x2, y2, g))
                    right = model.regrade(
                        source, target, xx, yy,
                        model.tensor(e, d, x, y, x2, y2, f, g))
                    report.record("Reg-⊗", left == right,
                                  _cex(e, e2, d, d2, x, y, x2, y2, f, g))


def _check_tensor_unit_associativity(model, report):
    pcm, unit, zero = model.pcm, model.unit, model.zero
    unit_id = model.identity(unit)
    for e in model.grades:
        for x, y, f in model.arrows(e):
            right = model.tensor(e, zero, x, y, unit, unit, f, unit_id)
            left = model.tensor(zero, e, unit, unit, x, y, unit_id, f)
            report.record("⊗-U-A", left == f == right, _cex(e, x, y, f))
    for e, d, ed in model.orthogonal_pairs():
        for c in model.grades:
            dc = pcm.add(d, c)
            if dc is None or not pcm.is_orthogonal(e, dc):
                continue
            for x, y, f in model.arrows(e):
                for x2, y2, g in model.arrows(d):
                    fg = model.tensor(e, d, x, y, x2, y2, f, g)
                    xx, yy = model.otimes(x, x2), model.otimes(y, y2)
                    for x3, y3, h in model.arrows(c):
                        left = model.tensor(ed, c, xx, yy, x3, y3, fg, h)
                        gh = model.tensor(d, c, x2, y2, x3, y3, g, h)
                        right = model.tensor(
                            e, dc, x, y, model.otimes(x2, x3),
                            model.otimes(y2, y3), f, gh)
                        report.record("⊗-U-A", left == right,
                                      _cex(e, d, c, x, y, x2, y2, x3, y3,
                                           f, g, h))


def _check_tensor_identity(model, report):
    zero = model.zero
    for x, y in product(model.objects, repeat=2):
        both = model.tensor(zero, zero, x, x, y, y, model.identity(x),
                            model.identity(y))
        report.record("⊗-ID", both == model.identity(model.otimes(x, y)),
                      _cex(x, y))


def _check_interchange(model, report):
    objects = model.objects
    for a, b, ab in model.orthogonal_pairs():
        for x, y, z in product(objects, repeat=3):
            for f in model.homset(a, x, y):
                for f2 in model.homset(a, y, z):
                    ff = model.compose(a, x, y, z, f, f2)
                    for x2, y2, z2 in product(objects, repeat=3):
                        for g in model.homset(b, x2, y2):
                            for g2 in model.homset(b, y2, z2):
                                xx = model.otimes(x, x2)
                                yy = model.otimes(y, y2)
                                zz = model.otimes(z, z2)
                                left = model.compose(
                                    ab, xx, yy, zz,
                                    model.tensor(a, b, x, y, x2, y2, f, g),
                                    model.tensor(a, b, y, z, y2, z2, f2, g2))
                                right = model.tensor(
                                    a, b, x, z, x2, z2, ff,
                                    model.compose(b, x2, y2, z2, g, g2))
                                report.record(
                                    "Inter", left == right,
                                    _cex(a, b, x, y, z, x2, y2, z2, f, f2,
                                         g, g2))


def check_derived(model):
    """Check regrading as tensoring with graded identities on the unit, and
    the interchange of grade-0 arrows with graded ones."""
    report = Report(model.name)
    report.declare("Regrade-Witness", "Interchange")
    pcm, unit, zero = model.pcm, model.unit, model.zero
    for a, b in model.leq_pairs():
        for c in pcm.witnesses(a, b):
            unit_c = model.identity(unit, c)
            for x, y, f in model.arrows(a):
                report.record(
                    "Regrade-Witness",
                    model.regrade(a, b, x, y, f) ==
                    model.tensor(a, c, x, y, unit, unit, f, unit_c),
                    _cex(a, b, c, x, y, f))
    for x, y, f in model.arrows(zero):
        for a in model.grades:
            for x2, y2, g in model.arrows(a):
                xx, yy = model.otimes(x, x2), model.otimes(y, y2)
                both = model.tensor(zero, a, x, y, x2, y2, f, g)
                pure_first = model.compose(
                    a, xx, model.otimes(y, x2), yy,
                    model.regrade(zero, a, xx, model.otimes(y, x2),
                                  model.tensor(zero, zero, x, y, x2, x2, f,
                                               model.identity(x2))),
                    model.tensor(zero, a, y, y, x2, y2, model.identity(y), g))
                pure_last = model.compose(
                    a, xx, model.otimes(x, y2), yy,
                    model.tensor(zero, a, x, x, x2, y2, model.identity(x), g),
                    model.regrade(zero, a, model.otimes(x, y2), yy,
                                  model.tensor(zero, zero, x, y, y2, y2, f,
                                               model.identity(y2))))
                report.record("Interchange", pure_first == both == pure_last,
                              _cex(a, x, y, x2, y2, f, g))
    return report


def check_symmetric(model):
    """Check the braiding laws and the graded symmetry equation.

    @raises NoBraidingError: If C{model} has no braiding.
    """
    if model.braiding is None:
        raise NoBraidingError("Model %s has no braiding" % (model.name,))
    report = Report(model.name)
    report.declare("Braid-Inv", "Braid-Hex", "Braid-Unit", "Braid-Nat")
    zero, unit, objects = model.zero, model.unit, model.objects
    otimes, sigma = model.otimes, model.sigma
    for x, y in product(objects, repeat=2):
        xy, yx = otimes(x, y), otimes(y, x)
        report.record("Braid-Inv",
                      model.compose(zero, xy, yx, xy, sigma(x, y),
                                    sigma(y, x)) == model.identity(xy),
                      _cex(x, y))
    for x, y, z in product(objects, repeat=3):
        steps = model.compose(
            zero, otimes(otimes(x, y), z), otimes(otimes(y, x), z),
            otimes(y, otimes(z, x)),
            model.tensor(zero, zero, otimes(x, y), otimes(y, x), z, z,
                         sigma(x, y), model.identity(z)),
            model.tensor(zero, zero, y, y, otimes(x, z), otimes(z, x),
                         model.identity(y), sigma(x, z)))
        report.record("Braid-Hex", sigma(x, otimes(y, z)) == steps,
                      _cex(x, y, z))
    for x in objects:
        report.record("Braid-Unit",
                      sigma(x, unit) == model.identity(x) == sigma(unit, x),
                      _cex(x))
    for a, b, ab in model.orthogonal_pairs():
        ba = model.pcm.add(b, a)
        for x, y, f in model.arrows(a):
            for x2, y2, g in model.arrows(b):
                xx, yy = otimes(x, x2), otimes(y, y2)
                left = model.compose(
                    ab, xx, yy, otimes(y2, y),
                    model.tensor(a, b, x, y, x2, y2, f, g),
                    model.regrade(zero, ab, yy, otimes(y2, y), sigma(y, y2)))
                right = model.compose(
                    ba, xx, otimes(x2, x), otimes(y2, y),
                    model.regrade(zero, ba, xx, otimes(x2, x), sigma(x, x2)),
                    model.tensor(b, a, x2, y2, x, y, g, f))
                report.record("Braid-Nat", left == right,
                              _cex(a, b, x, y, x2, y2, f, g))
    return report
