"""Graded models presented as monoids for Day convolution.

A lax presentation replaces the tensor C{f ⊗(a, b) g} at grade C{a + b} by a
family C{f ⊗(a, b; c) g} at every grade C{c} above C{a + b}, and the unit
identity by a family C{eta(c)} at every grade. The translations are::

  f ⊗(a, b; c) g  =  (f ⊗(a, b) g) regraded from a + b to c
  eta(c)          =  id_I regraded from 0 to c
  f ⊗(a, b) g     =  f ⊗(a, b; a + b) g

Checklist items are labelled as below and verified exhaustively.
"""

from itertools import product

from twisted.python import log

from gmc.exception import AxiomFailureError
from gmc.finmodel.axioms import check_axioms
from gmc.finmodel.model import FiniteGradedModel, format_coordinates
from gmc.report import Report


__all__ = ["LaxMonoidPresentation", "graded_to_lax", "lax_to_graded",
           "check_lax_presentation", "CHECKLIST"]


CHECKLIST = ("1.iii", "1.vi", "1.vii", "1.viii", "1.ix", "1.x", "2.ii",
             "2.iii", "3.ii", "3.iii", "3.iv", "4.i", "4.ii")


def _cex(*items):
    return format_coordinates(items)


class LaxMonoidPresentation(object):
    """The tables of a monoid in the convolution structure.

    Objects, hom-sets, composition and regrading are as in
    L{FiniteGradedModel}. The remaining tables are:

      - C{laxators[(a, b, c, x, y, x2, y2, f, g)]}, the label of
        C{f ⊗(a, b; c) g} for C{a + b <= c};
      - C{units[c]}, the label of C{eta(c)} in C{C_c(I, I)};
      - C{identities[(e, x)]}, the identity of C{x} at grade C{e}.

    Lookups of missing entries return C{None}.
    """

    def __init__(self, pcm, objects, products, unit, hom, comp, regrades,
                 laxators, units, identities, braiding=None,
                 name="presentation"):
        self.pcm = pcm
        self.grades = pcm.elements()
        self.objects = tuple(objects)
        self.products = dict(products)
        self.unit = unit
        self.hom = dict((key, tuple(labels)) for key, labels in hom.items())
        self.comp = dict(comp)
        self.regrades = dict(regrades)
        self.laxators = dict(laxators)
        self.units = dict(units)
        self.identities = dict(identities)
        self.braiding = None if braiding is None else dict(braiding)
        self.name = name

    def otimes(self, x, y):
        return self.products[(x, y)]

    def homset(self, e, x, y):
        return self.hom.get((e, x, y), ())

    def arrows(self, e):
        for x in self.objects:
            for y in self.objects:
                for f in self.homset(e, x, y):
                    yield x, y, f

    def compose(self, e, x, y, z, f, g):
        return self.comp.get((e, x, y, z, f, g))

    def regrade(self, e, e2, x, y, f):
        return self.regrades.get((e, e2, x, y, f))

    def lax(self, a, b, c, x, y, x2, y2, f, g):
        """Return C{f ⊗(a, b; c) g}."""
        return self.laxators.get((a, b, c, x, y, x2, y2, f, g))

    def eta(self, c):
        return self.units.get(c)

    def identity(self, e, x):
        return self.identities.get((e, x))

    def above(self, e):
        return [c for c in self.grades if self.pcm.leq(e, c)]

    def tables(self):
        return (self.pcm.tag, self.objects, self.products, self.unit,
                self.hom, self.comp, self.regrades, self.laxators, self.units,
                self.identities, self.braiding)

    def __eq__(self, other):
        return (isinstance(other, LaxMonoidPresentation) and
                self.tables() == other.tables())

    def __ne__(self, other):
        return not self == other

    def mutate(self, table, key, value):
        """Return a copy where one entry of C{table} is C{value}."""
        entries = dict(getattr(self, table))
        entries[key] = value
        arguments = dict(
            pcm=self.pcm, objects=self.objects, products=self.products,
            unit=self.unit, hom=self.hom, comp=self.comp,
            regrades=self.regrades, laxators=self.laxators, units=self.units,
            identities=self.identities, braiding=self.braiding,
            name=self.name)
        arguments[table] = entries
        return LaxMonoidPresentation(**arguments)

    def __repr__(self):
        return "<LaxMonoidPresentation %s over %s>" % (self.name,
                                                      self.pcm.tag)


def graded_to_lax(model, check=True):
    """Present C{model} as a monoid.

    @param check: Whether to refuse models failing their axioms.
    @raises AxiomFailureError: If C{check} is set and an axiom fails.
    """
    if check:
        report = check_axioms(model)
        if not report.passed:
            raise AxiomFailureError(report)
    pcm = model.pcm
    laxators = {}
    for a, b, ab in model.orthogonal_pairs():
        for c in model.grades:
            if not pcm.leq(ab, c):
                continue
            for x, y, f in model.arrows(a):
                for x2, y2, g in model.arrows(b):
                    laxators[(a, b, c, x, y, x2, y2, f, g)] = model.regrade(
                        ab, c, model.otimes(x, x2), model.otimes(y, y2),
                        model.tensor(a, b, x, y, x2, y2, f, g))
    units = dict((c, model.identity(model.unit, c)) for c in model.grades)
    identities = dict(((e, x), model.identity(x, e))
                      for e in model.grades for x in model.objects)
    log.msg("Presenting %s with %d laxator entries" % (
        model.name, len(laxators)))
    return LaxMonoidPresentation(
        pcm, model.objects, model.products, model.unit, model.hom,
        model.comp, model.regrades, laxators, units, identities,
        model.braiding, model.name)


def lax_to_graded(presentation, check=True):
    """Rebuild the graded model of a presentation.

    @raises AxiomFailureError: If C{check} is set and a checklist item fails.
    """
    if check:
        report = check_lax_presentation(presentation)
        if not report.passed:
            raise AxiomFailureError(report)
    pcm = presentation.pcm
    tensors = {}
    for a, b in product(presentation.grades, repeat=2):
        ab = pcm.add(a, b)
        if ab is None:
            continue
        for x, y, f in presentation.arrows(a):
            for x2, y2, g in presentation.arrows(b):
                tensors[(a, b, x, y, x2, y2, f, g)] = presentation.lax(
                    a, b, ab, x, y, x2, y2, f, g)
    ids = dict((x, presentation.identity(pcm.zero, x))
               for x in presentation.objects)
    return FiniteGradedModel(
        pcm, presentation.objects, presentation.products, presentation.unit,
        presentation.hom, ids, presentation.comp, presentation.regrades,
        tensors, presentation.braiding, presentation.name)


def check_lax_presentation(presentation):
    """Verify every checklist item on C{presentation}.

    @return: A L{Report} with one line per label of L{CHECKLIST}.
    """
    report = Report(presentation.name)
    report.declare(*CHECKLIST)
    for check in (_check_regrading, _check_laxator_regrading,
                  _check_unit_regrading, _check_lax_associativity,
                  _check_lax_unit, _check_composition, _check_identities,
                  _check_monoid):
        check(presentation, report)
    if not report.passed:
        log.msg("Presentation %s fails %s" % (
            presentation.name,
            ", ".join(check.name for check in report.failures())))
    return report


def _leq_pairs(presentation):
    return [(e, e2) for e in presentation.grades
            for e2 in presentation.above(e)]


def _orthogonal(presentation):
    pcm = presentation.pcm
    for a, b in product(presentation.grades, repeat=2):
        ab = pcm.add(a, b)
        if ab is not None:
            yield a, b, ab


def _check_regrading(p, report):
    for e in p.grades:
        for x, y, f in p.arrows(e):
            report.record("1.iii", p.regrade(e, e, x, y, f) == f,
                          _cex(e, x, y, f))
    for e, e2 in _leq_pairs(p):
        for e3 in p.above(e2):
            for x, y, f in p.arrows(e):
                twice = p.regrade(e2, e3, x, y, p.regrade(e, e2, x, y, f))
                report.record("1.iii", twice == p.regrade(e, e3, x, y, f),
                              _cex(e, e2, e3, x, y, f))


def _check_laxator_regrading(p, report):
    pcm = p.pcm
    pairs = _leq_pairs(p)
    for (a, a2), (b, b2) in product(pairs, repeat=2):
        total = pcm.add(a2, b2)
        if total is None:
            continue
        for c in p.above(total):
            for x, y, f in p.arrows(a):
                for x2, y2, g in p.arrows(b):
                    left = p.lax(a2, b2, c, x, y, x2, y2,
                                 p.regrade(a, a2, x, y, f),
                                 p.regrade(b, b2, x2, y2, g))
                    right = p.lax(a, b, c, x, y, x2, y2, f, g)
                    report.record("1.vi", left is not None and left == right,
                                  _cex(a, a2, b, b2, c, x, y, x2, y2, f, g))
    for a, b, ab in _orthogonal(p):
        for c, d in pairs:
            if not pcm.leq(ab, c):
                continue
            for x, y, f in p.arrows(a):
                for x2, y2, g in p.arrows(b):
                    moved = p.regrade(c, d, p.otimes(x, x2), p.otimes(y, y2),
                                      p.lax(a, b, c, x, y, x2, y2, f, g))
                    report.record(
                        "1.viii", moved is not None and
                        moved == p.lax(a, b, d, x, y, x2, y2, f, g),
                        _cex(a, b, c, d, x, y, x2, y2, f, g))


def _check_unit_regrading(p, report):
    for c, c2 in _leq_pairs(p):
        moved = p.regrade(c, c2, p.unit, p.unit, p.eta(c))
        report.record("1.vii", moved is not None and moved == p.eta(c2),
                      _cex(c, c2))
    for c in p.grades:
        report.record("3.iv", p.eta(c) is not None and
                      p.eta(c) == p.identity(c, p.unit), _cex(c))


def _check_lax_associativity(p, report):
    pcm, otimes = p.pcm, p.otimes
    for a, b, ab in _orthogonal(p):
        for middle in p.above(ab):
            for c in p.grades:
                left_total, bc = pcm.add(middle, c), pcm.add(b, c)
                if left_total is None or bc is None:
                    continue
                for d in p.above(left_total):
                    for inner in p.above(bc):
                        right_total = pcm.add(a, inner)
                        if right_total is None or not pcm.leq(right_total, d):
                            continue
                        for x, y, f in p.arrows(a):
                            for x2, y2, g in p.arrows(b):
                                fg = p.lax(a, b, middle, x, y, x2, y2, f, g)
                                for x3, y3, h in p.arrows(c):
                                    left = p.lax(
                                        middle, c, d, otimes(x, x2),
                                        otimes(y, y2), x3, y3, fg, h)
                                    gh = p.lax(b, c, inner, x2, y2, x3, y3,
                                               g, h)
                                    right = p.lax(
                                        a, inner, d, x, y, otimes(x2, x3),
                                        otimes(y2, y3), f, gh)
                                    report.record(
                                        "1.ix",
                                        left is not None and left == right,
                                        _cex(a, b, c, middle, inner, d,
                                             f, g, h))


def _check_lax_unit(p, report):
    unit = p.unit
    for a, b, ab in _orthogonal(p):
        for c in p.above(ab):
            for x, y, f in p.arrows(b):
                expected = p.regrade(b, c, x, y, f)
                left = p.lax(a, b, c, unit, unit, x, y, p.eta(a), f)
                right = p.lax(b, a, c, x, y, unit, unit, f, p.eta(a))
                report.record("1.x", expected is not None and
                              left == expected == right,
                              _cex(a, b, c, x, y, f))


def _check_composition(p, report):
    objects = p.objects
    for e, e2 in _leq_pairs(p):
        for x, y, z in product(objects, repeat=3):
            for f in p.homset(e, x, y):
                for g in p.homset(e, y, z):
                    left = p.regrade(e, e2, x, z, p.compose(e, x, y, z, f, g))
                    right = p.compose(e2, x, y, z, p.regrade(e, e2, x, y, f),
                                      p.regrade(e, e2, y, z, g))
                    report.record("2.ii", left is not None and left == right,
                                  _cex(e, e2, x, y, z, f, g))
    for a, b, ab in _orthogonal(p):
        above = p.above(ab)
        for x, y, z in product(objects, repeat=3):
            for f in p.homset(a, x, y):
                for f2 in p.homset(a, y, z):
                    ff = p.compose(a, x, y, z, f, f2)
                    for x2, y2, z2 in product(objects, repeat=3):
                        xx, yy, zz = (p.otimes(x, x2), p.otimes(y, y2),
                                      p.otimes(z, z2))
                        for g in p.homset(b, x2, y2):
                            for g2 in p.homset(b, y2, z2):
                                gg = p.compose(b, x2, y2, z2, g, g2)
                                for c in above:
                                    left = p.lax(a, b, c, x, z, x2, z2,
                                                 ff, gg)
                                    right = p.compose(
                                        c, xx, yy, zz,
                                        p.lax(a, b, c, x, y, x2, y2, f, g),
                                        p.lax(a, b, c, y, z, y2, z2, f2, g2))
                                    report.record(
                                        "2.iii",
                                        left is not None and left == right,
                                        _cex(a, b, c, f, f2, g, g2))


def _check_identities(p, report):
    for e, e2 in _leq_pairs(p):
        for x in p.objects:
            moved = p.regrade(e, e2, x, x, p.identity(e, x))
            report.record("3.ii", moved is not None and
                          moved == p.identity(e2, x), _cex(e, e2, x))
    for a, b, ab in _orthogonal(p):
        for c in p.above(ab):
            for x, x2 in product(p.objects, repeat=2):
                both = p.lax(a, b, c, x, x, x2, x2, p.identity(a, x),
                             p.identity(b, x2))
                report.record("3.iii", both is not None and
                              both == p.identity(c, p.otimes(x, x2)),
                              _cex(a, b, c, x, x2))


def _check_monoid(p, report):
    for e in p.grades:
        for x, y, f in p.arrows(e):
            left = p.compose(e, x, x, y, p.identity(e, x), f)
            right = p.compose(e, x, y, y, f, p.identity(e, y))
            report.record("4.i", left == f == right, _cex(e, x, y, f))
        for x, y, z, w in product(p.objects, repeat=4):
            for f in p.homset(e, x, y):
                for g in p.homset(e, y, z):
                    fg = p.compose(e, x, y, z, f, g)
                    for h in p.homset(e, z, w):
                        left = p.compose(e, x, z, w, fg, h)
                        right = p.compose(e, x, y, w, f,
                                          p.compose(e, y, z, w, g, h))
                        report.record("4.ii",
                                      left is not None and left == right,
                                      _cex(e, x, y, z, w, f, g, h))
