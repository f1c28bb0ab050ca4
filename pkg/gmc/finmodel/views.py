"""Ungraded categories carved out of a graded model at a single grade.

At an idempotent grade the model restricts to a strict monoidal category.
At any grade it restricts to a strict premonoidal category whose whiskerings
tensor with grade-0 identities.
"""

from itertools import product

from gmc.exception import NotIdempotentError
from gmc.finmodel.model import format_coordinates
from gmc.report import Report


__all__ = ["MonoidalCategory", "PremonoidalCategory", "monoidal_view",
           "premonoidal_view"]


def _cex(*items):
    return format_coordinates(items)


class _TableCategory(object):
    """Objects, a monoid of objects and composition tables.

    C{hom[(x, y)]} is a tuple of labels, C{comp[(x, y, z, f, g)]} is
    C{f ; g} and C{ids[x]} is the identity of C{x}.
    """

    def __init__(self, objects, products, unit, hom, ids, comp,
                 braiding=None, name="category"):
        self.objects = tuple(objects)
        self.products = dict(products)
        self.unit = unit
        self.hom = dict((key, tuple(labels)) for key, labels in hom.items())
        self.ids = dict(ids)
        self.comp = dict(comp)
        self.braiding = None if braiding is None else dict(braiding)
        self.name = name

    def otimes(self, x, y):
        return self.products[(x, y)]

    def homset(self, x, y):
        return self.hom.get((x, y), ())

    def identity(self, x):
        return self.ids[x]

    def compose(self, x, y, z, f, g):
        return self.comp[(x, y, z, f, g)]

    def sigma(self, x, y):
        return self.braiding[(x, y)]

    def arrows(self):
        for x in self.objects:
            for y in self.objects:
                for f in self.homset(x, y):
                    yield x, y, f

    def _check_category(self, report):
        for x, y, f in self.arrows():
            report.record(
                "Category",
                self.compose(x, x, y, self.identity(x), f) == f ==
                self.compose(x, y, y, f, self.identity(y)),
                _cex(x, y, f))
        for x, y, z, w in product(self.objects, repeat=4):
            for f in self.homset(x, y):
                for g in self.homset(y, z):
                    for h in self.homset(z, w):
                        left = self.compose(x, z, w,
                                            self.compose(x, y, z, f, g), h)
                        right = self.compose(x, y, w, f,
                                             self.compose(y, z, w, g, h))
                        report.record("Category", left == right,
                                      _cex(x, y, z, w, f, g, h))

    def _tables(self):
        return (self.objects, self.products, self.unit, self.hom, self.ids,
                self.comp, self.braiding)

    def __ne__(self, other):
        return not self == other


class MonoidalCategory(_TableCategory):
    """A strict monoidal category given by tables.

    @param tensors: C{tensors[(x, y, x2, y2, f, g)]} is C{f ⊗ g}.
    """

    def __init__(self, objects, products, unit, hom, ids, comp, tensors,
                 braiding=None, name="category"):
        _TableCategory.__init__(self, objects, products, unit, hom, ids, comp,
                                braiding, name)
        self.tensors = dict(tensors)

    def tensor(self, x, y, x2, y2, f, g):
        return self.tensors[(x, y, x2, y2, f, g)]

    def check(self):
        """Check the strict monoidal category laws, and the symmetric ones
        when a braiding is present."""
        report = Report(self.name)
        report.declare("Category", "Tensor-Functor", "Tensor-Unit",
                       "Tensor-Assoc")
        self._check_category(report)
        objects, unit = self.objects, self.unit
        for x, y in product(objects, repeat=2):
            report.record(
                "Tensor-Functor",
                self.tensor(x, x, y, y, self.identity(x), self.identity(y)) ==
                self.identity(self.otimes(x, y)), _cex(x, y))
        for x, y, z in product(objects, repeat=3):
            for x2, y2, z2 in product(objects, repeat=3):
                for f in self.homset(x, y):
                    for f2 in self.homset(y, z):
                        for g in self.homset(x2, y2):
                            for g2 in self.homset(y2, z2):
                                left = self.compose(
                                    self.otimes(x, x2), self.otimes(y, y2),
                                    self.otimes(z, z2),
                                    self.tensor(x, y, x2, y2, f, g),
                                    self.tensor(y, z, y2, z2, f2, g2))
                                right = self.tensor(
                                    x, z, x2, z2,
                                    self.compose(x, y, z, f, f2),
                                    self.compose(x2, y2, z2, g, g2))
                                report.record("Tensor-Functor",
                                              left == right,
                                              _cex(x, y, z, x2, y2, z2, f,
                                                   f2, g, g2))
        unit_id = self.identity(unit)
        for x, y, f in self.arrows():
            report.record(
                "Tensor-Unit",
                self.tensor(x, y, unit, unit, f, unit_id) == f ==
                self.tensor(unit, unit, x, y, unit_id, f), _cex(x, y, f))
        for x, y, f in self.arrows():
            for x2, y2, g in self.arrows():
                fg = self.tensor(x, y, x2, y2, f, g)
                for x3, y3, h in self.arrows():
                    left = self.tensor(self.otimes(x, x2), self.otimes(y, y2),
                                       x3, y3, fg, h)
                    right = self.tensor(
                        x, y, self.otimes(x2, x3), self.otimes(y2, y3), f,
                        self.tensor(x2, y2, x3, y3, g, h))
                    report.record("Tensor-Assoc", left == right,
                                  _cex(x, y, x2, y2, x3, y3, f, g, h))
        if self.braiding is not None:
            self._check_braiding(report)
        return report

    def _check_braiding(self, report):
        report.declare("Braid-Inv", "Braid-Nat")
        otimes, sigma = self.otimes, self.sigma
        for x, y in product(self.objects, repeat=2):
            xy, yx = otimes(x, y), otimes(y, x)
            report.record("Braid-Inv",
                          self.compose(xy, yx, xy, sigma(x, y),
                                       sigma(y, x)) == self.identity(xy),
                          _cex(x, y))
        for x, y, f in self.arrows():
            for x2, y2, g in self.arrows():
                left = self.compose(otimes(x, x2), otimes(y, y2),
                                    otimes(y2, y),
                                    self.tensor(x, y, x2, y2, f, g),
                                    sigma(y, y2))
                right = self.compose(otimes(x, x2), otimes(x2, x),
                                     otimes(y2, y), sigma(x, x2),
                                     self.tensor(x2, y2, x, y, g, f))
                report.record("Braid-Nat", left == right,
                              _cex(x, y, x2, y2, f, g))

    def __eq__(self, other):
        return (isinstance(other, MonoidalCategory) and
                (self._tables(), self.tensors) ==
                (other._tables(), other.tensors))

    def __repr__(self):
        return "<MonoidalCategory %s>" % (self.name,)


class PremonoidalCategory(_TableCategory):
    """A strict premonoidal category given by whiskering tables.

    @param left: C{left[(w, x, y, f)]} is C{w ⋉ f : w⊗x -> w⊗y}.
    @param right: C{right[(x, y, w, f)]} is C{f ⋊ w : x⊗w -> y⊗w}.
    """

    def __init__(self, objects, products, unit, hom, ids, comp, left, right,
                 braiding=None, name="category"):
        _TableCategory.__init__(self, objects, products, unit, hom, ids, comp,
                                braiding, name)
        self.left = dict(left)
        self.right = dict(right)

    def left_whisker(self, w, x, y, f):
        return self.left[(w, x, y, f)]

    def right_whisker(self, x, y, w, f):
        return self.right[(x, y, w, f)]

    def interchanges(self, first, second):
        """Whether C{first} then C{second} agree in both orders.

        Both arguments are C{(x, y, f)} triples.
        """
        x, y, f = first
        x2, y2, g = second
        otimes = self.otimes
        one = self.compose(otimes(x, x2), otimes(y, x2), otimes(y, y2),
                           self.right_whisker(x, y, x2, f),
                           self.left_whisker(y, x2, y2, g))
        other = self.compose(otimes(x, x2), otimes(x, y2), otimes(y, y2),
                             self.left_whisker(x, x2, y2, g),
                             self.right_whisker(x, y, y2, f))
        return one == other

    def is_central(self, x, y, f):
        arrow = (x, y, f)
        return all(self.interchanges(arrow, other) and
                   self.interchanges(other, arrow)
                   for other in self.arrows())

    def center(self):
        """Return the central morphisms as C{(x, y, f)} triples."""
        return [arrow for arrow in self.arrows() if self.is_central(*arrow)]

    def check(self):
        """Check the strict premonoidal laws on the whiskering tables."""
        report = Report(self.name)
        report.declare("Category", "Whisker-Functor", "Whisker-Unit",
                       "Whisker-Assoc")
        self._check_category(report)
        objects, otimes = self.objects, self.otimes
        for w in objects:
            for x in objects:
                report.record(
                    "Whisker-Functor",
                    self.left_whisker(w, x, x, self.identity(x)) ==
                    self.identity(otimes(w, x)) ==
                    self.right_whisker(x, x, w, self.identity(x)),
                    _cex(w, x))
            for x, y, z in product(objects, repeat=3):
                for f in self.homset(x, y):
                    for g in self.homset(y, z):
                        fg = self.compose(x, y, z, f, g)
                        left = self.compose(
                            otimes(w, x), otimes(w, y), otimes(w, z),
                            self.left_whisker(w, x, y, f),
                            self.left_whisker(w, y, z, g))
                        right = self.compose(
                            otimes(x, w), otimes(y, w), otimes(z, w),
                            self.right_whisker(x, y, w, f),
                            self.right_whisker(y, z, w, g))
                        report.record(
                            "Whisker-Functor",
                            left == self.left_whisker(w, x, z, fg) and
                            right == self.right_whisker(x, z, w, fg),
                            _cex(w, x, y, z, f, g))
        unit = self.unit
        for x, y, f in self.arrows():
            report.record("Whisker-Unit",
                          self.left_whisker(unit, x, y, f) == f ==
                          self.right_whisker(x, y, unit, f), _cex(x, y, f))
        for w, w2 in product(objects, repeat=2):
            for x, y, f in self.arrows():
                nested_left = self.left_whisker(
                    w, otimes(w2, x), otimes(w2, y),
                    self.left_whisker(w2, x, y, f))
                nested_right = self.right_whisker(
                    otimes(x, w), otimes(y, w), w2,
                    self.right_whisker(x, y, w, f))
                mixed_one = self.right_whisker(
                    otimes(w, x), otimes(w, y), w2,
                    self.left_whisker(w, x, y, f))
                mixed_other = self.left_whisker(
                    w, otimes(x, w2), otimes(y, w2),
                    self.right_whisker(x, y, w2, f))
                report.record(
                    "Whisker-Assoc",
                    nested_left == self.left_whisker(otimes(w, w2), x, y, f)
                    and nested_right ==
                    self.right_whisker(x, y, otimes(w, w2), f) and
                    mixed_one == mixed_other,
                    _cex(w, w2, x, y, f))
        if self.braiding is not None:
            self._check_braiding(report)
        return report

    def _check_braiding(self, report):
        report.declare("Braid-Inv", "Braid-Central", "Braid-Nat")
        otimes, sigma = self.otimes, self.sigma
        for x, y in product(self.objects, repeat=2):
            xy, yx = otimes(x, y), otimes(y, x)
            report.record("Braid-Inv",
                          self.compose(xy, yx, xy, sigma(x, y),
                                       sigma(y, x)) == self.identity(xy),
                          _cex(x, y))
            report.record("Braid-Central", self.is_central(xy, yx,
                                                           sigma(x, y)),
                          _cex(x, y))
        for w in self.objects:
            for x, y, f in self.arrows():
                left = self.compose(otimes(x, w), otimes(y, w), otimes(w, y),
                                    self.right_whisker(x, y, w, f),
                                    sigma(y, w))
                right = self.compose(otimes(x, w), otimes(w, x), otimes(w, y),
                                     sigma(x, w),
                                     self.left_whisker(w, x, y, f))
                report.record("Braid-Nat", left == right, _cex(w, x, y, f))

    def __eq__(self, other):
        return (isinstance(other, PremonoidalCategory) and
                (self._tables(), self.left, self.right) ==
                (other._tables(), other.left, other.right))

    def __repr__(self):
        return "<PremonoidalCategory %s>" % (self.name,)


def _restrict(model, e):
    objects = model.objects
    hom = dict(((x, y), model.homset(e, x, y))
               for x in objects for y in objects)
    ids = dict((x, model.identity(x, e)) for x in objects)
    comp = {}
    for x, y, z in product(objects, repeat=3):
        for f in model.homset(e, x, y):
            for g in model.homset(e, y, z):
                comp[(x, y, z, f, g)] = model.compose(e, x, y, z, f, g)
    braiding = None
    if model.braiding is not None:
        braiding = dict(
            ((x, y), model.regrade(model.zero, e, model.otimes(x, y),
                                   model.otimes(y, x), model.sigma(x, y)))
            for x in objects for y in objects)
    return hom, ids, comp, braiding


def monoidal_view(model, e):
    """Return the strict monoidal category at the idempotent grade C{e}.

    @raises NotIdempotentError: If C{e + e} is not C{e}.
    """
    if model.pcm.add(e, e) != e:
        raise NotIdempotentError(e)
    hom, ids, comp, braiding = _restrict(model, e)
    tensors = {}
    for x, y, f in model.arrows(e):
        for x2, y2, g in model.arrows(e):
            tensors[(x, y, x2, y2, f, g)] = model.tensor(e, e, x, y, x2, y2,
                                                         f, g)
    return MonoidalCategory(model.objects, model.products, model.unit, hom,
                            ids, comp, tensors, braiding,
                            "%s@%s" % (model.name, e))


def premonoidal_view(model, a):
    """Return the strict premonoidal category at grade C{a}.

    Whiskering tensors with grade-0 identities: C{w ⋉ f} is
    C{id_w ⊗ f} and C{f ⋊ w} is C{f ⊗ id_w}.
    """
    zero = model.zero
    hom, ids, comp, braiding = _restrict(model, a)
    left, right = {}, {}
    for w in model.objects:
        for x, y, f in model.arrows(a):
            left[(w, x, y, f)] = model.tensor(zero, a, w, w, x, y,
                                              model.identity(w), f)
            right[(x, y, w, f)] = model.tensor(a, zero, x, y, w, w, f,
                                               model.identity(w))
    return PremonoidalCategory(model.objects, model.products, model.unit,
                               hom, ids, comp, left, right, braiding,
                               "%s@%s" % (model.name, a))
