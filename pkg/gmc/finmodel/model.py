"""Finite graded monoidal categories given by explicit tables."""

from itertools import product

from gmc.exception import IllFormedError, InfiniteCarrierError


__all__ = ["FiniteGradedModel", "format_coordinates"]


def format_coordinates(items):
    return "(%s)" % ",".join(str(item) for item in items)


class FiniteGradedModel(object):
    """A finite E-graded monoidal category.

    All tables are C{dict}s keyed by grades, object names and labels:

      - C{products[(x, y)]} is the object C{x ⊗ y};
      - C{hom[(e, x, y)]} is the ordered tuple of labels of C{C_e(x, y)};
      - C{ids[x]} is the grade-0 identity label of C{x};
      - C{comp[(e, x, y, z, f, g)]} is C{f ; g} at grade C{e};
      - C{regrades[(e, e2, x, y, f)]} regrades C{f} along C{e <= e2};
      - C{tensors[(e, e2, x, y, x2, y2, f, g)]} is C{f ⊗ g} for orthogonal
        C{e} and C{e2};
      - C{braiding[(x, y)]}, when present, is the grade-0 label of the
        symmetry C{x ⊗ y -> y ⊗ x}.

    Regradings along C{e <= e} that are omitted default to the identity.

    @param check: Whether to check the tables are total and well typed.
    @raises InfiniteCarrierError: If the PCM is infinite.
    @raises IllFormedError: If C{check} is set and a table is broken.
    """

    def __init__(self, pcm, objects, products, unit, hom, ids, comp,
                 regrades, tensors, braiding=None, name="model", check=True):
        if not pcm.finite:
            raise InfiniteCarrierError(pcm)
        self.pcm = pcm
        self.grades = pcm.elements()
        self.objects = tuple(objects)
        self.products = dict(products)
        self.unit = unit
        self.hom = dict((key, tuple(labels)) for key, labels in hom.items())
        self.ids = dict(ids)
        self.comp = dict(comp)
        self.regrades = dict(regrades)
        self.tensors = dict(tensors)
        self.braiding = None if braiding is None else dict(braiding)
        self.name = name
        self._leq_pairs = [(e, e2) for e in self.grades for e2 in self.grades
                           if pcm.leq(e, e2)]
        self._orthogonal = [(e, e2, pcm.add(e, e2)) for e in self.grades
                            for e2 in self.grades if pcm.is_orthogonal(e, e2)]
        for e in self.grades:
            for x in self.objects:
                for y in self.objects:
                    for f in self.hom.get((e, x, y), ()):
                        self.regrades.setdefault((e, e, x, y, f), f)
        if check:
            self.validate()

    # Lookups

    @property
    def zero(self):
        return self.pcm.zero

    def otimes(self, x, y):
        return self.products[(x, y)]

    def homset(self, e, x, y):
        return self.hom.get((e, x, y), ())

    def identity(self, x, e=None):
        """Return the identity of C{x}, regraded to C{e} when given."""
        label = self.ids[x]
        if e is None:
            return label
        return self.regrades[(self.zero, e, x, x, label)]

    def compose(self, e, x, y, z, f, g):
        return self.comp[(e, x, y, z, f, g)]

    def regrade(self, e, e2, x, y, f):
        return self.regrades[(e, e2, x, y, f)]

    def tensor(self, e, e2, x, y, x2, y2, f, g):
        return self.tensors[(e, e2, x, y, x2, y2, f, g)]

    def sigma(self, x, y):
        return self.braiding[(x, y)]

    def arrows(self, e):
        """Yield C{(x, y, f)} for every arrow at grade C{e}, in scan order."""
        for x in self.objects:
            for y in self.objects:
                for f in self.homset(e, x, y):
                    yield x, y, f

    def leq_pairs(self):
        return list(self._leq_pairs)

    def orthogonal_pairs(self):
        """Return C{(e, e2, e + e2)} for every orthogonal pair of grades."""
        return list(self._orthogonal)

    def size(self):
        return sum(len(labels) for labels in self.hom.values())

    # Structure

    def validate(self):
        """Check totality and typing of every table.

        @raises IllFormedError: With the coordinates of the first problem.
        """
        self._validate_objects()
        for e in self.grades:
            for x in self.objects:
                for y in self.objects:
                    labels = self.hom.get((e, x, y))
                    if labels is None:
                        raise IllFormedError("Missing hom-set", (e, x, y))
                    if len(set(labels)) != len(labels):
                        raise IllFormedError("Duplicate labels", (e, x, y))
        for x in self.objects:
            if self.ids.get(x) not in self.homset(self.zero, x, x):
                raise IllFormedError("Missing identity", (x,))
        for e in self.grades:
            for x, y, z in product(self.objects, repeat=3):
                for f in self.homset(e, x, y):
                    for g in self.homset(e, y, z):
                        self._expect(self.comp, (e, x, y, z, f, g),
                                     (e, x, z), "comp")
        for e, e2 in self._leq_pairs:
            for x, y, f in self.arrows(e):
                self._expect(self.regrades, (e, e2, x, y, f), (e2, x, y),
                             "regrade")
        for e, e2, total in self._orthogonal:
            for x, y, x2, y2 in product(self.objects, repeat=4):
                target = (total, self.otimes(x, x2), self.otimes(y, y2))
                for f in self.homset(e, x, y):
                    for g in self.homset(e2, x2, y2):
                        self._expect(self.tensors,
                                     (e, e2, x, y, x2, y2, f, g), target,
                                     "tensor")
        if self.braiding is not None:
            for x, y in product(self.objects, repeat=2):
                self._expect(self.braiding, (x, y),
                             (self.zero, self.otimes(x, y), self.otimes(y, x)),
                             "braiding")

    def _expect(self, table, key, homkey, name):
        if key not in table:
            raise IllFormedError("Missing %s entry" % (name,), key)
        if table[key] not in self.hom.get(homkey, ()):
            raise IllFormedError(
                "%s entry %s is not in the hom-set %s" % (
                    name, table[key], format_coordinates(homkey)), key)

    def _validate_objects(self):
        if self.unit not in self.objects:
            raise IllFormedError("Unit %s is not an object" % (self.unit,))
        for x, y in product(self.objects, repeat=2):
            if self.products.get((x, y)) not in self.objects:
                raise IllFormedError("Missing object product", (x, y))
        for x in self.objects:
            if not (self.otimes(x, self.unit) == x ==
                    self.otimes(self.unit, x)):
                raise IllFormedError("Object unit law fails", (x,))
        for x, y, z in product(self.objects, repeat=3):
            if (self.otimes(self.otimes(x, y), z) !=
                    self.otimes(x, self.otimes(y, z))):
                raise IllFormedError("Object product is not associative",
                                     (x, y, z))

    # Values

    def tables(self):
        return (self.pcm.tag, self.objects, self.products, self.unit,
                self.hom, self.ids, self.comp, self.regrades, self.tensors,
                self.braiding)

    def __eq__(self, other):
        return (isinstance(other, FiniteGradedModel) and
                self.tables() == other.tables())

    def __ne__(self, other):
        return not self == other

    def replace(self, check=False, **changes):
        """Return a copy with some tables replaced.

        Keyword names are the constructor's table arguments.
        """
        arguments = dict(pcm=self.pcm, objects=self.objects,
                         products=self.products, unit=self.unit, hom=self.hom,
                         ids=self.ids, comp=self.comp, regrades=self.regrades,
                         tensors=self.tensors, braiding=self.braiding,
                         name=self.name)
        arguments.update(changes)
        return FiniteGradedModel(check=check, **arguments)

    def mutate(self, table, key, value):
        """Return a copy where one entry of C{table} is C{value}."""
        entries = dict(getattr(self, table))
        entries[key] = value
        return self.replace(**{table: entries})

    def __repr__(self):
        return "<FiniteGradedModel %s over %s: %d objects, %d arrows>" % (
            self.name, self.pcm.tag, len(self.objects), self.size())
