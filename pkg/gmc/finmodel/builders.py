"""Small finite models built from data rather than written out as tables."""

from itertools import product

from gmc.exception import IllFormedError
from gmc.finmodel.model import FiniteGradedModel


__all__ = ["terminal_model", "effect_monoid_model", "transformer_label",
           "IDENTITY", "FLIP", "SET0", "SET1"]


IDENTITY = (0, 1)
FLIP = (1, 0)
SET0 = (0, 0)
SET1 = (1, 1)


def terminal_model(pcm, symmetric=True, name="terminal"):
    """One object C{I} and one arrow C{*} at every grade."""
    unit, label = "I", "*"
    grades = pcm.elements()
    hom = dict(((e, unit, unit), (label,)) for e in grades)
    comp = dict(((e, unit, unit, unit, label, label), label) for e in grades)
    regrades = dict(((e, e2, unit, unit, label), label)
                    for e in grades for e2 in grades if pcm.leq(e, e2))
    tensors = dict(((e, e2, unit, unit, unit, unit, label, label), label)
                   for e in grades for e2 in grades
                   if pcm.is_orthogonal(e, e2))
    braiding = {(unit, unit): label} if symmetric else None
    return FiniteGradedModel(pcm, [unit], {(unit, unit): unit}, unit, hom,
                             {unit: label}, comp, regrades, tensors, braiding,
                             name)


def transformer_label(transformer):
    return "m%s" % ("".join(str(state) for state in transformer),)


def _then(first, second):
    return tuple(second[state] for state in first)


def effect_monoid_model(pcm, monoids, objects=("I", "A"), symmetric=False,
                        name="monoids"):
    """Build a model whose hom-sets at grade C{e} are a monoid of state
    transformers.

    A transformer is a tuple sending each state to its successor. Every
    object is an endo-object of the same monoid: C{hom(e, x, x)} is
    C{monoids[e]}, distinct objects have no arrows between them, composition
    runs the first transformer then the second, regrading is inclusion and
    C{f ⊗ g} is C{f ; g}. The first object is the unit and the others
    multiply to the last one.

    @param monoids: A C{dict} from every grade to an iterable of
        transformers.
    @raises IllFormedError: If a monoid lacks the identity or is not closed,
        if C{monoids[e]} is not contained in C{monoids[e2]} for C{e <= e2},
        or if monoids at orthogonal grades do not commute.
    """
    grades = pcm.elements()
    sets = {}
    for e in grades:
        if e not in monoids:
            raise IllFormedError("No monoid for grade", (e,))
        sets[e] = sorted(set(tuple(t) for t in monoids[e]))
    states = len(sets[pcm.zero][0]) if sets[pcm.zero] else 0
    identity = tuple(range(states))
    for e in grades:
        members = set(sets[e])
        if identity not in members:
            raise IllFormedError("Monoid lacks the identity", (e,))
        for f, g in product(sets[e], repeat=2):
            if _then(f, g) not in members:
                raise IllFormedError("Monoid is not closed", (
                    e, transformer_label(f), transformer_label(g)))
    for e, e2 in product(grades, repeat=2):
        if pcm.leq(e, e2) and not set(sets[e]) <= set(sets[e2]):
            raise IllFormedError("Monoids do not grow with the grade",
                                 (e, e2))
        if pcm.is_orthogonal(e, e2):
            for f, g in product(sets[e], sets[e2]):
                if _then(f, g) != _then(g, f):
                    raise IllFormedError(
                        "Monoids at orthogonal grades do not commute",
                        (e, e2, transformer_label(f), transformer_label(g)))
    objects = tuple(objects)
    unit, rest = objects[0], objects[-1]
    products = {}
    for x, y in product(objects, repeat=2):
        products[(x, y)] = y if x == unit else (x if y == unit else rest)
    labels = dict((e, [transformer_label(t) for t in sets[e]])
                  for e in grades)
    hom, comp, regrades, tensors = {}, {}, {}, {}
    for e in grades:
        for x, y in product(objects, repeat=2):
            hom[(e, x, y)] = tuple(labels[e]) if x == y else ()
        for x in objects:
            for f, g in product(sets[e], repeat=2):
                comp[(e, x, x, x, transformer_label(f),
                      transformer_label(g))] = transformer_label(_then(f, g))
    for e, e2 in product(grades, repeat=2):
        if pcm.leq(e, e2):
            for x in objects:
                for f in labels[e]:
                    regrades[(e, e2, x, x, f)] = f
        if pcm.is_orthogonal(e, e2):
            for x, x2 in product(objects, repeat=2):
                for f, g in product(sets[e], sets[e2]):
                    tensors[(e, e2, x, x, x2, x2, transformer_label(f),
                             transformer_label(g))] = transformer_label(
                                 _then(f, g))
    ids = dict((x, transformer_label(identity)) for x in objects)
    braiding = None
    if symmetric:
        braiding = dict(((x, y), transformer_label(identity))
                        for x, y in product(objects, repeat=2))
    return FiniteGradedModel(pcm, objects, products, unit, hom, ids, comp,
                             regrades, tensors, braiding, name)
