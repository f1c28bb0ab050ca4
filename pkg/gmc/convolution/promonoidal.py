"""Thin promonoidal structures on the extension order of a finite PCM.

A thin promonoidal category on a preorder is a pair of truth tables: a
ternary C{P(a, b; c)} and a unary C{I(c)}. The PCM gives
C{P(a, b; c)} exactly when C{a + b} is defined and below C{c}, and C{I(c)}
everywhere.
"""

from itertools import product

from twisted.python import log

from gmc.exception import InfiniteCarrierError
from gmc.pcm.laws import format_tuple
from gmc.report import Report


__all__ = ["BoolPromonoidal", "promonoidal_from_pcm", "check_promonoidal_laws",
           "PROMONOIDAL_LAWS"]


PROMONOIDAL_LAWS = ("Associativity", "Unit-Left", "Unit-Right",
                    "Functoriality-P", "Functoriality-I")


class BoolPromonoidal(object):
    """Truth tables C{P} and C{I} over the grades of a finite PCM.

    @param pcm: The finite L{PCM} whose extension order is the base.
    @param p: A C{dict} from grade triples C{(a, b, c)} to C{bool}.
    @param i: A C{dict} from grades to C{bool}.
    """

    def __init__(self, pcm, p, i, name=None):
        if not pcm.finite:
            raise InfiniteCarrierError(pcm)
        self.pcm = pcm
        self.grades = pcm.elements()
        self.p = dict(p)
        self.i = dict(i)
        self.name = name or pcm.tag

    def product(self, a, b, c):
        """Return C{P(a, b; c)}."""
        return self.p.get((a, b, c), False)

    def unit(self, c):
        """Return C{I(c)}."""
        return self.i.get(c, False)

    def bid(self, a, b):
        """The hom-predicate of the base: C{a <= b}."""
        return self.pcm.leq(a, b)

    def mutate(self, a, b, c, value):
        """Return a copy where C{P(a, b; c)} is C{value}."""
        p = dict(self.p)
        p[(a, b, c)] = value
        return BoolPromonoidal(self.pcm, p, self.i, "%s'" % (self.name,))

    def __repr__(self):
        return "<BoolPromonoidal %s>" % (self.name,)


def promonoidal_from_pcm(pcm):
    """Encode C{pcm} as a L{BoolPromonoidal}.

    @raises InfiniteCarrierError: If the carrier is infinite.
    """
    if not pcm.finite:
        raise InfiniteCarrierError(pcm)
    grades = pcm.elements()
    p = {}
    for a, b, c in product(grades, repeat=3):
        total = pcm.add(a, b)
        p[(a, b, c)] = total is not None and pcm.leq(total, c)
    return BoolPromonoidal(pcm, p, dict((c, True) for c in grades))


def check_promonoidal_laws(structure):
    """Check associativity, both unit laws and functoriality exhaustively.

    The laws compare the two composites of C{P} with itself, and the
    composites of C{P} with C{I} against C{bid}. Counterexamples are the
    least tuples in carrier order.
    """
    report = Report(structure.name)
    report.declare(*PROMONOIDAL_LAWS)
    grades = structure.grades
    p, i, bid = structure.product, structure.unit, structure.bid
    for a, b, c, d in product(grades, repeat=4):
        left = any(p(a, b, x) and p(x, c, d) for x in grades)
        right = any(p(b, c, x) and p(a, x, d) for x in grades)
        report.record("Associativity", left == right,
                      format_tuple((a, b, c, d)))
    for a, b in product(grades, repeat=2):
        report.record("Unit-Left",
                      any(i(x) and p(x, a, b) for x in grades) == bid(a, b),
                      format_tuple((a, b)))
        report.record("Unit-Right",
                      any(i(x) and p(a, x, b) for x in grades) == bid(a, b),
                      format_tuple((a, b)))
        if bid(a, b) and i(a):
            report.record("Functoriality-I", i(b), format_tuple((a, b)))
    for a, b, c, d in product(grades, repeat=4):
        if not p(a, b, c):
            continue
        # Contravariant in the first two arguments, covariant in the last.
        holds = ((not bid(d, a) or p(d, b, c)) and
                 (not bid(d, b) or p(a, d, c)) and
                 (not bid(c, d) or p(a, b, d)))
        report.record("Functoriality-P", holds, format_tuple((a, b, c, d)))
    if not report.passed:
        log.msg("Promonoidal structure %s fails %s" % (
            structure.name,
            ", ".join(check.name for check in report.failures())))
    return report
