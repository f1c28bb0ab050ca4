"""Law checks for PCMs and their homomorphisms.

Finite kinds are scanned exhaustively in carrier order. Infinite kinds scan
a small exhaustive prefix of the carrier first and then seeded random
elements, up to the settings budget of tuples.
"""

from itertools import product

from twisted.python import log

from gmc.exception import NoJoinError
from gmc.report import Report
from gmc.settings import Settings


__all__ = ["check_pcm_laws", "check_separation", "check_effect_algebra",
           "check_hom", "check_join", "is_hom", "scan", "format_tuple"]


def format_tuple(grades):
    return "(%s)" % ",".join(str(grade) for grade in grades)


def scan(pcm, arity, settings=None, salt=""):
    """Yield C{arity}-tuples of grades of C{pcm} in scan order."""
    if pcm.finite:
        for item in product(pcm.elements(), repeat=arity):
            yield item
        return
    settings = settings or Settings()
    count = 0
    for item in product(pcm.prefix(), repeat=arity):
        if count >= settings.budget:
            return
        yield item
        count += 1
    rng = settings.random("%s:%s" % (salt, pcm.tag))
    while count < settings.budget:
        yield tuple(pcm.sample(rng) for _ in range(arity))
        count += 1


def _kleene_equal(left, right):
    return left == right


def check_pcm_laws(pcm, settings=None):
    """Check the PCM laws, monotonicity and the direct extension order.

    @return: A L{Report} with the lines C{Commutativity}, C{Unit},
        C{Associativity}, C{Monotonicity} and C{Extension-Order}.
    """
    report = Report(pcm.tag)
    report.declare("Commutativity", "Unit", "Associativity", "Monotonicity",
                   "Extension-Order")
    zero = pcm.zero
    for rank, (a,) in enumerate(scan(pcm, 1, settings, "unit")):
        report.record("Unit", pcm.add(a, zero) == a == pcm.add(zero, a),
                      format_tuple((a,)), rank)
    for rank, (a, b) in enumerate(scan(pcm, 2, settings, "pairs")):
        report.record("Commutativity",
                      _kleene_equal(pcm.add(a, b), pcm.add(b, a)),
                      format_tuple((a, b)), rank)
        report.record("Extension-Order", _order_agrees(pcm, a, b),
                      format_tuple((a, b)), rank)
    for rank, (a, b, c) in enumerate(scan(pcm, 3, settings, "triples")):
        report.record("Associativity", _associates(pcm, a, b, c),
                      format_tuple((a, b, c)), rank)
        report.record("Monotonicity", _monotone(pcm, a, b, c),
                      format_tuple((a, b, c)), rank)
    if not report.passed:
        log.msg("PCM %s fails %s" % (
            pcm.tag, ", ".join(check.name for check in report.failures())))
    return report


def _associates(pcm, a, b, c):
    ab = pcm.add(a, b)
    bc = pcm.add(b, c)
    left = None if ab is None else pcm.add(ab, c)
    right = None if bc is None else pcm.add(a, bc)
    return _kleene_equal(left, right)


def _monotone(pcm, x, y, b):
    if not pcm.leq(x, y) or not pcm.is_orthogonal(y, b):
        return True
    xb = pcm.add(x, b)
    return xb is not None and pcm.leq(xb, pcm.add(y, b))


def _order_agrees(pcm, a, b):
    direct = pcm.leq(a, b)
    if pcm.finite:
        return direct == pcm.search_leq(a, b)
    witnesses = pcm.witnesses(a, b)
    if any(pcm.add(a, c) != b for c in witnesses):
        return False
    return direct == bool(witnesses)


def check_join(pcm, settings=None):
    """Check that L{PCM.join} returns least upper bounds where defined."""
    report = Report(pcm.tag)
    report.declare("Upper-Bound", "Least")
    for rank, (a, b, u) in enumerate(scan(pcm, 3, settings, "join")):
        try:
            j = pcm.join(a, b)
        except NoJoinError:
            continue
        report.record("Upper-Bound", pcm.leq(a, j) and pcm.leq(b, j),
                      format_tuple((a, b)), rank)
        if pcm.leq(a, u) and pcm.leq(b, u):
            report.record("Least", pcm.leq(j, u), format_tuple((a, b, u)),
                          rank)
    return report


def check_separation(pcm, settings=None):
    """Check cancellativity: C{a + c = b + c} implies C{a = b}."""
    report = Report(pcm.tag)
    report.declare("Cancellativity")
    for rank, (a, b, c) in enumerate(scan(pcm, 3, settings, "cancel")):
        ac = pcm.add(a, c)
        passed = ac is None or ac != pcm.add(b, c) or a == b
        report.record("Cancellativity", passed, format_tuple((a, b, c)),
                      rank)
    return report


def check_effect_algebra(pcm, settings=None):
    """Check that every grade has a unique complement toward the top.

    @raises NoTopError: If C{pcm} has no top element.
    """
    top = pcm.top()
    report = Report(pcm.tag)
    report.declare("Complement", "Zero-One", "Involution")
    zero = pcm.zero
    if pcm.finite:
        elements = pcm.elements()
        complements = {}
        for rank, a in enumerate(elements):
            found = [b for b in elements if pcm.add(a, b) == top]
            report.record("Complement", len(found) == 1, format_tuple((a,)),
                          rank)
            if len(found) == 1:
                complements[a] = found[0]
        for rank, a in enumerate(elements):
            report.record("Zero-One",
                          not pcm.is_orthogonal(a, top) or a == zero,
                          format_tuple((a,)), rank)
            if a in complements:
                report.record("Involution",
                              complements.get(complements[a]) == a,
                              format_tuple((a,)), rank)
        return report
    for rank, (a, b) in enumerate(scan(pcm, 2, settings, "effect")):
        complement = pcm.complement(a)
        report.record("Complement",
                      pcm.add(a, complement) == top and
                      (pcm.add(a, b) != top or b == complement),
                      format_tuple((a, b)), rank)
        report.record("Zero-One", not pcm.is_orthogonal(a, top) or a == zero,
                      format_tuple((a,)), rank)
        report.record("Involution", pcm.complement(complement) == a,
                      format_tuple((a,)), rank)
    return report


def check_hom(hom, settings=None):
    """Check that C{hom} preserves zero and defined sums."""
    source, target = hom.source, hom.target
    report = Report("%s: %s -> %s" % (hom.name, source.tag, target.tag))
    report.declare("Unit", "Additivity")
    report.record("Unit", hom(source.zero) == target.zero,
                  format_tuple((source.zero,)))
    for rank, (a, b) in enumerate(scan(source, 2, settings, "hom")):
        ab = source.add(a, b)
        if ab is None:
            continue
        report.record("Additivity",
                      target.add(hom(a), hom(b)) == hom(ab),
                      format_tuple((a, b)), rank)
    return report


def is_hom(hom, settings=None):
    return check_hom(hom, settings).passed

