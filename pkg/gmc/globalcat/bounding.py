"""Upper-bounding operations used to compose morphisms of different grades.

An upper-bounding operation is an associative binary operation on the
carrier, with unit 0, whose result extends both arguments. The join of a PCM
is one when it exists; addition on the naturals is another.
"""

from twisted.python import log

from gmc.exception import IllFormedError, NoJoinError, OpInvalidError
from gmc.pcm.document import attribute, load_pcm
from gmc.pcm.laws import format_tuple, scan
from gmc.pcm.model import Grade
from gmc.pcm.syntax import parse_grade
from gmc.report import Report
from gmc.util import read_document


__all__ = ["UpperBoundingOp", "join_op", "plus_op", "table_op",
           "load_upper_bound", "check_upper_bounding"]


_NATURAL_KINDS = ("nat_plus", "nat_max")


class UpperBoundingOp(object):
    """A binary operation on the grades of C{pcm}.

    @param pcm: The L{PCM} whose carrier the operation acts on.
    @param function: A callable taking two L{Grade}s and returning a
        L{Grade}, or C{None} where the operation is undefined.
    @param name: The name reports and diagnostics use.
    """

    def __init__(self, pcm, function, name):
        self.pcm = pcm
        self.function = function
        self.name = name
        self._report = None

    def apply(self, a, b):
        """Return C{a op b}, or C{None} where undefined."""
        self.pcm._own(a, b)
        try:
            return self.function(a, b)
        except NoJoinError:
            return None

    def __call__(self, a, b):
        """Return C{a op b}.

        @raises OpInvalidError: If the operation is undefined there.
        """
        result = self.apply(a, b)
        if result is None:
            raise OpInvalidError("%s is undefined on %s" % (
                self.name, format_tuple((a, b))))
        return result

    def check(self, settings=None):
        """Return the cached L{check_upper_bounding} report."""
        if self._report is None:
            self._report = check_upper_bounding(self.pcm, self, settings)
        return self._report

    def validate(self, settings=None):
        """Check the operation once and refuse it if a law fails.

        @raises OpInvalidError: If the operation is not upper-bounding.
        """
        report = self.check(settings)
        if not report.passed:
            raise OpInvalidError("%s is not an upper-bounding operation on "
                                 "%s: %s" % (self.name, self.pcm.tag,
                                             report.failures()[0].line()))
        return report

    @property
    def idempotent(self):
        return dict(self.check().facts()).get("idempotent") == "yes"

    def __repr__(self):
        return "<UpperBoundingOp %s on %s>" % (self.name, self.pcm.tag)


def join_op(pcm):
    """The join of the extension preorder."""
    return UpperBoundingOp(pcm, pcm.join, "join")


def plus_op(pcm):
    """Addition: numeric on the naturals, the PCM's own sum elsewhere.

    @raises OpInvalidError: If the PCM is not total.
    """
    if pcm.kind in _NATURAL_KINDS:
        return UpperBoundingOp(
            pcm, lambda a, b: Grade(pcm, a.payload + b.payload), "plus")
    if not pcm.is_total:
        raise OpInvalidError("plus needs a total PCM, %s is partial" % (
            pcm.tag,))
    return UpperBoundingOp(pcm, pcm.add, "plus")


def table_op(pcm, table, name="table"):
    """An operation given by a C{dict} of grade pairs.

    Pairs involving 0 may be left out and default to the other argument.
    """
    entries = dict(table)
    zero = pcm.zero

    def lookup(a, b):
        if (a, b) in entries:
            return entries[(a, b)]
        if a == zero:
            return b
        if b == zero:
            return a
        return None

    return UpperBoundingOp(pcm, lookup, name)


def load_upper_bound(document, name="table"):
    """Load an C{<upperbound>} document.

    It holds a C{<pcm>} element and C{<entry left right result>} children
    whose attributes are grade literals.

    @raises ParseError: If the text is not an C{upperbound} document.
    @raises IllFormedError: If an entry is incomplete or repeated.
    """
    root = read_document(document, "upperbound")
    pcm = load_pcm(root.find("pcm"))
    table = {}
    for node in root.findall("entry"):
        left = parse_grade(pcm, attribute(node, "left"))
        right = parse_grade(pcm, attribute(node, "right"))
        key = (left, right)
        if key in table:
            raise IllFormedError("Repeated entry", key)
        table[key] = parse_grade(pcm, attribute(node, "result", *key))
    log.msg("Loaded %d upper-bound entries over %s" % (len(table), pcm.tag))
    return table_op(pcm, table, name)


def _equal(left, right):
    return left is not None and left == right


def check_upper_bounding(pcm, op, settings=None):
    """Check that C{op} is associative, unital and bounds its arguments.

    @return: A L{Report} with the lines C{Associativity}, C{Unit},
        C{Upper-Bound-Left} and C{Upper-Bound-Right}, and the fact
        C{idempotent}.
    """
    report = Report("%s on %s" % (op.name, pcm.tag))
    report.declare("Associativity", "Unit", "Upper-Bound-Left",
                   "Upper-Bound-Right")
    zero = pcm.zero
    idempotent = True
    for rank, (a,) in enumerate(scan(pcm, 1, settings, "bound-unit")):
        report.record("Unit", _equal(op.apply(a, zero), a) and
                      _equal(op.apply(zero, a), a), format_tuple((a,)), rank)
        if not _equal(op.apply(a, a), a):
            idempotent = False
    for rank, (a, b) in enumerate(scan(pcm, 2, settings, "bound-pairs")):
        ab = op.apply(a, b)
        report.record("Upper-Bound-Left", ab is not None and pcm.leq(a, ab),
                      format_tuple((a, b)), rank)
        report.record("Upper-Bound-Right", ab is not None and pcm.leq(b, ab),
                      format_tuple((a, b)), rank)
    for rank, (a, b, c) in enumerate(scan(pcm, 3, settings, "bound-triples")):
        ab, bc = op.apply(a, b), op.apply(b, c)
        left = None if ab is None else op.apply(ab, c)
        right = None if bc is None else op.apply(a, bc)
        report.record("Associativity", _equal(left, right),
                      format_tuple((a, b, c)), rank)
    report.fact("idempotent", "yes" if idempotent else "no")
    if not report.passed:
        log.msg("%s fails %s" % (op.name, ", ".join(
            check.name for check in report.failures())))
    return report
