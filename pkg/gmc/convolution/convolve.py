"""Day convolution of finite copresheaves.

At grade C{c} the convolution C{F * G} holds the tagged tuples
C{(a, b, x, y)} with C{x} in C{F(a)}, C{y} in C{G(b)} and C{a + b <= c},
identified along regrading of either coordinate. Each class is named by its
least member.
"""

from itertools import product

from twisted.python import log

from gmc.convolution.copresheaf import (
    Copresheaf, constant, element_key, format_element)
from gmc.convolution.unionfind import UnionFind
from gmc.exception import PcmMismatchError
from gmc.finmodel.model import format_coordinates
from gmc.report import Report


__all__ = ["Convolution", "convolve", "check_convolution_coherence",
           "COHERENCE_LAWS"]


COHERENCE_LAWS = ("Left-Unit", "Left-Unit-Natural", "Right-Unit",
                  "Right-Unit-Natural", "Associator", "Associator-Natural")


class Convolution(Copresheaf):
    """The copresheaf C{F * G}, remembering its classes.

    @ivar factors: The pair C{(F, G)}.
    @ivar members: A C{dict} from grades to C{dict}s sending each class
        representative to the sorted list of its tagged tuples.
    @ivar classes: A C{dict} from grades to C{dict}s sending each tagged
        tuple to its representative.
    """

    def __init__(self, first, second, members, maps, name):
        self.factors = (first, second)
        self.members = members
        self.classes = dict(
            (c, dict((item, rep) for rep, items in found.items()
                     for item in items))
            for c, found in members.items())
        sets = dict((c, list(found)) for c, found in members.items())
        super(Convolution, self).__init__(first.pcm, sets, maps, name)

    def class_of(self, c, a, b, x, y):
        """Return the class of C{(a, b, x, y)} at C{c}."""
        return self.classes[c][(a, b, x, y)]


def _tagged(first, second, c):
    pcm = first.pcm
    for a, b in product(first.grades, repeat=2):
        total = pcm.add(a, b)
        if total is None or not pcm.leq(total, c):
            continue
        for x in first.at(a):
            for y in second.at(b):
                yield (a, b, x, y)


def convolve(first, second, name=None):
    """Return the L{Convolution} C{first * second}.

    Classes are generated by single regrading steps C{a <= a2} in the first
    coordinate and C{b <= b2} in the second, wherever the regraded pair still
    sums below the grade.

    @raises PcmMismatchError: If the copresheaves are over different PCMs.
    """
    if first.pcm != second.pcm:
        raise PcmMismatchError(first.pcm, second.pcm)
    pcm = first.pcm
    strict = [(e, e2) for e, e2 in first.leq_pairs() if e != e2]
    members = {}
    for c in first.grades:
        tagged = list(_tagged(first, second, c))
        present = set(tagged)
        classes = UnionFind(tagged)
        for a, b, x, y in tagged:
            for e, e2 in strict:
                if e == a:
                    step = (e2, b, first.regrade(a, e2, x), y)
                    if step in present:
                        classes.union((a, b, x, y), step)
                if e == b:
                    step = (a, e2, x, second.regrade(b, e2, y))
                    if step in present:
                        classes.union((a, b, x, y), step)
        members[c] = dict((group[0], group)
                          for group in classes.classes(key=element_key))
    maps = {}
    for c, c2 in first.leq_pairs():
        found = {}
        for rep in members[c]:
            # Every tagged tuple below c is also below c2.
            for group_rep, group in members[c2].items():
                if rep in group:
                    found[rep] = group_rep
                    break
        maps[(c, c2)] = found
    convolution = Convolution(first, second, members, maps,
                              name or "%s*%s" % (first.name, second.name))
    log.msg("Convolved %s and %s over %s: %s" % (
        first.name, second.name, pcm.tag,
        " ".join("%s:%d" % (c, len(members[c])) for c in first.grades)))
    return convolution


def _cex(*items):
    return format_coordinates([format_element(item) for item in items])


def _check_iso(report, name, source, target, image):
    """Check C{image} is a well-defined natural bijection C{source ->
    target}.

    @param image: A callable from a grade and a tagged tuple of C{source} to
        an element of C{target}.
    """
    components = {}
    for c in source.grades:
        component = {}
        for rep, group in sorted(source.members[c].items(),
                                 key=lambda item: element_key(item[0])):
            values = set(image(c, item) for item in group)
            if len(values) != 1:
                report.fail(name, _cex(c, rep))
                continue
            component[rep] = values.pop()
        report.record(name, sorted(component.values(), key=element_key) ==
                      list(target.at(c)), _cex(c))
        components[c] = component
    for c, c2 in source.leq_pairs():
        for rep, value in sorted(components[c].items(),
                                 key=lambda item: element_key(item[0])):
            moved = components[c2].get(source.regrade(c, c2, rep))
            report.record("%s-Natural" % (name,), moved is not None and
                          moved == target.maps[(c, c2)].get(value),
                          _cex(c, c2, rep))


def check_convolution_coherence(first, second, third):
    """Check the unitors of C{first} and the associator of the three.

    The left unitor sends the class of C{(a, b, *, y)} in C{J * F} to
    C{F(b <= c)(y)}, the right unitor is symmetric, and the associator sends
    the class of C{(u, c, (a, b, x, y), z)} to the class of
    C{(a, b + c, x, (b, c, y, z))}. Each must be well defined, bijective at
    every grade and natural in the grade.
    """
    pcm = first.pcm
    report = Report("%s, %s, %s" % (first.name, second.name, third.name))
    report.declare(*COHERENCE_LAWS)
    unit = constant(pcm)

    def left_image(c, item):
        a, b, star, y = item
        return first.regrade(b, c, y)

    def right_image(c, item):
        a, b, x, star = item
        return first.regrade(a, c, x)

    _check_iso(report, "Left-Unit", convolve(unit, first), first, left_image)
    _check_iso(report, "Right-Unit", convolve(first, unit), first,
               right_image)

    left = convolve(convolve(first, second), third)
    inner = convolve(second, third)
    right = convolve(first, inner)

    def associate(d, item):
        u, c, (a, b, x, y), z = item
        v = pcm.add(b, c)
        if v is None:
            return None
        middle = inner.class_of(v, b, c, y, z)
        return right.classes[d].get((a, v, x, middle))

    _check_iso(report, "Associator", left, right, associate)
    if not report.passed:
        log.msg("Convolution coherence fails %s" % (
            ", ".join(check.name for check in report.failures()),))
    return report
