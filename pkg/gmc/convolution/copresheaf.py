"""Finite copresheaves on the extension order of a finite PCM.

A copresheaf assigns a finite set to every grade and a function to every
pair C{e <= e2}, with identities on C{e <= e} and composites along chains.
Only the functions along some pairs need to be given: the others are derived
by composing along chains, and every chain between the same grades must
give the same function.

A document looks like::

  <copresheaf name="F">
    <pcm spec="two"/>
    <sets>
      <set grade="0"><element name="x"/></set>
      <set grade="1"><element name="x'"/></set>
    </sets>
    <maps>
      <map from="0" to="1"><entry source="x" target="x'"/></map>
    </maps>
  </copresheaf>
"""

from itertools import product as cartesian

from twisted.python import log

from gmc.exception import (
    IllFormedError, InfiniteCarrierError, PcmMismatchError)
from gmc.pcm.document import attribute, dump_pcm, load_pcm
from gmc.pcm.model import Grade
from gmc.pcm.syntax import parse_grade
from gmc.util import dump_tree, element, read_document, sub_element


__all__ = ["Copresheaf", "constant", "representable", "product",
           "enumerate_copresheaves", "covering_pairs", "element_key",
           "format_element", "load_copresheaf", "dump_copresheaf"]


def element_key(item):
    """A sort key for elements: grades, then names, then tuples."""
    if isinstance(item, Grade):
        return (0, item.sort_key())
    if isinstance(item, tuple):
        return (2, tuple(element_key(part) for part in item))
    return (1, str(item))


def format_element(item):
    if isinstance(item, tuple):
        return "(%s)" % ",".join(format_element(part) for part in item)
    return str(item)


def covering_pairs(pcm):
    """Return the pairs C{e < e2} with nothing strictly between them."""
    grades = pcm.elements()
    strict = [(e, e2) for e in grades for e2 in grades
              if e != e2 and pcm.leq(e, e2)]
    return [(e, e2) for e, e2 in strict
            if not any(m not in (e, e2) and pcm.leq(e, m) and pcm.leq(m, e2)
                       for m in grades)]


class Copresheaf(object):
    """A functor from the extension order of C{pcm} to finite sets.

    @param sets: A C{dict} from grades to iterables of hashable elements;
        missing grades hold the empty set.
    @param maps: A C{dict} from pairs C{(e, e2)} with C{e <= e2} to C{dict}s
        sending each element of C{sets[e]} into C{sets[e2]}.

    @ivar maps: The functions along every pair C{e <= e2}, derived ones
        included.
    @raises InfiniteCarrierError: If the PCM is infinite.
    @raises IllFormedError: If a given map goes down the order, is not a
        function between the sets, if two chains give different functions or
        if some pair has no function.
    """

    def __init__(self, pcm, sets, maps, name="copresheaf"):
        if not pcm.finite:
            raise InfiniteCarrierError(pcm)
        self.pcm = pcm
        self.grades = pcm.elements()
        self.name = name
        self.sets = dict(
            (e, tuple(sorted(set(sets.get(e, ())), key=element_key)))
            for e in self.grades)
        given = {}
        for (e, e2), mapping in maps.items():
            pcm._own(e, e2)
            if not pcm.leq(e, e2):
                raise IllFormedError("Map goes against the order", (e, e2))
            given[(e, e2)] = self._function(e, e2, mapping)
        self.maps = self._close(given)

    def _function(self, e, e2, mapping):
        mapping = dict(mapping)
        targets = set(self.sets[e2])
        for x in self.sets[e]:
            if x not in mapping:
                raise IllFormedError("Map is not defined on %s" % (
                    format_element(x),), (e, e2))
            if mapping[x] not in targets:
                raise IllFormedError("Map leaves the set at %s" % (e2,),
                                     (e, e2, format_element(x)))
        if e == e2 and any(mapping[x] != x for x in self.sets[e]):
            raise IllFormedError("Map along e <= e is not the identity",
                                 (e, e2))
        return dict((x, mapping[x]) for x in self.sets[e])

    def _close(self, given):
        successors = {}
        for (e, e2), mapping in sorted(given.items(),
                                       key=lambda item: element_key(item[0])):
            if e != e2:
                successors.setdefault(e, []).append((e2, mapping))
        maps = {}
        for source in self.grades:
            maps[(source, source)] = dict((x, x) for x in self.sets[source])
            queue = [source]
            while queue:
                middle = queue.pop(0)
                reached = maps[(source, middle)]
                for target, step in successors.get(middle, ()):
                    composite = dict((x, step[y]) for x, y in reached.items())
                    existing = maps.get((source, target))
                    if existing is None:
                        maps[(source, target)] = composite
                        queue.append(target)
                    elif existing != composite:
                        raise IllFormedError("Maps do not compose",
                                             (source, target))
        for e, e2 in cartesian(self.grades, repeat=2):
            if self.pcm.leq(e, e2) and (e, e2) not in maps:
                raise IllFormedError("Missing map", (e, e2))
        return maps

    def at(self, e):
        """Return the elements of C{F(e)} in sorted order."""
        return self.sets[e]

    def regrade(self, e, e2, x):
        """Apply C{F(e <= e2)} to C{x}."""
        return self.maps[(e, e2)][x]

    def leq_pairs(self):
        return [(e, e2) for e in self.grades for e2 in self.grades
                if self.pcm.leq(e, e2)]

    def size(self):
        return sum(len(items) for items in self.sets.values())

    def __eq__(self, other):
        return (isinstance(other, Copresheaf) and
                (self.pcm, self.sets, self.maps) ==
                (other.pcm, other.sets, other.maps))

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "<Copresheaf %s over %s: %s>" % (
            self.name, self.pcm.tag,
            " ".join("%s:%d" % (e, len(self.sets[e])) for e in self.grades))


def constant(pcm, name="J"):
    """The singleton everywhere: the unit of both convolution and the
    pointwise product."""
    grades = pcm.elements()
    return Copresheaf(pcm, dict((e, ["*"]) for e in grades),
                      dict((pair, {"*": "*"})
                           for pair in covering_pairs(pcm)), name)


def representable(pcm, a, name=None):
    """A singleton above C{a} and empty elsewhere."""
    pcm._own(a)
    grades = pcm.elements()
    sets = dict((e, ["*"] if pcm.leq(a, e) else []) for e in grades)
    maps = dict(((e, e2), {"*": "*"} if sets[e] else {})
                for e, e2 in covering_pairs(pcm))
    return Copresheaf(pcm, sets, maps, name or "y(%s)" % (a,))


def product(first, second, name=None):
    """The pointwise product C{F(e) x G(e)}."""
    if first.pcm != second.pcm:
        raise PcmMismatchError(first.pcm, second.pcm)
    sets = dict((e, list(cartesian(first.at(e), second.at(e))))
                for e in first.grades)
    maps = {}
    for e, e2 in first.leq_pairs():
        maps[(e, e2)] = dict(((x, y), (first.regrade(e, e2, x),
                                       second.regrade(e, e2, y)))
                             for x, y in sets[e])
    return Copresheaf(first.pcm, sets, maps,
                      name or "%sx%s" % (first.name, second.name))


def enumerate_copresheaves(pcm, max_size):
    """Yield every copresheaf with at most C{max_size} elements per grade.

    Elements at grade C{e} are named C{x0, x1, ...}; the functions along
    covering pairs range over all choices that compose consistently.
    """
    grades = pcm.elements()
    pairs = covering_pairs(pcm)
    names = ["x%d" % (index,) for index in range(max_size)]
    for sizes in cartesian(range(max_size + 1), repeat=len(grades)):
        sets = dict((e, names[:size]) for e, size in zip(grades, sizes))
        choices = []
        for e, e2 in pairs:
            functions = cartesian(sets[e2], repeat=len(sets[e]))
            choices.append([dict(zip(sets[e], images))
                            for images in functions])
        for picked in cartesian(*choices):
            try:
                yield Copresheaf(pcm, sets, dict(zip(pairs, picked)),
                                 "F%s" % ("".join(map(str, sizes)),))
            except IllFormedError:
                continue


def load_copresheaf(document):
    """Parse a C{copresheaf} document.

    @raises ParseError: If the text is not a C{copresheaf} document.
    @raises IllFormedError: If a set or map is broken.
    """
    root = read_document(document, "copresheaf")
    pcm = load_pcm(root.find("pcm"))
    sets = {}
    sets_node = root.find("sets")
    for node in ([] if sets_node is None else sets_node.findall("set")):
        e = parse_grade(pcm, attribute(node, "grade"))
        if e in sets:
            raise IllFormedError("Repeated set", (e,))
        sets[e] = [attribute(child, "name", e)
                   for child in node.findall("element")]
    maps = {}
    maps_node = root.find("maps")
    for node in ([] if maps_node is None else maps_node.findall("map")):
        key = (parse_grade(pcm, attribute(node, "from")),
               parse_grade(pcm, attribute(node, "to")))
        if key in maps:
            raise IllFormedError("Repeated map", key)
        maps[key] = dict((attribute(entry, "source", *key),
                          attribute(entry, "target", *key))
                         for entry in node.findall("entry"))
    copresheaf = Copresheaf(pcm, sets, maps, root.get("name", "copresheaf"))
    log.msg("Loaded %r" % (copresheaf,))
    return copresheaf


def dump_copresheaf(copresheaf):
    """Serialize the sets and the functions along covering pairs."""
    root = element("copresheaf", name=copresheaf.name)
    dump_pcm(root, copresheaf.pcm)
    sets = sub_element(root, "sets")
    for e in copresheaf.grades:
        node = sub_element(sets, "set", grade=e)
        for x in copresheaf.at(e):
            sub_element(node, "element", name=format_element(x))
    maps = sub_element(root, "maps")
    for e, e2 in covering_pairs(copresheaf.pcm):
        node = sub_element(maps, "map", to=e2)
        node.set("from", str(e))
        for x in copresheaf.at(e):
            sub_element(node, "entry", source=format_element(x),
                        target=format_element(copresheaf.regrade(e, e2, x)))
    return dump_tree(root)
