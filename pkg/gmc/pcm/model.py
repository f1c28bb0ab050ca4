"""Partial commutative monoids and their grades.

A L{PCM} is immutable once built. Its canonical descriptor, L{PCM.tag}, is
its identity: two instances built from equal descriptors are the same PCM
and their grades compare equal.
"""

from fractions import Fraction
from itertools import combinations, product
import math

from gmc.exception import (
    InfiniteCarrierError, LawViolationError, MalformedSpecError, NoJoinError,
    NoTopError, NotEffectAlgebraError, OwnerMismatchError, UndecidableError)
from gmc.util import format_rational


__all__ = ["Grade", "PCM", "SingletonPCM", "TwoPCM", "ThreePCM",
           "PowersetPCM", "RWPCM", "IntervalPCM", "ProductPCM", "NatPlusPCM",
           "NatMaxPCM", "SemilatticePCM", "TablePCM", "PcmHomomorphism",
           "identity_hom", "top_preserving_hom", "table_hom",
           "device_quantities"]


class Grade(object):
    """An element of a specific L{PCM}.

    @ivar pcm: The owning PCM.
    @ivar payload: The kind-specific value: an C{int}, a C{frozenset}, a pair
        of C{frozenset}s, a L{Fraction}, a C{tuple} of component payloads or
        an element name.
    """

    __slots__ = ("pcm", "payload")

    def __init__(self, pcm, payload):
        self.pcm = pcm
        self.payload = payload

    def __eq__(self, other):
        return (isinstance(other, Grade) and self.pcm.tag == other.pcm.tag and
                self.payload == other.payload)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.pcm.tag, self.payload))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return self.pcm.sort_key(self.payload)

    def __str__(self):
        return self.pcm.format_payload(self.payload)

    def __repr__(self):
        return "<Grade %s of %s>" % (self, self.pcm.tag)


class PCM(object):
    """A partial commutative monoid.

    Subclasses implement the payload-level operations (C{_add}, C{_leq},
    C{_contains} and friends); this class supplies owner checks and the
    exhaustive-search fallbacks shared by the finite kinds.

    @cvar kind: The descriptor keyword of the kind.
    @cvar finite: Whether the carrier can be enumerated.
    """

    kind = None
    finite = True
    total = None

    def __init__(self, validate=False):
        self.tag = self.describe()
        self._elements = None
        self._index = None
        self._effect_algebra = None
        if validate and self.finite:
            self.validate()

    def validate(self, settings=None):
        """Run the PCM law suite and raise L{LawViolationError} on failure."""
        from gmc.pcm.laws import check_pcm_laws
        report = check_pcm_laws(self, settings)
        if not report.passed:
            raise LawViolationError(report)
        return report

    def describe(self):
        """Return the canonical descriptor of this instance."""
        raise NotImplementedError()

    def __eq__(self, other):
        return isinstance(other, PCM) and self.tag == other.tag

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return "<PCM %s>" % (self.tag,)

    # Grades

    def grade(self, payload):
        """Wrap C{payload} as a L{Grade} of this PCM.

        @raises MalformedSpecError: If C{payload} is not in the carrier.
        """
        if not self._contains(payload):
            raise MalformedSpecError("%r is not an element of %s" % (
                payload, self.tag))
        return Grade(self, payload)

    def coerce(self, value):
        """Turn a parsed grade literal into a L{Grade}.

        @raises MalformedSpecError: If the literal does not denote an element.
        """
        try:
            payload = self._coerce(value)
        except (ValueError, TypeError, KeyError):
            payload = None
        if payload is None or not self._contains(payload):
            raise MalformedSpecError("Invalid grade literal %s for %s" % (
                _literal_text(value), self.tag))
        return Grade(self, payload)

    @property
    def zero(self):
        return Grade(self, self._zero())

    def owns(self, grade):
        return isinstance(grade, Grade) and grade.pcm.tag == self.tag

    def _own(self, *grades):
        for grade in grades:
            if not self.owns(grade):
                raise OwnerMismatchError(grade, self)

    def format_payload(self, payload):
        return self._format(payload)

    def sort_key(self, payload):
        if self.finite:
            return self._index_of()[payload]
        return self._sort_key(payload)

    def _index_of(self):
        if self._index is None:
            self._index = dict((grade.payload, position) for position, grade
                               in enumerate(self.elements()))
        return self._index

    # Carrier

    def elements(self):
        """Return the carrier in its fixed scan order.

        @raises InfiniteCarrierError: For infinite kinds.
        """
        if not self.finite:
            raise InfiniteCarrierError(self)
        if self._elements is None:
            self._elements = tuple(Grade(self, payload)
                                   for payload in self._enumerate())
        return self._elements

    def prefix(self):
        """Return the exhaustively scanned small prefix of the carrier."""
        if self.finite:
            return self.elements()
        return tuple(Grade(self, payload) for payload in self._prefix())

    def sample(self, rng):
        """Return one grade drawn with C{rng}."""
        if self.finite:
            return rng.choice(self.elements())
        return Grade(self, self._sample(rng))

    def size(self):
        return len(self.elements())

    @property
    def is_total(self):
        if self.total is not None:
            return self.total
        elements = self.elements()
        return all(self._add(a.payload, b.payload) is not None
                   for a in elements for b in elements)

    # Operations

    def add(self, a, b):
        """Return C{a + b}, or C{None} when undefined."""
        self._own(a, b)
        result = self._add(a.payload, b.payload)
        if result is None:
            return None
        return Grade(self, result)

    def is_orthogonal(self, a, b):
        return self.add(a, b) is not None

    def leq(self, a, b):
        """Decide the extension preorder with the kind's direct rule."""
        self._own(a, b)
        return self._leq(a.payload, b.payload)

    def search_leq(self, a, b):
        """Decide the extension preorder by exhaustive witness search."""
        self._own(a, b)
        return any(self._add(a.payload, c.payload) == b.payload
                   for c in self.elements())

    def witnesses(self, a, b):
        """Return every C{c} with C{a + c = b}, in scan order."""
        self._own(a, b)
        return [Grade(self, payload)
                for payload in self._witnesses(a.payload, b.payload)]

    def join(self, a, b):
        """Return the least upper bound of C{a} and C{b}.

        @raises NoJoinError: If the extension preorder has none.
        """
        self._own(a, b)
        return Grade(self, self._join(a.payload, b.payload))

    def top(self):
        """Return the top element of the extension preorder.

        @raises NoTopError: If there is none.
        """
        return Grade(self, self._top())

    def has_top(self):
        try:
            self.top()
        except NoTopError:
            return False
        return True

    def complement(self, a):
        """Return the unique C{b} with C{a + b} the top element.

        @raises NotEffectAlgebraError: If this PCM is not an effect algebra.
        """
        self._own(a)
        return Grade(self, self._complement(a.payload))

    # Payload level: exhaustive defaults for finite kinds.

    def _enumerate(self):
        raise InfiniteCarrierError(self)

    def _prefix(self):
        raise NotImplementedError()

    def _sample(self, rng):
        raise NotImplementedError()

    def _sort_key(self, payload):
        return payload

    def _zero(self):
        raise NotImplementedError()

    def _contains(self, payload):
        raise NotImplementedError()

    def _coerce(self, value):
        return value

    def _format(self, payload):
        return str(payload)

    def _add(self, a, b):
        raise NotImplementedError()

    def _payloads(self):
        return [grade.payload for grade in self.elements()]

    def _leq(self, a, b):
        if not self.finite:
            raise UndecidableError("No extension order rule for %s" % (
                self.tag,))
        return any(self._add(a, c) == b for c in self._payloads())

    def _witnesses(self, a, b):
        if not self.finite:
            raise InfiniteCarrierError(self)
        return [c for c in self._payloads() if self._add(a, c) == b]

    def _join(self, a, b):
        if not self.finite:
            raise NoJoinError("No join rule for %s" % (self.tag,))
        payloads = self._payloads()
        bounds = [u for u in payloads if self._leq(a, u) and self._leq(b, u)]
        for candidate in bounds:
            if all(self._leq(candidate, u) for u in bounds):
                return candidate
        raise NoJoinError("%s and %s have no join in %s" % (
            self._format(a), self._format(b), self.tag))

    def _top(self):
        if not self.finite:
            raise NoTopError(self)
        payloads = self._payloads()
        for candidate in payloads:
            if all(self._leq(other, candidate) for other in payloads):
                return candidate
        raise NoTopError(self)

    def _complement(self, a):
        if not self.finite or not self.is_effect_algebra():
            raise NotEffectAlgebraError("%s is not an effect algebra" % (
                self.tag,))
        top = self._top()
        return [b for b in self._payloads() if self._add(a, b) == top][0]

    def is_effect_algebra(self):
        if self._effect_algebra is None:
            from gmc.pcm.laws import check_effect_algebra
            try:
                self._effect_algebra = check_effect_algebra(self).passed
            except NoTopError:
                self._effect_algebra = False
        return self._effect_algebra


def _literal_text(value):
    if isinstance(value, frozenset):
        return "{%s}" % ",".join(sorted(str(item) for item in value))
    if isinstance(value, tuple):
        return "(%s)" % ",".join(_literal_text(item) for item in value)
    if isinstance(value, Fraction):
        return format_rational(value)
    return str(value)


def _format_set(items):
    return "{%s}" % ",".join(sorted(items))


def _subsets(carrier):
    ordered = sorted(carrier)
    result = []
    for size in range(len(ordered) + 1):
        for chosen in combinations(ordered, size):
            result.append(frozenset(chosen))
    return result


def _as_name_set(value):
    if not isinstance(value, frozenset):
        raise ValueError(value)
    return frozenset(str(item) for item in value)


class SingletonPCM(PCM):
    """The one-element PCM with its unique total operation."""

    kind = "singleton"
    total = True

    def describe(self):
        return "singleton"

    def _enumerate(self):
        return [0]

    def _zero(self):
        return 0

    def _contains(self, payload):
        return payload == 0 and not isinstance(payload, bool)

    def _add(self, a, b):
        return 0

    def _leq(self, a, b):
        return True

    def _witnesses(self, a, b):
        return [0]

    def _join(self, a, b):
        return 0

    def _top(self):
        return 0

    def _complement(self, a):
        return 0


class TwoPCM(PCM):
    """Two elements where C{1 + 1} is undefined."""

    kind = "two"
    total = False

    def describe(self):
        return "two"

    def _enumerate(self):
        return [0, 1]

    def _zero(self):
        return 0

    def _contains(self, payload):
        return payload in (0, 1) and not isinstance(payload, bool)

    def _add(self, a, b):
        if a and b:
            return None
        return a + b

    def _leq(self, a, b):
        return a <= b

    def _join(self, a, b):
        return max(a, b)

    def _top(self):
        return 1

    def _complement(self, a):
        return 1 - a


class ThreePCM(PCM):
    """Elements 0, 1, 2 under C{max}, undefined only at C{2 + 2}."""

    kind = "three"
    total = False

    def describe(self):
        return "three"

    def _enumerate(self):
        return [0, 1, 2]

    def _zero(self):
        return 0

    def _contains(self, payload):
        return payload in (0, 1, 2) and not isinstance(payload, bool)

    def _add(self, a, b):
        if a == 2 and b == 2:
            return None
        return max(a, b)

    def _leq(self, a, b):
        return a <= b

    def _join(self, a, b):
        return max(a, b)

    def _top(self):
        return 2


class PowersetPCM(PCM):
    """Subsets of a finite set of devices under disjoint union.

    @param carrier: The device names.
    """

    kind = "powerset"

    def __init__(self, carrier, validate=False):
        carrier = [str(name) for name in carrier]
        if len(set(carrier)) != len(carrier):
            raise MalformedSpecError("Duplicate devices in %r" % (carrier,))
        self.carrier = frozenset(carrier)
        self.total = not carrier
        super(PowersetPCM, self).__init__(validate)

    def describe(self):
        return "powerset%s" % _format_set(self.carrier)

    def _enumerate(self):
        return _subsets(self.carrier)

    def _zero(self):
        return frozenset()

    def _contains(self, payload):
        return isinstance(payload, frozenset) and payload <= self.carrier

    def _coerce(self, value):
        return _as_name_set(value)

    def _format(self, payload):
        return _format_set(payload)

    def _add(self, a, b):
        if a & b:
            return None
        return a | b

    def _leq(self, a, b):
        return a <= b

    def _witnesses(self, a, b):
        if a <= b:
            return [b - a]
        return []

    def _join(self, a, b):
        return a | b

    def _top(self):
        return self.carrier

    def _complement(self, a):
        return self.carrier - a


class RWPCM(PCM):
    """Read and write sets over a finite set of locations.

    Two grades combine when neither writes a location the other touches.

    @param locations: The location names.
    """

    kind = "rw"

    def __init__(self, locations, validate=False):
        locations = [str(name) for name in locations]
        if len(set(locations)) != len(locations):
            raise MalformedSpecError("Duplicate locations in %r" % (
                locations,))
        self.locations = frozenset(locations)
        self.total = not locations
        super(RWPCM, self).__init__(validate)

    def describe(self):
        return "rw%s" % _format_set(self.locations)

    def _enumerate(self):
        subsets = _subsets(self.locations)
        pairs = [(reads, writes) for reads in subsets for writes in subsets]
        return sorted(pairs, key=lambda pair: (
            len(pair[0]) + len(pair[1]), subsets.index(pair[0]),
            subsets.index(pair[1])))

    def _zero(self):
        return (frozenset(), frozenset())

    def _contains(self, payload):
        return (isinstance(payload, tuple) and len(payload) == 2 and
                all(isinstance(part, frozenset) and part <= self.locations
                    for part in payload))

    def _coerce(self, value):
        reads, writes = value
        return (_as_name_set(reads), _as_name_set(writes))

    def _format(self, payload):
        return "(%s,%s)" % (_format_set(payload[0]), _format_set(payload[1]))

    def _add(self, a, b):
        reads1, writes1 = a
        reads2, writes2 = b
        if writes1 & (reads2 | writes2) or writes2 & (reads1 | writes1):
            return None
        return (reads1 | reads2, writes1 | writes2)

    def _leq(self, a, b):
        reads1, writes1 = a
        reads2, writes2 = b
        return (reads1 <= reads2 and writes1 <= writes2 and
                not (writes2 - writes1) & reads1 and
                not (reads2 - reads1) & writes1)


class IntervalPCM(PCM):
    """The rational interval M{[0, r]} under bounded addition.

    @param bound: The bound C{r}, a strictly positive C{int} or L{Fraction}.
    """

    kind = "interval"
    finite = False
    total = False

    def __init__(self, bound, validate=False):
        if (isinstance(bound, bool) or
                not isinstance(bound, (int, Fraction))):
            raise MalformedSpecError("Invalid interval bound %r" % (bound,))
        bound = Fraction(bound)
        if bound <= 0:
            raise MalformedSpecError(
                "Interval bound must be positive, got %s" %
                format_rational(bound))
        self.bound = bound
        super(IntervalPCM, self).__init__(validate)

    def describe(self):
        return "interval(%s)" % format_rational(self.bound)

    def _prefix(self):
        return _rationals_up_to(self.bound, 4)

    def _sample(self, rng):
        denominator = rng.randint(1, 12)
        numerator = rng.randint(0, int(math.floor(self.bound * denominator)))
        return Fraction(numerator, denominator)

    def _zero(self):
        return Fraction(0)

    def _contains(self, payload):
        return (isinstance(payload, Fraction) and
                0 <= payload <= self.bound)

    def _coerce(self, value):
        if isinstance(value, bool):
            raise ValueError(value)
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        raise ValueError(value)

    def _format(self, payload):
        return format_rational(payload)

    def _add(self, a, b):
        total = a + b
        if total > self.bound:
            return None
        return total

    def _leq(self, a, b):
        return a <= b

    def _witnesses(self, a, b):
        if a <= b:
            return [b - a]
        return []

    def _join(self, a, b):
        return max(a, b)

    def _top(self):
        return self.bound

    def _complement(self, a):
        return self.bound - a


def _rationals_up_to(bound, denominator_limit):
    values = set()
    for denominator in range(1, denominator_limit + 1):
        for numerator in range(
                int(math.floor(bound * denominator)) + 1):
            values.add(Fraction(numerator, denominator))
    return sorted(values)


class _NatPCM(PCM):

    finite = False
    total = True

    def describe(self):
        return self.kind

    def _prefix(self):
        return list(range(8))

    def _sample(self, rng):
        return rng.randint(0, 64)

    def _zero(self):
        return 0

    def _contains(self, payload):
        return (isinstance(payload, int) and not isinstance(payload, bool) and
                payload >= 0)

    def _leq(self, a, b):
        return a <= b

    def _join(self, a, b):
        return max(a, b)

    def _top(self):
        raise NoTopError(self)

    def _complement(self, a):
        raise NotEffectAlgebraError("%s has no top element" % (self.tag,))


class NatPlusPCM(_NatPCM):
    """The natural numbers under addition."""

    kind = "nat_plus"

    def _add(self, a, b):
        return a + b

    def _witnesses(self, a, b):
        if a <= b:
            return [b - a]
        return []


class NatMaxPCM(_NatPCM):
    """The natural numbers under maximum."""

    kind = "nat_max"

    def _add(self, a, b):
        return max(a, b)

    def _witnesses(self, a, b):
        if a < b:
            return [b]
        if a == b:
            return list(range(b + 1))
        return []


class ProductPCM(PCM):
    """The componentwise product of a list of PCMs.

    @param components: The component L{PCM}s, in order.
    """

    kind = "product"

    def __init__(self, components, validate=False):
        self.components = tuple(components)
        if not self.components:
            raise MalformedSpecError("A product needs at least one component")
        self.finite = all(component.finite for component in self.components)
        self.total = all(component.is_total for component in self.components)
        super(ProductPCM, self).__init__(validate)

    def describe(self):
        return "product(%s)" % ",".join(component.tag
                                        for component in self.components)

    def _enumerate(self):
        return list(product(*[[grade.payload for grade in component.elements()]
                              for component in self.components]))

    def _prefix(self):
        return list(product(*[[grade.payload for grade in component.prefix()]
                              for component in self.components]))

    def _sample(self, rng):
        return tuple(component.sample(rng).payload
                     for component in self.components)

    def _sort_key(self, payload):
        return tuple(component.sort_key(item)
                     for component, item in zip(self.components, payload))

    def _zero(self):
        return tuple(component._zero() for component in self.components)

    def _contains(self, payload):
        return (isinstance(payload, tuple) and
                len(payload) == len(self.components) and
                all(component._contains(item)
                    for component, item in zip(self.components, payload)))

    def _coerce(self, value):
        if not isinstance(value, tuple) or len(value) != len(self.components):
            raise ValueError(value)
        return tuple(component.coerce(item).payload
                     for component, item in zip(self.components, value))

    def _format(self, payload):
        return "(%s)" % ",".join(
            component._format(item)
            for component, item in zip(self.components, payload))

    def _add(self, a, b):
        result = []
        for component, left, right in zip(self.components, a, b):
            total = component._add(left, right)
            if total is None:
                return None
            result.append(total)
        return tuple(result)

    def _leq(self, a, b):
        return all(component._leq(left, right)
                   for component, left, right in zip(self.components, a, b))

    def _witnesses(self, a, b):
        return list(product(*[component._witnesses(left, right)
                              for component, left, right
                              in zip(self.components, a, b)]))

    def _join(self, a, b):
        return tuple(component._join(left, right)
                     for component, left, right in zip(self.components, a, b))

    def _top(self):
        return tuple(component._top() for component in self.components)

    def _complement(self, a):
        return tuple(component._complement(item)
                     for component, item in zip(self.components, a))


def device_quantities(bounds, validate=False):
    """Build the product of intervals bounding each device's quantity.

    @param bounds: A C{dict} mapping device names to their maximum quantity;
        components are ordered by device name.
    """
    names = sorted(bounds)
    pcm = ProductPCM([IntervalPCM(bounds[name]) for name in names], validate)
    pcm.devices = tuple(names)
    return pcm


class SemilatticePCM(PCM):
    """A finite join semilattice with least element, under its join.

    @param elements: The element names, least element first.
    @param joins: A C{dict} mapping every ordered pair of names to its join.
    """

    kind = "semilattice"
    total = True

    def __init__(self, elements, joins):
        self.names = tuple(str(name) for name in elements)
        if not self.names:
            raise MalformedSpecError("A semilattice needs an element")
        if len(set(self.names)) != len(self.names):
            raise MalformedSpecError("Duplicate semilattice elements")
        self.joins = dict(joins)
        for a in self.names:
            for b in self.names:
                if self.joins.get((a, b)) not in self.names:
                    raise MalformedSpecError(
                        "Join table is missing %s v %s" % (a, b))
        super(SemilatticePCM, self).__init__(validate=True)

    def validate(self, settings=None):
        from gmc.pcm.laws import check_pcm_laws
        report = check_pcm_laws(self, settings)
        report.declare("Idempotence")
        for name in self.names:
            report.record("Idempotence", self.joins[(name, name)] == name,
                          "(%s)" % name)
        if not report.passed:
            raise LawViolationError(report)
        return report

    @classmethod
    def from_order(cls, pairs, elements=()):
        """Build a semilattice from covering pairs C{(lower, upper)}.

        @raises MalformedSpecError: If the order is not antisymmetric or some
            pair of elements has no join or there is no least element.
        """
        names = []
        for name in list(elements) + [name for pair in pairs for name in pair]:
            if name not in names:
                names.append(name)
        below = dict((name, set([name])) for name in names)
        for lower, upper in pairs:
            below[upper].add(lower)
        for middle in names:
            for name in names:
                if middle in below[name]:
                    below[name] |= below[middle]
        for a in names:
            for b in names:
                if a != b and a in below[b] and b in below[a]:
                    raise MalformedSpecError(
                        "%s and %s are below each other" % (a, b))
        bottoms = [name for name in names if all(name in below[other]
                                                 for other in names)]
        if not bottoms:
            raise MalformedSpecError("The order has no least element")
        names.remove(bottoms[0])
        names.sort(key=lambda name: (len(below[name]), name))
        names.insert(0, bottoms[0])
        joins = {}
        for a in names:
            for b in names:
                bounds = [u for u in names if a in below[u] and b in below[u]]
                least = [u for u in bounds
                         if all(u in below[other] for other in bounds)]
                if not least:
                    raise MalformedSpecError("%s and %s have no join" % (a, b))
                joins[(a, b)] = least[0]
        return cls(names, joins)

    def covering_pairs(self):
        pairs = []
        for a in self.names:
            for b in self.names:
                if a == b or self.joins[(a, b)] != b:
                    continue
                if not any(c not in (a, b) and self.joins[(a, c)] == c and
                           self.joins[(c, b)] == b for c in self.names):
                    pairs.append((a, b))
        return sorted(pairs)

    def describe(self):
        pairs = self.covering_pairs()
        if not pairs:
            return "semilattice{%s}" % ",".join(self.names)
        return "semilattice{%s}" % ",".join(
            "%s<%s" % pair for pair in pairs)

    def _enumerate(self):
        return list(self.names)

    def _zero(self):
        return self.names[0]

    def _contains(self, payload):
        return payload in self.names

    def _coerce(self, value):
        if isinstance(value, (frozenset, tuple, Fraction)):
            raise ValueError(value)
        return str(value)

    def _add(self, a, b):
        return self.joins[(a, b)]

    def _leq(self, a, b):
        return self.joins[(a, b)] == b

    def _join(self, a, b):
        return self.joins[(a, b)]

    def _top(self):
        result = self.names[0]
        for name in self.names:
            result = self.joins[(result, name)]
        return result


class TablePCM(PCM):
    """A finite PCM given by an explicit partial addition table.

    @param elements: The element labels in scan order.
    @param table: A C{dict} mapping C{(a, b)} label pairs to their sum; pairs
        that are absent are undefined.
    @param zero: The label of the unit.
    """

    kind = "table"

    def __init__(self, elements, table, zero, validate=False):
        self.labels = tuple(str(label) for label in elements)
        if len(set(self.labels)) != len(self.labels):
            raise MalformedSpecError("Duplicate table elements")
        self.table = dict(((str(a), str(b)), str(c))
                          for (a, b), c in table.items())
        self.zero_label = str(zero)
        if self.zero_label not in self.labels:
            raise MalformedSpecError("Zero %s is not an element" % (zero,))
        for label in self.labels:
            self.table.setdefault((self.zero_label, label), label)
            self.table.setdefault((label, self.zero_label), label)
        for (a, b), c in sorted(self.table.items()):
            for label in (a, b, c):
                if label not in self.labels:
                    raise MalformedSpecError(
                        "Table entry %s + %s = %s uses unknown element %s" %
                        (a, b, c, label))
        super(TablePCM, self).__init__(validate)

    def describe(self):
        entries = ["%s+%s=%s" % (a, b, self.table[(a, b)])
                   for a in self.labels for b in self.labels
                   if (a, b) in self.table]
        return "table{%s|%s|%s}" % (",".join(self.labels), self.zero_label,
                                    ",".join(entries))

    def _enumerate(self):
        return list(self.labels)

    def _zero(self):
        return self.zero_label

    def _contains(self, payload):
        return payload in self.labels

    def _coerce(self, value):
        if isinstance(value, (frozenset, tuple)):
            raise ValueError(value)
        if isinstance(value, Fraction):
            return format_rational(value)
        return str(value)

    def _add(self, a, b):
        return self.table.get((a, b))


class PcmHomomorphism(object):
    """A total map between PCMs, meant to preserve zero and sums.

    @param source: The source L{PCM}.
    @param target: The target L{PCM}.
    @param mapping: A callable from source grades to target grades.
    @param name: A short description used in reports.
    """

    def __init__(self, source, target, mapping, name="hom"):
        self.source = source
        self.target = target
        self.mapping = mapping
        self.name = name

    def __call__(self, grade):
        self.source._own(grade)
        image = self.mapping(grade)
        self.target._own(image)
        return image

    def __repr__(self):
        return "<PcmHomomorphism %s: %s -> %s>" % (
            self.name, self.source.tag, self.target.tag)


def identity_hom(pcm):
    return PcmHomomorphism(pcm, pcm, lambda grade: grade, "id")


def top_preserving_hom(target):
    """Return the map C{two -> target} sending 0 to 0 and 1 to the top.

    @raises NoTopError: If C{target} has no top element.
    """
    top = target.top()
    return PcmHomomorphism(
        TwoPCM(), target,
        lambda grade: top if grade.payload else target.zero, "top")


def table_hom(source, target, pairs, name="table"):
    """Build a homomorphism candidate from explicit C{(source, target)} pairs.

    @param pairs: A C{dict} from source grades to target grades, total on the
        finite source carrier.
    @raises MalformedSpecError: If the table is not total.
    """
    table = dict(pairs)
    for grade in source.elements():
        if grade not in table:
            raise MalformedSpecError("No image for %s in %s" % (grade, name))
    for image in table.values():
        target._own(image)
    return PcmHomomorphism(source, target, lambda grade: table[grade], name)
