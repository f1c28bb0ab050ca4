from fractions import Fraction

from hypothesis import given

from gmc.exception import (
    InfiniteCarrierError, LawViolationError, MalformedSpecError, NoJoinError,
    NoTopError, NotEffectAlgebraError, OwnerMismatchError)
from gmc.pcm.model import (
    IntervalPCM, NatMaxPCM, NatPlusPCM, PowersetPCM, ProductPCM, RWPCM,
    SemilatticePCM, SingletonPCM, TablePCM, ThreePCM, TwoPCM,
    device_quantities)
from gmc.testing.base import GMCTestCase
from gmc.testing.strategies import grade_pairs, grade_triples


def subset(*names):
    return frozenset(names)


class TwoPCMTestCase(GMCTestCase):

    def setUp(self):
        super(TwoPCMTestCase, self).setUp()
        self.pcm = TwoPCM()
        self.zero = self.pcm.grade(0)
        self.one = self.pcm.grade(1)

    def test_add_one_one_undefined(self):
        """C{1 + 1} is undefined in C{two}."""
        self.assertIdentical(None, self.pcm.add(self.one, self.one))

    def test_zero_orthogonal_to_one(self):
        """0 and 1 are orthogonal and sum to 1."""
        self.assertTrue(self.pcm.is_orthogonal(self.zero, self.one))
        self.assertEqual(self.one, self.pcm.add(self.zero, self.one))

    def test_witnesses_empty_when_not_below(self):
        """No grade extends 1 to 0."""
        self.assertEqual([], self.pcm.witnesses(self.one, self.zero))

    def test_join_reflexive(self):
        """The join of 1 with itself is 1."""
        self.assertEqual(self.one, self.pcm.join(self.one, self.one))

    def test_complement(self):
        """The complement of 0 is the top element 1."""
        self.assertEqual(self.one, self.pcm.complement(self.zero))
        self.assertEqual(self.one, self.pcm.top())

    def test_grade_outside_carrier(self):
        """Building a grade that is not in the carrier fails."""
        self.assertRaises(MalformedSpecError, self.pcm.grade, 2)

    def test_owner_mismatch(self):
        """Mixing grades of different PCMs is an error."""
        other = ThreePCM().grade(1)
        error = self.assertRaises(OwnerMismatchError, self.pcm.add,
                                  self.one, other)
        self.assertEqual("OwnerMismatch", error.code)

    def test_same_descriptor_same_pcm(self):
        """Two instances built alike own each other's grades."""
        self.assertEqual(self.one, TwoPCM().grade(1))
        self.assertEqual(self.one, TwoPCM().add(TwoPCM().grade(0), self.one))

    def test_not_total(self):
        self.assertFalse(self.pcm.is_total)


class ThreePCMTestCase(GMCTestCase):

    def setUp(self):
        super(ThreePCMTestCase, self).setUp()
        self.pcm = ThreePCM()

    def test_two_two_undefined(self):
        """Only C{2 + 2} is undefined; other sums take the maximum."""
        two = self.pcm.grade(2)
        self.assertFalse(self.pcm.is_orthogonal(two, two))
        self.assertEqual(two, self.pcm.add(self.pcm.grade(1), two))
        self.assertEqual(self.pcm.grade(1),
                         self.pcm.add(self.pcm.grade(1), self.pcm.grade(1)))

    def test_witnesses(self):
        """The only grade taking 1 to 2 is 2."""
        self.assertEqual([self.pcm.grade(2)],
                         self.pcm.witnesses(self.pcm.grade(1),
                                            self.pcm.grade(2)))

    def test_top(self):
        self.assertEqual(self.pcm.grade(2), self.pcm.top())

    def test_not_effect_algebra(self):
        """1 has two complements toward 2, so there are no complements."""
        self.assertRaises(NotEffectAlgebraError, self.pcm.complement,
                          self.pcm.grade(1))


class PowersetPCMTestCase(GMCTestCase):

    def setUp(self):
        super(PowersetPCMTestCase, self).setUp()
        self.pcm = PowersetPCM(["a", "b"])

    def test_carrier_size(self):
        """The powerset of two devices has four elements."""
        self.assertEqual(4, self.pcm.size())

    def test_disjoint_union(self):
        """Disjoint sets add; overlapping sets do not."""
        a = self.pcm.grade(subset("a"))
        b = self.pcm.grade(subset("b"))
        self.assertEqual(self.pcm.grade(subset("a", "b")), self.pcm.add(a, b))
        self.assertIdentical(None, self.pcm.add(a, a))

    def test_leq_is_inclusion(self):
        self.assertTrue(self.pcm.leq(self.pcm.grade(subset("a")),
                                     self.pcm.grade(subset("a", "b"))))
        self.assertFalse(self.pcm.leq(self.pcm.grade(subset("a", "b")),
                                      self.pcm.grade(subset("a"))))

    def test_witnesses_difference(self):
        """The witness of C{{a}} below C{{a,b}} is C{{b}}."""
        self.assertEqual(
            [self.pcm.grade(subset("b"))],
            self.pcm.witnesses(self.pcm.grade(subset("a")),
                               self.pcm.grade(subset("a", "b"))))

    def test_join_union(self):
        self.assertEqual(self.pcm.grade(subset("a", "b")),
                         self.pcm.join(self.pcm.grade(subset("a")),
                                       self.pcm.grade(subset("b"))))

    def test_complement(self):
        self.assertEqual(self.pcm.grade(subset("b")),
                         self.pcm.complement(self.pcm.grade(subset("a"))))

    def test_format(self):
        """Sets format with sorted members."""
        self.assertEqual("{a,b}", str(self.pcm.grade(subset("b", "a"))))
        self.assertEqual("{}", str(self.pcm.zero))
        self.assertEqual("powerset{a,b}", self.pcm.tag)

    def test_duplicate_devices(self):
        self.assertRaises(MalformedSpecError, PowersetPCM, ["a", "a"])


class RWPCMTestCase(GMCTestCase):

    def setUp(self):
        super(RWPCMTestCase, self).setUp()
        self.pcm = RWPCM(["x"])
        self.read = self.pcm.grade((subset("x"), subset()))
        self.write = self.pcm.grade((subset(), subset("x")))

    def test_write_read_conflict(self):
        """A write and a read of the same location do not combine."""
        self.assertIdentical(None, self.pcm.add(self.write, self.read))

    def test_read_read_overlap(self):
        """Two reads of the same location combine."""
        self.assertEqual(self.read, self.pcm.add(self.read, self.read))

    def test_read_not_below_write(self):
        self.assertFalse(self.pcm.leq(self.read, self.write))

    def test_read_not_below_read_write(self):
        """Extending a read with a write of the same location is impossible."""
        both = self.pcm.grade((subset("x"), subset("x")))
        self.assertFalse(self.pcm.leq(self.read, both))
        self.assertFalse(self.pcm.search_leq(self.read, both))

    def test_direct_order_agrees_with_search(self):
        pcm = RWPCM(["x", "y"])
        for a in pcm.elements():
            for b in pcm.elements():
                self.assertEqual(pcm.search_leq(a, b), pcm.leq(a, b))

    def test_no_top(self):
        self.assertRaises(NoTopError, self.pcm.top)

    def test_no_join(self):
        """A read and a write of the same location have no upper bound."""
        self.assertRaises(NoJoinError, self.pcm.join, self.read, self.write)

    def test_format(self):
        self.assertEqual("({x},{})", str(self.read))


class IntervalPCMTestCase(GMCTestCase):

    def setUp(self):
        super(IntervalPCMTestCase, self).setUp()
        self.pcm = IntervalPCM(1)

    def grade(self, numerator, denominator=1):
        return self.pcm.grade(Fraction(numerator, denominator))

    def test_bounded_addition(self):
        """Sums within the bound are defined, larger ones are not."""
        self.assertEqual(self.grade(1),
                         self.pcm.add(self.grade(1, 2), self.grade(1, 2)))
        self.assertIdentical(None,
                             self.pcm.add(self.grade(3, 5), self.grade(3, 5)))

    def test_top_and_complement(self):
        self.assertEqual(self.grade(1), self.pcm.top())
        self.assertEqual(self.grade(3, 4),
                         self.pcm.complement(self.grade(1, 4)))

    def test_format_always_rational(self):
        self.assertEqual("1/1", str(self.grade(1)))
        self.assertEqual("interval(1/1)", self.pcm.tag)

    def test_bound_must_be_positive(self):
        self.assertRaises(MalformedSpecError, IntervalPCM, 0)

    def test_bound_must_be_exact(self):
        """Floats and strings are rejected rather than rounded."""
        for bound in (0.1, 1.5, "3/2", True):
            error = self.assertRaises(MalformedSpecError, IntervalPCM, bound)
            self.assertEqual("Invalid interval bound %r" % (bound,),
                             error.message)
        self.assertEqual("interval(3/2)", IntervalPCM(Fraction(3, 2)).tag)

    def test_elements_infinite(self):
        self.assertRaises(InfiniteCarrierError, self.pcm.elements)

    def test_witnesses_difference(self):
        witnesses = self.pcm.witnesses(self.grade(1, 2), self.grade(3, 4))
        self.assertEqual([self.grade(1, 4)], witnesses)

    @given(grade_pairs(IntervalPCM(1)))
    def test_commutative(self, pair):
        a, b = pair
        self.assertEqual(self.pcm.add(a, b), self.pcm.add(b, a))

    @given(grade_triples(IntervalPCM(1)))
    def test_associative(self, triple):
        a, b, c = triple
        ab = self.pcm.add(a, b)
        bc = self.pcm.add(b, c)
        left = None if ab is None else self.pcm.add(ab, c)
        right = None if bc is None else self.pcm.add(a, bc)
        self.assertEqual(left, right)


class NatPCMTestCase(GMCTestCase):

    def test_nat_plus_join_is_max(self):
        pcm = NatPlusPCM()
        self.assertEqual(pcm.grade(3), pcm.join(pcm.grade(2), pcm.grade(3)))

    def test_nat_plus_no_top(self):
        self.assertRaises(NoTopError, NatPlusPCM().top)

    def test_nat_max_witnesses(self):
        """Below an equal grade every smaller number is a witness."""
        pcm = NatMaxPCM()
        self.assertEqual([pcm.grade(0), pcm.grade(1), pcm.grade(2)],
                         pcm.witnesses(pcm.grade(2), pcm.grade(2)))
        self.assertEqual([pcm.grade(5)],
                         pcm.witnesses(pcm.grade(2), pcm.grade(5)))

    def test_total(self):
        self.assertTrue(NatPlusPCM().is_total)
        self.assertTrue(NatMaxPCM().is_total)
        self.assertTrue(SingletonPCM().is_total)


class ProductPCMTestCase(GMCTestCase):

    def test_componentwise(self):
        """A product sum is defined when every component sum is."""
        pcm = ProductPCM([TwoPCM(), ThreePCM()])
        self.assertEqual(6, pcm.size())
        self.assertEqual(pcm.grade((1, 2)),
                         pcm.add(pcm.grade((1, 0)), pcm.grade((0, 2))))
        self.assertIdentical(None,
                             pcm.add(pcm.grade((1, 0)), pcm.grade((1, 0))))

    def test_device_quantities(self):
        """Devices are bounded independently."""
        pcm = device_quantities({"net": 1, "cpu": 2})
        self.assertEqual(("cpu", "net"), pcm.devices)
        self.assertEqual("product(interval(2/1),interval(1/1))", pcm.tag)
        half = pcm.grade((Fraction(3, 2), Fraction(1, 2)))
        self.assertIdentical(None, pcm.add(half, half))
        quarter = pcm.grade((Fraction(1, 2), Fraction(1, 4)))
        self.assertEqual(pcm.grade((Fraction(2), Fraction(3, 4))),
                         pcm.add(half, quarter))
        self.assertEqual(pcm.grade((Fraction(2), Fraction(1))), pcm.top())

    def test_infinite_component(self):
        pcm = ProductPCM([TwoPCM(), NatPlusPCM()])
        self.assertFalse(pcm.finite)
        self.assertEqual([pcm.grade((1, 2))],
                         pcm.witnesses(pcm.grade((0, 1)), pcm.grade((1, 3))))


class SemilatticePCMTestCase(GMCTestCase):

    def test_from_order(self):
        """Covering pairs determine the join and the canonical tag."""
        pcm = SemilatticePCM.from_order([("low", "high"), ("bot", "low")])
        self.assertEqual(("bot", "low", "high"), pcm.names)
        self.assertEqual("semilattice{bot<low,low<high}", pcm.tag)
        self.assertEqual(pcm.grade("high"),
                         pcm.add(pcm.grade("low"), pcm.grade("high")))
        self.assertEqual(pcm.grade("bot"), pcm.zero)
        self.assertTrue(pcm.is_total)

    def test_diamond(self):
        pcm = SemilatticePCM.from_order(
            [("bot", "l"), ("bot", "r"), ("l", "top"), ("r", "top")])
        self.assertEqual(pcm.grade("top"),
                         pcm.join(pcm.grade("l"), pcm.grade("r")))

    def test_missing_join(self):
        """Two maximal elements have no join."""
        self.assertRaises(MalformedSpecError, SemilatticePCM.from_order,
                          [("a", "b"), ("a", "c")])

    def test_cycle(self):
        self.assertRaises(MalformedSpecError, SemilatticePCM.from_order,
                          [("a", "b"), ("b", "a")])

    def test_non_idempotent_table(self):
        """A join table that is not idempotent is rejected at construction."""
        joins = {("0", "0"): "0", ("0", "1"): "1", ("1", "0"): "1",
                 ("1", "1"): "0"}
        error = self.assertRaises(LawViolationError, SemilatticePCM,
                                  ["0", "1"], joins)
        self.assertEqual("FAIL", error.report.status("Idempotence"))


class TablePCMTestCase(GMCTestCase):

    def test_unit_entries_implicit(self):
        """Sums with zero need not be listed."""
        pcm = TablePCM(["0", "1"], {}, "0")
        self.assertEqual(pcm.grade("1"), pcm.add(pcm.zero, pcm.grade("1")))
        self.assertIdentical(None, pcm.add(pcm.grade("1"), pcm.grade("1")))

    def test_validate_reports_triple(self):
        """A broken associativity is reported with its witnessing triple."""
        table = {("a", "a"): "b", ("b", "b"): "0"}
        error = self.assertRaises(LawViolationError, TablePCM,
                                  ["0", "a", "b"], table, "0", validate=True)
        self.assertEqual("(a,a,b)",
                         error.report.check("Associativity").counterexample)
        self.assertEqual("PASS", error.report.status("Commutativity"))

    def test_unknown_label(self):
        self.assertRaises(MalformedSpecError, TablePCM, ["0"],
                          {("0", "x"): "0"}, "0")

    def test_join_by_search(self):
        pcm = TablePCM(["0", "1"], {}, "0")
        self.assertEqual(pcm.grade("1"), pcm.join(pcm.zero, pcm.grade("1")))
        self.assertEqual(pcm.grade("1"), pcm.top())
        self.assertEqual(pcm.zero, pcm.complement(pcm.grade("1")))
