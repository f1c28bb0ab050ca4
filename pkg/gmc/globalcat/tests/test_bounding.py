from gmc.exception import IllFormedError, OpInvalidError, ParseError
from gmc.globalcat.bounding import (
    check_upper_bounding, join_op, load_upper_bound, plus_op, table_op)
from gmc.pcm.model import NatMaxPCM, NatPlusPCM, PowersetPCM, TwoPCM
from gmc.settings import Settings
from gmc.testing.base import GMCTestCase


TWO_JOIN = """\
<upperbound>
  <pcm spec="two"/>
  <entry left="1" right="1" result="1"/>
</upperbound>
"""


class CheckUpperBoundingTestCase(GMCTestCase):

    def test_addition(self):
        """Addition on the naturals bounds its arguments but is not a join."""
        pcm = NatPlusPCM()
        op = plus_op(pcm)
        report = check_upper_bounding(pcm, op, Settings(budget=500))
        self.assertEqual(["Associativity PASS", "Unit PASS",
                          "Upper-Bound-Left PASS", "Upper-Bound-Right PASS",
                          "idempotent INFO no"], report.lines())

    def test_addition_over_max(self):
        """Both maximum and addition are valid on C{nat_max}."""
        pcm = NatMaxPCM()
        settings = Settings(budget=500)
        self.assertTrue(check_upper_bounding(pcm, plus_op(pcm),
                                             settings).passed)
        report = check_upper_bounding(pcm, join_op(pcm), settings)
        self.assertEqual([("idempotent", "yes")], report.facts())

    def test_union(self):
        pcm = PowersetPCM(["a", "b"])
        op = join_op(pcm)
        self.assertTrue(op.validate().passed)
        self.assertTrue(op.idempotent)

    def test_not_an_upper_bound(self):
        """Sending C{1, 1} to 0 goes down the extension order."""
        pcm = TwoPCM()
        zero, one = pcm.elements()
        op = table_op(pcm, {(one, one): zero})
        report = check_upper_bounding(pcm, op)
        self.assertEqual("Upper-Bound-Left FAIL (1,1)",
                         report.check("Upper-Bound-Left").line())
        self.assertEqual("PASS", report.status("Unit"))
        error = self.assertRaises(OpInvalidError, op.validate)
        self.assertIn("Upper-Bound-Left FAIL (1,1)", error.message)

    def test_missing_entry(self):
        """A table without C{1, 1} is undefined there."""
        pcm = TwoPCM()
        op = table_op(pcm, {})
        self.assertEqual("FAIL",
                         check_upper_bounding(pcm, op).status(
                             "Upper-Bound-Left"))
        self.assertRaises(OpInvalidError, op, pcm.top(), pcm.top())

    def test_plus_needs_total(self):
        self.assertRaises(OpInvalidError, plus_op, TwoPCM())

    def test_plus_on_total_pcm(self):
        """On a total PCM, plus is the PCM's own sum."""
        pcm = PowersetPCM([])
        self.assertEqual(pcm.zero, plus_op(pcm)(pcm.zero, pcm.zero))


class LoadUpperBoundTestCase(GMCTestCase):

    def test_load(self):
        op = load_upper_bound(TWO_JOIN)
        one = TwoPCM().top()
        self.assertEqual(one, op(one, one))
        self.assertTrue(op.validate().passed)

    def test_repeated_entry(self):
        document = TWO_JOIN.replace(
            "</upperbound>",
            "  <entry left=\"1\" right=\"1\" result=\"0\"/>\n</upperbound>")
        self.assertRaises(IllFormedError, load_upper_bound, document)

    def test_missing_result(self):
        error = self.assertRaises(IllFormedError, load_upper_bound,
                                  TWO_JOIN.replace(' result="1"', ""))
        self.assertIn("result", error.message)

    def test_wrong_root(self):
        self.assertRaises(ParseError, load_upper_bound,
                          "<pcm spec=\"two\"/>")
