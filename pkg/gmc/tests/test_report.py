from io import StringIO

from gmc.report import FAIL, PASS, SKIP, Check, Report
from gmc.testing.base import GMCTestCase


class CheckTestCase(GMCTestCase):

    def test_line(self):
        self.assertEqual("Unit PASS", Check("Unit", PASS).line())
        self.assertEqual("Unit FAIL (0)", Check("Unit", FAIL, "(0)").line())

    def test_combine(self):
        """Failures win over passes, and the earliest failure is kept."""
        early = Check("Unit", FAIL, "(0)", rank=(0,))
        late = Check("Unit", FAIL, "(1)", rank=(1,))
        self.assertEqual(early, late.combine(early))
        self.assertEqual(early, Check("Unit", PASS).combine(early))
        self.assertEqual(Check("Unit", PASS),
                         Check("Unit", SKIP).combine(Check("Unit", PASS)))


class ReportTestCase(GMCTestCase):

    def test_declared_laws_pass(self):
        report = Report("two")
        report.declare("Unit", "Associativity")
        self.assertTrue(report.passed)
        self.assertEqual(["Unit PASS", "Associativity PASS"], report.lines())

    def test_first_failure_kept(self):
        """Only the first failure recorded for a law is reported."""
        report = Report()
        report.record("Unit", True, "(0)")
        report.record("Unit", False, "(1)")
        report.record("Unit", False, "(2)")
        report.record("Unit", True)
        self.assertEqual("(1)", report.check("Unit").counterexample)
        self.assertEqual([report.check("Unit")], report.failures())
        self.assertFalse(report.passed)

    def test_skip(self):
        """Skipping never hides a failure."""
        report = Report()
        report.fail("Cancellativity", "(a)")
        report.skip("Cancellativity", "infinite")
        report.skip("Monotonicity", "infinite")
        self.assertEqual(FAIL, report.status("Cancellativity"))
        self.assertEqual("Monotonicity SKIP infinite",
                         report.check("Monotonicity").line())

    def test_facts_follow_laws(self):
        report = Report()
        report.fact("idempotent", "yes")
        report.declare("Unit")
        self.assertEqual(["Unit PASS", "idempotent INFO yes"],
                         report.lines())

    def test_extend(self):
        """Extended laws are prefixed and appended in order."""
        inner = Report("inner")
        inner.fail("Unit", "(0)")
        outer = Report("outer")
        outer.declare("Total")
        self.assertIdentical(outer, outer.extend(inner, "two "))
        self.assertEqual(["Total PASS", "two Unit FAIL (0)"], outer.lines())

    def test_merge(self):
        first, second = Report("a"), Report("b")
        first.declare("Unit")
        second.fail("Unit", "(x)")
        second.declare("Associativity")
        merged = first.merge(second)
        self.assertEqual("a", merged.title)
        self.assertEqual(["Unit FAIL (x)", "Associativity PASS"],
                         merged.lines())
        self.assertEqual(merged.lines(), second.merge(first).lines())

    def test_write(self):
        report = Report()
        report.declare("Unit")
        output = StringIO()
        report.write(output)
        self.assertEqual("Unit PASS\n", output.getvalue())
