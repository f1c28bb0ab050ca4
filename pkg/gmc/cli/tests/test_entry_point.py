import os
from io import StringIO

from gmc.cli.entry_point import exit_status, get_registry, main
from gmc.convolution.copresheaf import dump_copresheaf
from gmc.exception import ParseError, TypeMismatchError
from gmc.finmodel.document import dump_model, load_model
from gmc.settings import ENV_SEED
from gmc.testing.base import GMCTestCase
from gmc.testing.fixtures import (
    step_copresheaf, three_state_model, two_flip_model, two_state_model)


TWO = """\
pcm two
object A
gen p : A -> A @ 0
gen f : A -> A @ 1
gen g : A -> A @ 1
term pure = p
term effect = f
term t = p @ 1 ; f
term s1 = (f * id A) ; (id A * f)
term s2 = (id A * f) ; (f * id A)
term m1 = (p @ 1 * id A) ; (id A * f)
term m2 = (id A * f) ; (p @ 1 * id A)
"""

DEVICES = """\
pcm powerset{db,lock}
object A B
gen f : A -> A @ {db}
gen g : B -> B @ {lock}
term both = (f @ {db}) * (g @ {lock})
term same = (f @ {db}) * (f @ {db})
"""

RACES = """\
pcm rw{x}
object A
gen read : A -> A @ ({x},{})
gen read2 : A -> A @ ({x},{})
gen write : A -> A @ ({},{x})
term readers = read * read2
term race = read * write
"""

JOIN_TABLE = """\
<upperbound>
  <pcm spec="two"/>
  <entry left="0" right="0" result="0"/>
  <entry left="0" right="1" result="1"/>
  <entry left="1" right="0" result="1"/>
  <entry left="1" right="1" result="1"/>
</upperbound>
"""


class MainTestCase(GMCTestCase):

    def setUp(self):
        super(MainTestCase, self).setUp()
        self.registry = get_registry()

    def write(self, text, suffix=".gmc"):
        path = self.mktemp() + suffix
        with open(path, "w", encoding="utf-8") as stream:
            stream.write(text)
        return path

    def run_main(self, *arguments):
        """Run C{gmc ARGUMENTS} and return the exit status and output."""
        output = StringIO()
        status = main(["gmc"] + list(arguments), output, self.registry)
        return status, output.getvalue()


class CheckTestCase(MainTestCase):

    def test_devices(self):
        """Terms over disjoint devices check at the union of the grades."""
        path = self.write(DEVICES)
        status, output = self.run_main("check", path, "both")
        self.assertEqual(0, status)
        self.assertEqual("both : A B -> A B @ {db,lock}\n", output)

    def test_non_interference(self):
        """Two uses of the same device interfere; checking goes on after
        the diagnostic and the run exits 1."""
        path = self.write(DEVICES)
        status, output = self.run_main("check", path)
        self.assertEqual(1, status)
        self.assertEqual(
            "both : A B -> A B @ {db,lock}\n"
            "%s:6:14: error E-ORTHO: Grades {db} and {db} are not "
            "orthogonal\n" % (path,), output)

    def test_races(self):
        """Concurrent reads are fine, a read racing a write is not."""
        path = self.write(RACES)
        status, output = self.run_main("check", path)
        self.assertEqual(1, status)
        self.assertEqual(
            "readers : A A -> A A @ ({x},{})\n"
            "%s:7:13: error E-ORTHO: Grades ({x},{}) and ({},{x}) are not "
            "orthogonal\n" % (path,), output)

    def test_non_orthogonal_two(self):
        path = self.write(TWO + "term bad = (f @ 1) * (g @ 1)\n")
        status, output = self.run_main("check", path, "bad")
        self.assertEqual(1, status)
        self.assertEqual(
            "%s:13:13: error E-ORTHO: Grades 1 and 1 are not orthogonal\n" % (
                path,), output)

    def test_grade_mismatch(self):
        """Mixing grades in C{;} suggests heterogeneous composition."""
        path = self.write(TWO + "term bad = f ; p\n")
        status, output = self.run_main("check", path, "bad")
        self.assertEqual(1, status)
        self.assertEqual(
            "%s:13:12: error E-GRADE: Cannot compose grade 1 with grade 0; "
            "use gcompose for heterogeneous composition\n" % (path,), output)

    def test_unknown_term(self):
        path = self.write(TWO)
        status, output = self.run_main("check", path, "nope")
        self.assertEqual(1, status)
        self.assertEqual("%s: error E-NAME: Unknown term nope\n" % (path,),
                         output)

    def test_parse_error(self):
        """Syntax errors exit 2 with the position of the first one."""
        path = self.write(TWO + "term bad = f ; ; f\n")
        status, output = self.run_main("check", path)
        self.assertEqual(2, status)
        self.assertEqual(
            "%s:13:16: error E-PARSE: Unexpected ';'\n" % (path,), output)

    def test_missing_file(self):
        path = self.mktemp()
        status, output = self.run_main("check", path)
        self.assertEqual(2, status)
        self.assertTrue(output.startswith(
            "%s: error E-IO: Cannot read %s" % (path, path)))


class NormalizeTestCase(MainTestCase):

    def test_normalize(self):
        """Selected terms are replaced by their canonical slices."""
        path = self.write(TWO)
        status, output = self.run_main("normalize", path, "m2", "effect")
        self.assertEqual(0, status)
        self.assertEqual(
            "pcm two\n"
            "object A\n"
            "gen p : A -> A @ 0\n"
            "gen f : A -> A @ 1\n"
            "gen g : A -> A @ 1\n"
            "term pure = p\n"
            "term effect = f @ 1\n"
            "term t = p @ 1 ; f\n"
            "term s1 = f * id A ; id A * f\n"
            "term s2 = id A * f ; f * id A\n"
            "term m1 = p @ 1 * id A ; id A * f\n"
            "term m2 = p @ 1 * id A ; id A * f @ 1\n", output)

    def test_idempotent(self):
        """Normalizing the output of C{normalize} changes nothing."""
        status, first = self.run_main("normalize", self.write(TWO))
        self.assertEqual(0, status)
        status, second = self.run_main("normalize", self.write(first))
        self.assertEqual(0, status)
        self.assertEqual(first, second)

    def test_slices(self):
        path = self.write(TWO)
        status, output = self.run_main("normalize", path, "m2", "--slices")
        self.assertEqual(0, status)
        self.assertEqual(
            "term m2 : A A -> A A @ 1\n"
            "  I | p@0 | A\n"
            "  A | f@1 | I\n", output)


class EqualTestCase(MainTestCase):

    def test_staircases_differ(self):
        """The two staircases of an effect are not equal at grade 1."""
        path = self.write(TWO)
        status, output = self.run_main("equal", path, "s1", "s2",
                                       "--grade", "1")
        self.assertEqual(1, status)
        self.assertEqual("NOT EQUAL at grade 1\n", output)

    def test_pure_slides(self):
        """A pure generator slides past an effect."""
        path = self.write(TWO)
        status, output = self.run_main("equal", path, "m1", "m2",
                                       "--grade", "1", "--oracle")
        self.assertEqual(0, status)
        self.assertEqual("EQUAL at grade 1\nORACLE AGREES\n", output)

    def test_oracle_on_unequal(self):
        path = self.write(TWO)
        status, output = self.run_main("equal", path, "s1", "s2",
                                       "--oracle", "--grade", "1")
        self.assertEqual(1, status)
        self.assertEqual("NOT EQUAL at grade 1\nORACLE AGREES\n", output)

    def test_grade_below(self):
        """Comparing below the grade of a term is a grade error."""
        path = self.write(TWO)
        status, output = self.run_main("equal", path, "m1", "m2",
                                       "--grade", "0")
        self.assertEqual(1, status)
        self.assertIn("error E-GRADE: Cannot regrade from 1 to 0", output)

    def test_bad_grade_literal(self):
        path = self.write(TWO)
        status, output = self.run_main("equal", path, "m1", "m2",
                                       "--grade", "{a}")
        self.assertEqual(2, status)
        self.assertIn("error E-PCM: Invalid grade literal {a} for two",
                      output)

    def test_missing_grade(self):
        status, output = self.run_main("equal", self.write(TWO), "m1", "m2")
        self.assertEqual(2, status)
        self.assertEqual(
            "gmc: error E-USAGE: The command needs the parameter grade "
            "(text)\n", output)


class GradesTestCase(MainTestCase):

    def test_grades(self):
        path = self.write(TWO)
        self.assertEqual((0, "0\n1\n"), self.run_main("grades", path, "pure"))
        self.assertEqual((0, "1\n"), self.run_main("grades", path, "effect"))


class GComposeTestCase(MainTestCase):

    def test_join(self):
        """A pure and an effectful term compose at the join of grades."""
        path = self.write(TWO)
        status, output = self.run_main("gcompose", path, "pure", "effect",
                                       "--op", "join")
        self.assertEqual(0, status)
        self.assertEqual("pure ;join effect : A -> A @ 1\n"
                         "  p @ 1 ; f @ 1\n", output)

    def test_plus_on_naturals(self):
        path = self.write("pcm nat_plus\nobject A\ngen f : A -> A @ 1\n"
                          "term a = f\nterm b = f ; f\n")
        status, output = self.run_main("gcompose", path, "a", "b",
                                       "--op", "plus")
        self.assertEqual(0, status)
        self.assertEqual("a ;plus b : A -> A @ 2\n"
                         "  f @ 2 ; f @ 2 ; f @ 2\n", output)

    def test_plus_on_partial(self):
        """Addition is not upper-bounding on a partial PCM."""
        path = self.write(TWO)
        status, output = self.run_main("gcompose", path, "pure", "effect",
                                       "--op", "plus")
        self.assertEqual(1, status)
        self.assertEqual(
            "%s: error E-LAW: plus needs a total PCM, two is partial\n" % (
                path,), output)

    def test_table(self):
        """C{table:PATH} loads the operation from an upperbound document."""
        path = self.write(TWO)
        table = self.write(JOIN_TABLE, ".xml")
        status, output = self.run_main("gcompose", path, "effect", "pure",
                                       "--op", "table:" + table)
        self.assertEqual(0, status)
        self.assertEqual("effect ;table pure : A -> A @ 1\n"
                         "  f @ 1 ; p @ 1\n", output)

    def test_table_over_other_pcm(self):
        path = self.write(DEVICES)
        table = self.write(JOIN_TABLE, ".xml")
        status, output = self.run_main("gcompose", path, "both", "both",
                                       "--op", "table:" + table)
        self.assertEqual(1, status)
        self.assertIn("error E-GRADE: PCM mismatch: two versus "
                      "powerset{db,lock}", output)

    def test_bad_op(self):
        status, output = self.run_main("gcompose", self.write(TWO), "pure",
                                       "effect", "--op", "meet")
        self.assertEqual(2, status)
        self.assertIn("Invalid choice value meet for op", output)


class LawcheckTestCase(MainTestCase):

    def test_three(self):
        """The three-element PCM passes all five laws."""
        status, output = self.run_main("lawcheck-pcm", "--kind", "three")
        self.assertEqual(0, status)
        self.assertEqual("Commutativity PASS\n"
                         "Unit PASS\n"
                         "Associativity PASS\n"
                         "Monotonicity PASS\n"
                         "Extension-Order PASS\n", output)

    def test_sampled_is_deterministic(self):
        """Sampled checks print the same bytes for the same seed."""
        first = self.run_main("lawcheck-pcm", "--kind", "nat_plus",
                              "--seed", "7", "--budget", "50")
        second = self.run_main("lawcheck-pcm", "--kind", "nat_plus",
                               "--budget", "50", "--seed", "7")
        self.assertEqual(first, second)
        self.assertEqual(0, first[0])

    def test_table_document(self):
        path = self.write(
            "<pcm kind=\"table\" zero=\"0\">\n"
            "  <element name=\"0\"/><element name=\"h\"/>"
            "<element name=\"1\"/>\n"
            "  <sum left=\"h\" right=\"h\" result=\"1\"/>\n"
            "</pcm>\n", ".xml")
        status, output = self.run_main("lawcheck-pcm", "--file", path)
        self.assertEqual(0, status)
        self.assertEqual(5, len(output.splitlines()))

    def test_kind_or_file(self):
        """Exactly one of C{--kind} and C{--file} is required."""
        status, output = self.run_main("lawcheck-pcm")
        self.assertEqual(2, status)
        self.assertEqual("gmc: error E-USAGE: Exactly one of --kind and "
                         "--file is needed\n", output)

    def test_malformed_descriptor(self):
        status, output = self.run_main("lawcheck-pcm", "--kind",
                                       "powerset{a,a}")
        self.assertEqual(2, status)
        self.assertIn("error E-PCM", output)

    def test_model(self):
        path = self.write(dump_model(two_flip_model()), ".xml")
        status, output = self.run_main("lawcheck-model", path, "--symmetric")
        self.assertEqual(0, status)
        self.assertEqual(
            ["Category PASS", "Reg-Functor PASS", "Reg-Act PASS",
             "Reg-⊗ PASS", "⊗-U-A PASS", "⊗-ID PASS", "Inter PASS",
             "Braid-Inv PASS", "Braid-Hex PASS", "Braid-Unit PASS",
             "Braid-Nat PASS"], output.splitlines())

    def test_broken_model(self):
        """A broken composition table fails with its first witness."""
        one = two_state_model().grades[1]
        broken = two_state_model().mutate(
            "comp", (one, "A", "A", "A", "m00", "m11"), "m00")
        path = self.write(dump_model(broken), ".xml")
        status, output = self.run_main("lawcheck-model", path)
        self.assertEqual(1, status)
        self.assertIn(" FAIL (", output)

    def test_model_without_braiding(self):
        path = self.write(dump_model(two_state_model()), ".xml")
        status, output = self.run_main("lawcheck-model", path, "--symmetric")
        self.assertEqual(1, status)
        self.assertIn("error E-STRUCT", output)


class ModelCommandsTestCase(MainTestCase):

    def test_coreflect(self):
        """The counit checks out and the reflected model is printed."""
        path = self.write(dump_model(three_state_model()), ".xml")
        status, output = self.run_main("coreflect", path)
        self.assertEqual(0, status)
        lines = output.splitlines()
        self.assertEqual(["counit PCM-Hom PASS", "counit Object-Monoid PASS",
                          "counit Hom-Typing PASS",
                          "counit Functoriality PASS", "counit Tensor PASS",
                          "counit Regrade PASS"], lines[:6])
        reflected = load_model("\n".join(lines[6:]))
        self.assertEqual("two", reflected.pcm.tag)

    def test_roundtrip_lax(self):
        path = self.write(dump_model(two_flip_model()), ".xml")
        status, output = self.run_main("roundtrip", path)
        self.assertEqual(0, status)
        lines = output.splitlines()
        self.assertEqual(14, len(lines))
        self.assertEqual("1.iii PASS", lines[0])
        self.assertEqual("Round-Trip PASS", lines[-1])

    def test_roundtrip_effectful(self):
        path = self.write(dump_model(two_state_model()), ".xml")
        status, output = self.run_main("roundtrip", path, "--via",
                                       "effectful")
        self.assertEqual(0, status)
        self.assertEqual("Round-Trip PASS", output.splitlines()[-1])

    def test_roundtrip_effectful_needs_two(self):
        path = self.write(dump_model(three_state_model()), ".xml")
        status, output = self.run_main("roundtrip", path, "--via",
                                       "effectful")
        self.assertEqual(1, status)
        self.assertIn("error E-GRADE: PCM mismatch: three versus two", output)

    def test_convolve(self):
        """The step copresheaf convolved with itself has one class per
        grade."""
        path = self.write(dump_copresheaf(step_copresheaf()), ".xml")
        status, output = self.run_main("convolve", path, path,
                                       "--coherence", path)
        self.assertEqual(0, status)
        lines = output.splitlines()
        self.assertEqual(
            ["0 1", "  (0,0,x,x) <- (0,0,x,x)", "1 1",
             "  (0,0,x,x) <- (0,0,x,x) (0,1,x,x') (1,0,x',x)"], lines[:4])
        self.assertTrue(all(line.endswith(" PASS") for line in lines[4:]))

    def test_malformed_model(self):
        path = self.write("<gmcmodel version=\"1\">", ".xml")
        status, output = self.run_main("lawcheck-model", path)
        self.assertEqual(2, status)
        self.assertIn("error E-PARSE: Malformed document", output)


class DispatchTestCase(MainTestCase):

    def test_usage(self):
        """Without a command the usage is printed and the exit status is 2."""
        status, output = self.run_main()
        self.assertEqual(2, status)
        self.assertTrue(output.startswith(
            "Usage: gmc [--verbose] COMMAND [OPTIONS] ARGUMENTS\n"))
        for name in ("check", "normalize", "equal", "grades", "gcompose",
                     "lawcheck-pcm", "lawcheck-model", "coreflect",
                     "convolve", "roundtrip", "selftest"):
            self.assertIn("  %s " % (name,), output)
        self.assertIn("seed 0", output)
        self.assertIn("10000", output)

    def test_help(self):
        status, output = self.run_main("--help")
        self.assertEqual(0, status)
        self.assertIn("Commands:", output)

    def test_command_help(self):
        """C{COMMAND --help} shows the usage line built from the schema."""
        status, output = self.run_main("equal", "--help")
        self.assertEqual(0, status)
        self.assertTrue(output.startswith(
            "Usage: gmc equal FILE FIRST SECOND --grade TEXT [--oracle]\n"))

    def test_unknown_command(self):
        status, output = self.run_main("frobnicate")
        self.assertEqual(2, status)
        self.assertEqual(
            "gmc: error E-USAGE: The command frobnicate is not valid\n",
            output)

    def test_bad_seed_environment(self):
        os.environ[ENV_SEED] = "many"
        status, output = self.run_main("lawcheck-pcm", "--kind", "two")
        self.assertEqual(2, status)
        self.assertIn("error E-USAGE: GMC_SEED must be an integer", output)

    def test_program_name(self):
        """Diagnostics without a file name use the program name."""
        output = StringIO()
        status = main(["/usr/bin/gmc-dev", "nope"], output, self.registry)
        self.assertEqual(2, status)
        self.assertTrue(output.getvalue().startswith("gmc-dev: error"))

    def test_exit_status(self):
        """Usage, file and parse problems exit 2, everything else 1."""
        self.assertEqual(2, exit_status(ParseError("x")))
        self.assertEqual(1, exit_status(TypeMismatchError("A", "B")))

    def test_selftest_suite(self):
        status, output = self.run_main("selftest", "--suite", "pcm",
                                       "--budget", "50")
        self.assertEqual(0, status)
        lines = output.splitlines()
        self.assertEqual("pcm two Commutativity PASS", [
            line for line in lines if line.startswith("pcm two ")][0])
        self.assertEqual("selftest PASS", lines[-1])

    def test_selftest(self):
        """Every suite passes on a small budget."""
        status, output = self.run_main("selftest", "--budget", "40")
        self.assertEqual(0, status, output)
        lines = output.splitlines()
        self.assertEqual("selftest PASS", lines[-1])
        for name in ("pcm", "coreflection", "globalcat", "convolution"):
            self.assertTrue([line for line in lines
                             if line.startswith(name + " ")], name)
        self.assertEqual([], [line for line in lines if " FAIL" in line])

    test_selftest.timeout = 900
