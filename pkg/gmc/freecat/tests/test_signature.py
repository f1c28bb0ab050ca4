from gmc.exception import MalformedSpecError, UnknownGeneratorError
from gmc.freecat.signature import GradedSignature, Slice, format_word
from gmc.pcm.model import ThreePCM, TwoPCM
from gmc.testing.base import GMCTestCase
from gmc.testing.fixtures import powerset_signature, two_signature


class FormatWordTestCase(GMCTestCase):

    def test_empty_word_is_unit(self):
        self.assertEqual("I", format_word(()))

    def test_words_are_space_separated(self):
        self.assertEqual("A B A", format_word(("A", "B", "A")))


class GradedSignatureTestCase(GMCTestCase):

    def setUp(self):
        super(GradedSignatureTestCase, self).setUp()
        self.pcm = TwoPCM()
        self.zero, self.one = self.pcm.elements()

    def test_generator_lookup(self):
        signature = two_signature()
        generator = signature.generator("f")
        self.assertEqual(("A",), generator.dom)
        self.assertEqual(self.one, generator.grade)
        self.assertEqual("f : A -> A @ 1", str(generator))

    def test_unknown_generator(self):
        error = self.assertRaises(UnknownGeneratorError,
                                  two_signature().generator, "missing")
        self.assertEqual("UnknownGenerator", error.code)
        self.assertEqual("E-NAME", error.diagnostic)

    def test_duplicate_objects(self):
        self.assertRaises(MalformedSpecError, GradedSignature, self.pcm,
                          ["A", "A"])

    def test_duplicate_generators(self):
        """A generator name may only be declared once."""
        self.assertRaises(MalformedSpecError, GradedSignature, self.pcm,
                          ["A"], [("f", ["A"], ["A"], self.one),
                                  ("f", ["A"], ["A"], self.zero)])

    def test_generator_named_like_object(self):
        self.assertRaises(MalformedSpecError, GradedSignature, self.pcm,
                          ["A"], [("A", ["A"], ["A"], self.one)])

    def test_foreign_grade(self):
        """Generator grades must belong to the signature's PCM."""
        self.assertRaises(MalformedSpecError, GradedSignature, self.pcm,
                          ["A"], [("f", ["A"], ["A"], ThreePCM().grade(1))])

    def test_undeclared_object(self):
        error = self.assertRaises(UnknownGeneratorError, GradedSignature,
                                  self.pcm, ["A"],
                                  [("f", ["A"], ["B"], self.one)])
        self.assertIn("B", error.message)

    def test_degenerate(self):
        """Scalars, with an empty domain and codomain, are allowed."""
        signature = GradedSignature(self.pcm, ["A"],
                                    [("s", [], [], self.one)])
        self.assertTrue(signature.degenerate)
        self.assertFalse(two_signature().degenerate)

    def test_slice_boundaries(self):
        signature = powerset_signature()
        piece = Slice(("A",), "h", ("B",))
        self.assertEqual(("A", "A", "B", "B"), signature.slice_dom(piece))
        self.assertEqual(("A", "B", "A", "B"), signature.slice_cod(piece))
        self.assertEqual((1, "h"), piece.key())

    def test_equality(self):
        self.assertEqual(two_signature(), two_signature())
        self.assertNotEqual(two_signature(), powerset_signature())
