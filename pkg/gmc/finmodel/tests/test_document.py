from gmc.exception import IllFormedError, InfiniteCarrierError, ParseError
from gmc.finmodel.builders import terminal_model
from gmc.finmodel.document import dump_model, load_model
from gmc.finmodel.model import FiniteGradedModel
from gmc.freecat.export import export_truncation
from gmc.pcm.model import NatPlusPCM, TwoPCM
from gmc.testing.base import GMCTestCase
from gmc.testing.fixtures import (
    half_flip_model, powerset_flip_model, two_signature, two_state_model)


TERMINAL = """\
<gmcmodel version="1" name="point">
  <pcm spec="two"/>
  <objects unit="I">
    <object name="I"/>
    <product left="I" right="I" result="I"/>
  </objects>
  <hom>
    <set grade="0" source="I" target="I"><label name="*"/></set>
    <set grade="1" source="I" target="I"><label name="*"/></set>
  </hom>
  <id><entry object="I" label="*"/></id>
  <comp>
    <entry grade="0" source="I" middle="I" target="I"
           first="*" second="*" result="%s"/>
    <entry grade="1" source="I" middle="I" target="I"
           first="*" second="*" result="*"/>
  </comp>
  <regrade>
    <entry from="0" to="1" source="I" target="I" label="*" result="*"/>
  </regrade>
  <tensor>
    <entry left-grade="0" right-grade="0" left-source="I" left-target="I"
           right-source="I" right-target="I" left="*" right="*" result="*"/>
    <entry left-grade="0" right-grade="1" left-source="I" left-target="I"
           right-source="I" right-target="I" left="*" right="*" result="*"/>
    <entry left-grade="1" right-grade="0" left-source="I" left-target="I"
           right-source="I" right-target="I" left="*" right="*" result="*"/>
  </tensor>
</gmcmodel>
"""


class LoadModelTestCase(GMCTestCase):

    def test_terminal(self):
        """A hand-written terminal model loads and equals the builder's."""
        model = load_model(TERMINAL % "*")
        self.assertEqual("point", model.name)
        self.assertEqual(terminal_model(TwoPCM(), symmetric=False), model)

    def test_comp_outside_hom_set(self):
        """A composite that is not in its hom-set is reported with its
        coordinates."""
        error = self.assertRaises(IllFormedError, load_model,
                                  TERMINAL % "nowhere")
        self.assertEqual(
            (TwoPCM().zero, "I", "I", "I", "*", "*"), error.coordinates)
        self.assertEqual("E-MODEL", error.diagnostic)

    def test_missing_entry(self):
        """Dropping a tensor entry makes the table partial."""
        text = TERMINAL % "*"
        start = text.index("<entry left-grade=\"1\"")
        end = text.index("/>", start) + 2
        error = self.assertRaises(IllFormedError, load_model,
                                  text[:start] + text[end:])
        self.assertIn("Missing tensor entry", error.message)

    def test_not_xml(self):
        """Garbage is a parse error, not a model error."""
        self.assertRaises(ParseError, load_model, "<gmcmodel")

    def test_wrong_root(self):
        self.assertRaises(ParseError, load_model, "<model version=\"1\"/>")

    def test_wrong_version(self):
        """Only version 1 documents are understood."""
        error = self.assertRaises(IllFormedError, load_model,
                                  (TERMINAL % "*").replace(
                                      "version=\"1\"", "version=\"2\""))
        self.assertIn("version 2", error.message)

    def test_unchecked(self):
        """Structural checks can be turned off for repair tools."""
        model = load_model(TERMINAL % "nowhere", check=False)
        self.assertEqual("nowhere", model.compose(
            TwoPCM().zero, "I", "I", "I", "*", "*"))


class DumpModelTestCase(GMCTestCase):

    def test_round_trip(self):
        """Dumping then loading gives back the same tables."""
        for model in [terminal_model(TwoPCM()), two_state_model(),
                      powerset_flip_model(), half_flip_model()]:
            self.assertEqual(model, load_model(dump_model(model)),
                             model.name)

    def test_canonical(self):
        """Dumping is deterministic, so a reloaded model dumps identically."""
        text = dump_model(two_state_model(symmetric=True))
        self.assertEqual(text, dump_model(load_model(text)))

    def test_identity_regrades_omitted(self):
        """Regradings along C{e <= e} are implied, never written."""
        text = dump_model(terminal_model(TwoPCM()))
        self.assertEqual(1, text.count("from=\""))

    def test_exported_truncation(self):
        """A free-category truncation survives the document format."""
        model = export_truncation(two_signature(), max_word=2, max_slices=2)
        self.assertEqual(model, load_model(dump_model(model)))

    def test_table_pcm(self):
        """Table PCMs are written element by element."""
        text = dump_model(half_flip_model())
        self.assertIn("kind=\"table\"", text)
        self.assertIn("<sum left=\"h\" result=\"1\" right=\"h\" />", text)


class FiniteGradedModelTestCase(GMCTestCase):

    def test_infinite_pcm(self):
        """Models need an enumerable grade set."""
        self.assertRaises(InfiniteCarrierError, FiniteGradedModel,
                          NatPlusPCM(), ["I"], {("I", "I"): "I"}, "I", {},
                          {}, {}, {}, {})

    def test_object_monoid_checked(self):
        """The object table must have the declared unit."""
        model = terminal_model(TwoPCM())
        error = self.assertRaises(IllFormedError, model.replace, check=True,
                                  unit="J")
        self.assertIn("Unit J", error.message)

    def test_mutate_leaves_original(self):
        model = two_state_model()
        key = (TwoPCM().zero, "A", "A", "A", "m01", "m01")
        changed = model.mutate("comp", key, "m10")
        self.assertEqual("m10", changed.comp[key])
        self.assertEqual("m01", model.comp[key])
        self.assertNotEqual(model, changed)

    def test_identity_at_grade(self):
        """Identities at a grade are regraded grade-0 identities."""
        model = two_state_model()
        one = TwoPCM().top()
        self.assertEqual("m01", model.identity("A", one))
        self.assertEqual(8, model.size())
