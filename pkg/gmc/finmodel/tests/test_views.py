from gmc.exception import NotIdempotentError
from gmc.finmodel.builders import terminal_model
from gmc.finmodel.views import monoidal_view, premonoidal_view
from gmc.pcm.model import SemilatticePCM, ThreePCM, TwoPCM
from gmc.testing.base import GMCTestCase
from gmc.testing.fixtures import (
    powerset_flip_model, three_state_model, two_flip_model, two_state_model)


class MonoidalViewTestCase(GMCTestCase):

    def test_zero(self):
        """Grade 0 is idempotent, so every model has a monoidal core."""
        for model in [two_state_model(), three_state_model(),
                      powerset_flip_model()]:
            view = monoidal_view(model, model.zero)
            self.assertEqual(["Category PASS", "Tensor-Functor PASS",
                              "Tensor-Unit PASS", "Tensor-Assoc PASS"],
                             view.check().lines())

    def test_not_idempotent(self):
        """In C{two}, C{1 + 1} is undefined."""
        error = self.assertRaises(NotIdempotentError, monoidal_view,
                                  two_state_model(), TwoPCM().top())
        self.assertEqual("E-STRUCT", error.diagnostic)

    def test_idempotent_grade(self):
        """In C{three}, C{1 + 1 = 1}."""
        one = ThreePCM().grade(1)
        view = monoidal_view(three_state_model(), one)
        self.assertTrue(view.check().passed)
        self.assertEqual(("m01",), view.homset("A", "A"))

    def test_semilattice(self):
        """Joins are idempotent, so every level of a lattice is monoidal."""
        pcm = SemilatticePCM.from_order([("bot", "low"), ("low", "high")])
        model = terminal_model(pcm)
        for grade in pcm.elements():
            self.assertTrue(monoidal_view(model, grade).check().passed)

    def test_braided(self):
        """A symmetric model gives a symmetric monoidal core."""
        view = monoidal_view(two_flip_model(), TwoPCM().zero)
        report = view.check()
        self.assertEqual("PASS", report.status("Braid-Nat"))
        self.assertTrue(report.passed)


class PremonoidalViewTestCase(GMCTestCase):

    def test_laws(self):
        """Whiskering at any grade satisfies the premonoidal laws."""
        for model in [two_state_model(), three_state_model(),
                      powerset_flip_model()]:
            for grade in model.grades:
                report = premonoidal_view(model, grade).check()
                self.assertEqual(["Category PASS", "Whisker-Functor PASS",
                                  "Whisker-Unit PASS", "Whisker-Assoc PASS"],
                                 report.lines())

    def test_center(self):
        """Setting the state to 0 does not commute with setting it to 1."""
        view = premonoidal_view(two_state_model(), TwoPCM().top())
        self.assertEqual([("I", "I", "m01"), ("A", "A", "m01")],
                         view.center())
        self.assertFalse(view.interchanges(("A", "A", "m00"),
                                           ("A", "A", "m11")))
        self.assertTrue(view.interchanges(("A", "A", "m00"),
                                          ("A", "A", "m00")))

    def test_commutative_center(self):
        """Flips commute, so every flip is central."""
        view = premonoidal_view(two_flip_model(), TwoPCM().top())
        self.assertEqual(list(view.arrows()), view.center())

    def test_braided(self):
        """Regraded braidings are central and natural for whiskering."""
        view = premonoidal_view(two_state_model(symmetric=True),
                                TwoPCM().top())
        report = view.check()
        self.assertEqual("PASS", report.status("Braid-Central"))
        self.assertTrue(report.passed)

    def test_whiskers_are_tensors(self):
        model = two_state_model()
        zero, one = TwoPCM().elements()
        view = premonoidal_view(model, one)
        self.assertEqual(
            model.tensor(zero, one, "A", "A", "I", "I", "m01", "m00"),
            view.left_whisker("A", "I", "I", "m00"))
