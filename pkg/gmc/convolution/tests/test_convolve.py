from gmc.convolution.convolve import (
    COHERENCE_LAWS, check_convolution_coherence, convolve)
from gmc.convolution.copresheaf import (
    Copresheaf, constant, enumerate_copresheaves, representable)
from gmc.exception import PcmMismatchError
from gmc.pcm.model import PowersetPCM, ThreePCM, TwoPCM
from gmc.testing.base import GMCTestCase
from gmc.testing.fixtures import step_copresheaf


PASSING = ["%s PASS" % (name,) for name in COHERENCE_LAWS]


class ConvolveTestCase(GMCTestCase):

    def test_step_collapses(self):
        """All three pairs below 1 are related by regrading."""
        step = step_copresheaf()
        zero, one = step.grades
        square = convolve(step, step)
        self.assertEqual(((zero, zero, "x", "x"),), square.at(zero))
        self.assertEqual(((zero, zero, "x", "x"),), square.at(one))
        self.assertEqual(3, len(square.members[one][(zero, zero, "x", "x")]))
        self.assertEqual((zero, zero, "x", "x"),
                         square.class_of(one, one, zero, "x'", "x"))
        self.assertEqual("F*F", square.name)

    def test_regrade_maps(self):
        step = step_copresheaf()
        zero, one = step.grades
        square = convolve(step, step)
        rep = (zero, zero, "x", "x")
        self.assertEqual(rep, square.regrade(zero, one, rep))

    def test_unit_sizes(self):
        """C{(J * G)(c)} has as many classes as C{G(c)} has elements."""
        for pcm, size in [(TwoPCM(), 2), (ThreePCM(), 1)]:
            unit = constant(pcm)
            for copresheaf in enumerate_copresheaves(pcm, size):
                result = convolve(unit, copresheaf)
                for c in pcm.elements():
                    self.assertEqual(len(copresheaf.at(c)),
                                     len(result.at(c)), copresheaf)

    def test_bottom_grade(self):
        """Only C{0 + 0} lies below 0, so nothing is identified there."""
        pcm = TwoPCM()
        zero, one = pcm.elements()
        first = Copresheaf(pcm, {zero: ["a", "b"], one: ["c"]},
                           {(zero, one): {"a": "c", "b": "c"}})
        second = Copresheaf(pcm, {zero: ["x", "y", "z"], one: ["w"]},
                            {(zero, one): {"x": "w", "y": "w", "z": "w"}})
        self.assertEqual(6, len(convolve(first, second).at(zero)))

    def test_representables(self):
        """Convolving representables over a powerset adds their grades."""
        pcm = PowersetPCM(["a", "b"])
        empty, a, b, both = [pcm.grade(frozenset(items))
                             for items in ([], ["a"], ["b"], ["a", "b"])]
        result = convolve(representable(pcm, a), representable(pcm, b))
        self.assertEqual([0, 0, 0, 1],
                         [len(result.at(e)) for e in (empty, a, b, both)])
        clash = convolve(representable(pcm, a), representable(pcm, a))
        self.assertEqual(0, clash.size())

    def test_pcm_mismatch(self):
        self.assertRaises(PcmMismatchError, convolve, constant(TwoPCM()),
                          constant(ThreePCM()))


class CheckConvolutionCoherenceTestCase(GMCTestCase):

    def test_units(self):
        unit = constant(TwoPCM())
        self.assertEqual(PASSING,
                         check_convolution_coherence(unit, unit,
                                                     unit).lines())

    def test_step_triple(self):
        step = step_copresheaf()
        self.assertEqual(PASSING,
                         check_convolution_coherence(step, step,
                                                     step).lines())

    def test_unitors_exhaustive(self):
        """Unitors are natural bijections for every small copresheaf."""
        for pcm, size in [(TwoPCM(), 3), (ThreePCM(), 2)]:
            unit = constant(pcm)
            for copresheaf in enumerate_copresheaves(pcm, size):
                report = check_convolution_coherence(copresheaf, unit, unit)
                self.assertTrue(report.passed, copresheaf)

    def test_associator_pairs(self):
        """The associator is a natural bijection on mixed triples."""
        pcm = TwoPCM()
        step = step_copresheaf()
        for first in enumerate_copresheaves(pcm, 2):
            for second in enumerate_copresheaves(pcm, 1):
                report = check_convolution_coherence(first, second, step)
                self.assertEqual(PASSING, report.lines(),
                                 (first, second))

    def test_powerset(self):
        pcm = PowersetPCM(["a", "b"])
        a, b = pcm.grade(frozenset(["a"])), pcm.grade(frozenset(["b"]))
        report = check_convolution_coherence(
            representable(pcm, a), constant(pcm), representable(pcm, b))
        self.assertEqual(PASSING, report.lines())
