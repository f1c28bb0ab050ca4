"""Acceptance suites run by C{gmc selftest}.

Each suite returns a L{Report} whose law names are prefixed with the fixture
they were checked on. Sampled suites draw from the seeded L{Settings} and
scale their instance counts with its budget.
"""

from itertools import product

from twisted.python import log

from gmc.convolution.convolve import check_convolution_coherence
from gmc.convolution.copresheaf import constant, enumerate_copresheaves
from gmc.convolution.lax import (
    check_lax_presentation, graded_to_lax, lax_to_graded)
from gmc.convolution.promonoidal import (
    check_promonoidal_laws, promonoidal_from_pcm)
from gmc.finmodel.axioms import check_axioms, check_derived, check_symmetric
from gmc.finmodel.builders import terminal_model
from gmc.finmodel.effectful import from_effectful, to_effectful
from gmc.finmodel.functor import (
    check_couniversal, check_graded_functor, coreflect)
from gmc.freecat import morphism as free
from gmc.freecat.effectful import interchange_forms
from gmc.freecat.rewrite import equal_at, equal_oracle
from gmc.freecat.sampler import Sampler
from gmc.freecat.signature import GradedSignature
from gmc.globalcat.bounding import join_op, plus_op
from gmc.globalcat.category import (
    FreeHoms, GlobalMorphism, from_top, global_compose, global_identity,
    global_tensor, quotient_equal, to_top)
from gmc.pcm.laws import (
    check_effect_algebra, check_pcm_laws, check_separation)
from gmc.pcm.model import (
    IntervalPCM, NatMaxPCM, NatPlusPCM, PowersetPCM, ProductPCM, RWPCM,
    SingletonPCM, TablePCM, ThreePCM, TwoPCM)
from gmc.pcm.syntax import parse_descriptor
from gmc.report import Report
from gmc.settings import Settings
from gmc.testing.fixtures import (
    half_flip_model, powerset_flip_model, three_state_model, two_flip_model,
    two_state_model)


__all__ = ["SUITES", "run_suite", "run_suites"]


def _finite_fixtures():
    return [SingletonPCM(), TwoPCM(), ThreePCM(),
            PowersetPCM(["a", "b", "c", "d"]), RWPCM(["x", "y"]),
            ProductPCM([TwoPCM(), ThreePCM()]),
            parse_descriptor("semilattice{bot<low<high}")]


def _half():
    return TablePCM(["0", "h", "1"], {("h", "h"): "1"}, "0")


def _signatures():
    """Signatures with a pure, an effectful and a two-wire generator."""
    signatures = []
    for pcm, grades in [(TwoPCM(), (0, 1, 1)), (ThreePCM(), (0, 1, 2)),
                        (NatPlusPCM(), (0, 1, 2))]:
        p, f, h = [pcm.grade(payload) for payload in grades]
        signatures.append(GradedSignature(pcm, ["A", "B"], [
            ("p", ["A"], ["A"], p), ("f", ["A"], ["A"], f),
            ("h", ["A", "B"], ["B", "A"], h)]))
    pcm = PowersetPCM(["a", "b"])
    a, b = pcm.grade(frozenset(["a"])), pcm.grade(frozenset(["b"]))
    signatures.append(GradedSignature(pcm, ["A", "B"], [
        ("p", ["A"], ["A"], pcm.zero), ("f", ["A"], ["A"], a),
        ("g", ["B"], ["B"], b),
        ("h", ["A", "B"], ["B", "A"], pcm.grade(frozenset(["a", "b"])))]))
    return signatures


def _count(settings, share):
    return max(1, settings.budget // share)


def pcm_suite(settings):
    """Commutativity, unit and associativity on every PCM fixture."""
    report = Report("pcm")
    for pcm in _finite_fixtures() + [IntervalPCM(1), NatPlusPCM(),
                                     NatMaxPCM()]:
        report.extend(check_pcm_laws(pcm, settings), "%s " % (pcm.tag,))
    return report


def separation_suite(settings):
    """Powersets and effect algebras cancel; C{nat_max} does not."""
    report = Report("separation")
    for carrier in (["a"], ["a", "b"], ["a", "b", "c", "d"]):
        pcm = PowersetPCM(carrier)
        report.extend(check_separation(pcm, settings), "%s " % (pcm.tag,))
    for pcm in (TwoPCM(), IntervalPCM(1), _half()):
        report.extend(check_effect_algebra(pcm, settings),
                      "%s " % (pcm.tag,))
        report.extend(check_separation(pcm, settings), "%s " % (pcm.tag,))
    cancel = check_separation(NatMaxPCM(), settings)
    name = "nat_max Not-Cancellative"
    report.record(name, not cancel.passed)
    if not cancel.passed:
        report.fact("nat_max witness",
                    cancel.check("Cancellativity").counterexample)
    return report


def _axiom_instance(sampler, index, report, prefix):
    pcm = sampler.pcm
    signature = sampler.signature
    cex = "(#%d)" % (index,)
    f = sampler.morphism()
    b = sampler.grade_above(f.grade)
    c = sampler.grade_above(b)
    report.record(prefix + "Reg-Act",
                  equal_at(free.regrade(free.regrade(f, b), c),
                           free.regrade(f, c), c, sampler.settings), cex)
    a, b = sampler.orthogonal_grades()
    left, right = sampler.morphism(a), sampler.morphism(b)
    a2, b2 = sampler.grade_above(a), sampler.grade_above(b)
    total = pcm.add(a2, b2)
    if total is not None:
        report.record(prefix + "Reg-⊗",
                      equal_at(free.regrade(free.tensor(left, right), total),
                               free.tensor(free.regrade(left, a2),
                                           free.regrade(right, b2)),
                               total, sampler.settings), cex)
    unit = free.identity(signature, ())
    third = sampler.morphism(pcm.zero)
    both = free.tensor(left, right)
    associated = free.tensor(both, third)
    report.record(prefix + "⊗-U-A",
                  equal_at(free.tensor(left, unit), left, left.grade,
                           sampler.settings) and
                  equal_at(associated,
                           free.tensor(left, free.tensor(right, third)),
                           associated.grade, sampler.settings), cex)
    x, y = sampler.word(), sampler.word()
    report.record(prefix + "⊗-ID",
                  equal_at(free.tensor(free.identity(signature, x),
                                       free.identity(signature, y)),
                           free.identity(signature, x + y), pcm.zero,
                           sampler.settings), cex)
    f1, f2 = sampler.composable(a)
    g1, g2 = sampler.composable(b)
    ab = pcm.add(a, b)
    report.record(prefix + "Inter",
                  equal_at(free.tensor(free.compose(f1, f2),
                                       free.compose(g1, g2)),
                           free.compose(free.tensor(f1, g1),
                                        free.tensor(f2, g2)),
                           ab, sampler.settings), cex)


def freecat_suite(settings):
    """The five axioms on random well-typed instances, up to C{equal_at}."""
    report = Report("freecat")
    for signature in _signatures():
        prefix = "%s " % (signature.pcm.tag,)
        report.declare(*[prefix + name for name in
                         ("Reg-Act", "Reg-⊗", "⊗-U-A", "⊗-ID", "Inter")])
        sampler = Sampler(signature, settings, "axioms")
        for index in range(_count(settings, 10)):
            _axiom_instance(sampler, index, report, prefix)
    return report


def oracle_suite(settings):
    """C{equal_at} agrees with the breadth-first oracle."""
    report = Report("oracle")
    for signature in _signatures():
        name = "%s Oracle-Agreement" % (signature.pcm.tag,)
        report.declare(name)
        sampler = Sampler(signature, settings, "oracle")
        for index in range(_count(settings, 20)):
            first, second = sampler.pair(max_slices=6)
            grade = sampler.grade_above(first.grade)
            report.record(name,
                          equal_at(first, second, grade, settings) ==
                          equal_oracle(first, second, grade, settings),
                          "(#%d)" % (index,))
    return report


def interchange_suite(settings):
    """Grade-0 morphisms interchange with every graded morphism."""
    report = Report("interchange")
    for signature in _signatures():
        name = "%s Interchange" % (signature.pcm.tag,)
        report.declare(name)
        sampler = Sampler(signature, settings, "interchange")
        for index in range(_count(settings, 20)):
            pure = sampler.morphism(signature.pcm.zero)
            effect = sampler.morphism()
            forms = interchange_forms(pure, effect)
            report.record(name,
                          all(equal_at(forms[0], other, effect.grade,
                                       settings) for other in forms[1:]),
                          "(#%d)" % (index,))
    for model in (two_state_model(), two_flip_model(), three_state_model(),
                  powerset_flip_model()):
        derived = check_derived(model)
        report.record("%s Interchange" % (model.name,),
                      derived.status("Interchange") != "FAIL",
                      derived.check("Interchange").counterexample)
    return report


def effectful_suite(settings):
    """C{to_effectful} and C{from_effectful} are mutually inverse."""
    report = Report("effectful")
    for model in (two_state_model(), two_flip_model(),
                  two_state_model(symmetric=True)):
        prefix = "%s " % (model.name,)
        if model.braiding is not None:
            prefix = "%s symmetric " % (model.name,)
        effectful = to_effectful(model)
        report.extend(effectful.check(), prefix)
        back = from_effectful(effectful)
        report.record(prefix + "Round-Trip", back == model,
                      "(%s)" % (model.name,))
        report.record(prefix + "Back-Axioms", check_axioms(back).passed,
                      "(%s)" % (model.name,))
        if model.braiding is not None:
            report.extend(check_symmetric(back), prefix)
    return report


def coreflection_suite(settings):
    """The counit is a graded functor and factors uniquely."""
    report = Report("coreflection")
    for model in (three_state_model(), powerset_flip_model(),
                  half_flip_model()):
        prefix = "%s " % (model.name,)
        reflected, counit = coreflect(model, settings)
        report.extend(check_graded_functor(counit, settings),
                      prefix + "counit ")
        report.record(prefix + "Reflected-Axioms",
                      check_axioms(reflected).passed, "(%s)" % (
                          reflected.name,))
        report.extend(check_couniversal(model, reflected, counit, settings),
                      prefix)
    return report


def _global_triples(signature, op, settings, report, prefix):
    homs = FreeHoms(signature, settings)
    sampler = Sampler(signature, settings, "global:%s" % (op.name,))
    for index in range(_count(settings, 20)):
        f, g, h = [GlobalMorphism(homs, morphism.grade, morphism)
                   for morphism in _chain(sampler)]
        cex = "(#%d)" % (index,)
        report.record(prefix + "Associativity",
                      quotient_equal(
                          global_compose(global_compose(f, g, op, settings),
                                         h, op, settings),
                          global_compose(f, global_compose(g, h, op,
                                                           settings),
                                         op, settings)), cex)
        report.record(prefix + "Unit",
                      quotient_equal(global_compose(
                          global_identity(homs, f.dom), f, op, settings), f)
                      and quotient_equal(global_compose(
                          f, global_identity(homs, f.cod), op, settings), f),
                      cex)


def _chain(sampler):
    """Three composable morphisms at independently drawn grades."""
    first = sampler.morphism(max_slices=3)
    second = sampler.morphism(dom=first.cod, max_slices=3)
    third = sampler.morphism(dom=second.cod, max_slices=3)
    return first, second, third


def globalcat_suite(settings):
    """Associativity and unitality of heterogeneous composition."""
    report = Report("globalcat")
    signatures = dict((signature.pcm.kind, signature)
                      for signature in _signatures())
    nat_max = NatMaxPCM()
    one, two = nat_max.grade(1), nat_max.grade(2)
    signatures["nat_max"] = GradedSignature(nat_max, ["A", "B"], [
        ("p", ["A"], ["A"], nat_max.zero), ("f", ["A"], ["A"], one),
        ("h", ["A", "B"], ["B", "A"], two)])
    powerset = signatures["powerset"]
    for signature, op in [
            (powerset, join_op(powerset.pcm)),
            (signatures["nat_max"], join_op(nat_max)),
            (signatures["nat_max"], plus_op(nat_max)),
            (signatures["nat_plus"], plus_op(signatures["nat_plus"].pcm))]:
        prefix = "%s %s " % (signature.pcm.tag, op.name)
        report.declare(prefix + "Associativity", prefix + "Unit")
        _global_triples(signature, op, settings, report, prefix)

    homs = FreeHoms(powerset, settings)
    sampler = Sampler(powerset, settings, "global:top")
    join = join_op(powerset.pcm)
    name = "%s " % (powerset.pcm.tag,)
    report.declare(name + "Idempotent-Compose", name + "Top-Bijection")
    for index in range(_count(settings, 20)):
        f, g = sampler.composable()
        composite = global_compose(GlobalMorphism(homs, f.grade, f),
                                   GlobalMorphism(homs, g.grade, g), join,
                                   settings)
        cex = "(#%d)" % (index,)
        report.record(name + "Idempotent-Compose",
                      composite.grade == f.grade and
                      equal_at(composite.body, free.compose(f, g), f.grade,
                               settings), cex)
        tagged = GlobalMorphism(homs, f.grade, f)
        report.record(name + "Top-Bijection",
                      quotient_equal(from_top(homs, to_top(tagged)), tagged),
                      cex)

    for kind in ("nat_plus", "nat_max"):
        signature = signatures[kind]
        homs = FreeHoms(signature, settings)
        op = plus_op(signature.pcm)
        sampler = Sampler(signature, settings, "global:tensor")
        name = "%s Tensor-Interchange" % (signature.pcm.tag,)
        report.declare(name)
        for index in range(_count(settings, 40)):
            f1, f2 = [GlobalMorphism(homs, morphism.grade, morphism)
                      for morphism in sampler.composable()]
            g1, g2 = [GlobalMorphism(homs, morphism.grade, morphism)
                      for morphism in sampler.composable()]
            report.record(name, quotient_equal(
                global_tensor(global_compose(f1, f2, op, settings),
                              global_compose(g1, g2, op, settings)),
                global_compose(global_tensor(f1, g1),
                               global_tensor(f2, g2), op, settings)),
                "(#%d)" % (index,))
    return report


def convolution_suite(settings):
    """Promonoidal laws, convolution coherence and the lax presentation."""
    report = Report("convolution")
    for pcm in _finite_fixtures() + [_half()]:
        report.extend(check_promonoidal_laws(promonoidal_from_pcm(pcm)),
                      "%s " % (pcm.tag,))
    for pcm, size in [(TwoPCM(), 3), (ThreePCM(), 3)]:
        name = "%s Unitors" % (pcm.tag,)
        report.declare(name)
        unit = constant(pcm)
        for copresheaf in enumerate_copresheaves(pcm, size):
            coherence = check_convolution_coherence(copresheaf, unit, unit)
            report.record(name, coherence.passed, "(%s)" % (
                copresheaf.name,))
    name = "two Associator"
    report.declare(name)
    small = list(enumerate_copresheaves(TwoPCM(), 2))
    for first, second, third in product(small, repeat=3):
        coherence = check_convolution_coherence(first, second, third)
        report.record(name, coherence.passed, "(%s,%s,%s)" % (
            first.name, second.name, third.name))

    models = [two_state_model(), two_flip_model(), three_state_model(),
              half_flip_model(), terminal_model(ThreePCM())]
    for model in models:
        prefix = "%s " % (model.name,)
        presentation = graded_to_lax(model)
        report.extend(check_lax_presentation(presentation), prefix)
        report.record(prefix + "Lax-Round-Trip",
                      lax_to_graded(presentation) == model,
                      "(%s)" % (model.name,))

    flip = two_flip_model()
    zero, one = flip.grades
    presentation = graded_to_lax(flip)
    mutants = [
        ("laxator", presentation.mutate(
            "laxators", (zero, zero, one, "A", "A", "A", "A", "m10", "m01"),
            "m01"), ("1.vi", "1.viii")),
        ("unit", presentation.mutate("units", one, "m10"),
         ("1.vii", "3.iv"))]
    for label, mutant, predicted in mutants:
        checked = check_lax_presentation(mutant)
        name = "mutant-%s Predicted-Failures" % (label,)
        report.record(name, all(checked.status(item) == "FAIL"
                                for item in predicted),
                      "(%s)" % (",".join(predicted),))
    return report


SUITES = [("pcm", pcm_suite), ("separation", separation_suite),
          ("freecat", freecat_suite), ("oracle", oracle_suite),
          ("interchange", interchange_suite), ("effectful", effectful_suite),
          ("coreflection", coreflection_suite),
          ("globalcat", globalcat_suite), ("convolution", convolution_suite)]


def run_suite(name, settings=None):
    """Run the suite called C{name}.

    @raises KeyError: If there is no such suite.
    """
    settings = settings or Settings()
    suite = dict(SUITES)[name]
    log.msg("Running acceptance suite %s with %r" % (name, settings))
    report = suite(settings)
    if not report.passed:
        log.msg("Acceptance suite %s fails %s" % (
            name, ", ".join(check.name for check in report.failures())))
    return report


def run_suites(settings=None, names=None):
    """Run the named suites, all by default, and return their reports."""
    if names is None:
        names = [name for name, _ in SUITES]
    return [(name, run_suite(name, settings)) for name in names]
