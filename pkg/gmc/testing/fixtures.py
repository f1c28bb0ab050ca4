"""Small PCMs, signatures and models shared by the test suites."""

from gmc.convolution.copresheaf import Copresheaf
from gmc.finmodel.builders import (
    FLIP, IDENTITY, SET0, SET1, effect_monoid_model)
from gmc.freecat.signature import GradedSignature
from gmc.pcm.model import PowersetPCM, TablePCM, ThreePCM, TwoPCM


def half_pcm():
    """Three elements C{0, h, 1} with C{h + h = 1}."""
    return TablePCM(["0", "h", "1"], {("h", "h"): "1"}, "0")


def _by_payload(pcm, monoids):
    return dict((grade, monoids[grade.payload]) for grade in pcm.elements())


def two_state_model(symmetric=False):
    """Over C{two}: only the identity is pure, effects may set the state."""
    pcm = TwoPCM()
    return effect_monoid_model(
        pcm, _by_payload(pcm, {0: [IDENTITY], 1: [IDENTITY, SET0, SET1]}),
        symmetric=symmetric, name="two-state")


def two_flip_model(symmetric=True):
    """Over C{two}: the flip is pure, so both grades hold {id, flip}."""
    pcm = TwoPCM()
    return effect_monoid_model(
        pcm, _by_payload(pcm, {0: [IDENTITY, FLIP], 1: [IDENTITY, FLIP]}),
        symmetric=symmetric, name="two-flip")


def three_state_model(symmetric=False):
    """Over C{three}: setting the state needs grade 2."""
    pcm = ThreePCM()
    return effect_monoid_model(
        pcm, _by_payload(pcm, {0: [IDENTITY], 1: [IDENTITY],
                               2: [IDENTITY, SET0, SET1]}),
        symmetric=symmetric, name="three-state")


def powerset_flip_model():
    """Over C{powerset{a,b}}: any nonempty grade may flip."""
    pcm = PowersetPCM(["a", "b"])
    monoids = dict((grade, [IDENTITY] if not grade.payload
                    else [IDENTITY, FLIP]) for grade in pcm.elements())
    return effect_monoid_model(pcm, monoids, name="powerset-flip")


def half_flip_model():
    """Over L{half_pcm}: flipping needs at least C{h}."""
    pcm = half_pcm()
    return effect_monoid_model(
        pcm, _by_payload(pcm, {"0": [IDENTITY], "h": [IDENTITY, FLIP],
                               "1": [IDENTITY, FLIP]}),
        name="half-flip")


def two_signature():
    """One object C{A}, a pure C{p} and an effectful C{f} on it."""
    pcm = TwoPCM()
    zero, one = pcm.elements()
    return GradedSignature(pcm, ["A"], [("p", ["A"], ["A"], zero),
                                        ("f", ["A"], ["A"], one)])


def powerset_signature():
    """Two devices: C{f} uses C{a}, C{g} uses C{b}, C{h} uses both."""
    pcm = PowersetPCM(["a", "b"])
    return GradedSignature(pcm, ["A", "B"], [
        ("f", ["A"], ["A"], pcm.grade(frozenset(["a"]))),
        ("g", ["B"], ["B"], pcm.grade(frozenset(["b"]))),
        ("h", ["A", "B"], ["B", "A"], pcm.grade(frozenset(["a", "b"]))),
    ])


def step_copresheaf():
    """Over C{two}: one element at each grade, C{x} regraded to C{x'}."""
    pcm = TwoPCM()
    zero, one = pcm.elements()
    return Copresheaf(pcm, {zero: ["x"], one: ["x'"]},
                      {(zero, one): {"x": "x'"}}, "F")
