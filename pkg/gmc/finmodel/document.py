"""Reading and writing C{gmcmodel} documents, version 1.

A document looks like::

  <gmcmodel version="1" name="toy">
    <pcm spec="two"/>
    <objects unit="I">
      <object name="I"/>
      <product left="I" right="I" result="I"/>
    </objects>
    <hom>
      <set grade="0" source="I" target="I"><label name="id"/></set>
    </hom>
    <id><entry object="I" label="id"/></id>
    <comp><entry grade="0" source="I" middle="I" target="I"
                 first="id" second="id" result="id"/></comp>
    <regrade><entry from="0" to="1" source="I" target="I"
                    label="id" result="id"/></regrade>
    <tensor><entry left-grade="0" right-grade="1" left-source="I"
                   left-target="I" right-source="I" right-target="I"
                   left="id" right="id" result="id"/></tensor>
    <braiding><entry left="I" right="I" label="id"/></braiding>
  </gmcmodel>

Regradings along C{e <= e} may be omitted and are never written.
"""

from twisted.python import log

from gmc.exception import IllFormedError
from gmc.finmodel.model import FiniteGradedModel
from gmc.pcm.document import attribute, dump_pcm, load_pcm
from gmc.pcm.syntax import parse_grade
from gmc.util import dump_tree, element, read_document, sub_element


__all__ = ["load_model", "dump_model", "VERSION"]


VERSION = "1"


def _entries(root, section):
    node = root.find(section)
    if node is None:
        return []
    return node.findall("entry")


class _Reader(object):

    def __init__(self, root):
        self.root = root
        self.pcm = load_pcm(root.find("pcm"))
        self._grades = {}

    def grade(self, node, name):
        text = attribute(node, name)
        if text not in self._grades:
            self._grades[text] = parse_grade(self.pcm, text)
        return self._grades[text]

    def values(self, node, *names):
        return tuple(attribute(node, name) for name in names)


def load_model(document, check=True):
    """Parse a C{gmcmodel} document into a L{FiniteGradedModel}.

    @raises ParseError: If the text is not a C{gmcmodel} document.
    @raises IllFormedError: If a table is incomplete or ill typed, with the
        coordinates of the first problem.
    """
    root = read_document(document, "gmcmodel")
    version = root.get("version")
    if version != VERSION:
        raise IllFormedError("Unsupported gmcmodel version %s" % (version,))
    reader = _Reader(root)
    objects_node = root.find("objects")
    if objects_node is None:
        raise IllFormedError("Missing <objects> section")
    objects = [attribute(node, "name")
               for node in objects_node.findall("object")]
    products = {}
    for node in objects_node.findall("product"):
        products[reader.values(node, "left", "right")] = attribute(
            node, "result")
    unit = attribute(objects_node, "unit")
    hom = {}
    hom_node = root.find("hom")
    for node in ([] if hom_node is None else hom_node.findall("set")):
        key = (reader.grade(node, "grade"),) + reader.values(
            node, "source", "target")
        hom[key] = tuple(attribute(label, "name", *key)
                         for label in node.findall("label"))
    ids = dict(reader.values(node, "object", "label")
               for node in _entries(root, "id"))
    comp = {}
    for node in _entries(root, "comp"):
        key = (reader.grade(node, "grade"),) + reader.values(
            node, "source", "middle", "target", "first", "second")
        comp[key] = attribute(node, "result", *key)
    regrades = {}
    for node in _entries(root, "regrade"):
        key = (reader.grade(node, "from"), reader.grade(node, "to")) + \
            reader.values(node, "source", "target", "label")
        regrades[key] = attribute(node, "result", *key)
    tensors = {}
    for node in _entries(root, "tensor"):
        key = (reader.grade(node, "left-grade"),
               reader.grade(node, "right-grade")) + reader.values(
                   node, "left-source", "left-target", "right-source",
                   "right-target", "left", "right")
        tensors[key] = attribute(node, "result", *key)
    braiding = None
    if root.find("braiding") is not None:
        braiding = dict((reader.values(node, "left", "right"),
                         attribute(node, "label"))
                        for node in _entries(root, "braiding"))
    model = FiniteGradedModel(reader.pcm, objects, products, unit, hom, ids,
                              comp, regrades, tensors, braiding,
                              root.get("name", "model"), check)
    log.msg("Loaded model %r" % (model,))
    return model


def dump_model(model):
    """Serialize C{model} canonically, entries in scan order."""
    root = element("gmcmodel", version=VERSION, name=model.name)
    dump_pcm(root, model.pcm)
    objects = sub_element(root, "objects", unit=model.unit)
    for x in model.objects:
        sub_element(objects, "object", name=x)
    for x in model.objects:
        for y in model.objects:
            sub_element(objects, "product", left=x, right=y,
                        result=model.otimes(x, y))
    hom = sub_element(root, "hom")
    for e in model.grades:
        for x in model.objects:
            for y in model.objects:
                node = sub_element(hom, "set", grade=e, source=x, target=y)
                for f in model.homset(e, x, y):
                    sub_element(node, "label", name=f)
    section = sub_element(root, "id")
    for x in model.objects:
        sub_element(section, "entry", object=x, label=model.ids[x])
    section = sub_element(root, "comp")
    for e in model.grades:
        for x in model.objects:
            for y in model.objects:
                for z in model.objects:
                    for f in model.homset(e, x, y):
                        for g in model.homset(e, y, z):
                            sub_element(section, "entry", grade=e, source=x,
                                        middle=y, target=z, first=f, second=g,
                                        result=model.compose(e, x, y, z, f, g))
    section = sub_element(root, "regrade")
    for e, e2 in model.leq_pairs():
        if e == e2:
            continue
        for x, y, f in model.arrows(e):
            # "from" is a keyword, so the attribute is set directly.
            node = sub_element(section, "entry", to=e2, source=x, target=y,
                               label=f, result=model.regrade(e, e2, x, y, f))
            node.set("from", str(e))
    section = sub_element(root, "tensor")
    for e, e2, _ in model.orthogonal_pairs():
        for x, y, f in model.arrows(e):
            for x2, y2, g in model.arrows(e2):
                sub_element(section, "entry", left_grade=e, right_grade=e2,
                            left_source=x, left_target=y, right_source=x2,
                            right_target=y2, left=f, right=g,
                            result=model.tensor(e, e2, x, y, x2, y2, f, g))
    if model.braiding is not None:
        section = sub_element(root, "braiding")
        for x in model.objects:
            for y in model.objects:
                sub_element(section, "entry", left=x, right=y,
                            label=model.sigma(x, y))
    return dump_tree(root)
