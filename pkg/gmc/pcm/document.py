"""The C{<pcm>} element shared by every document format."""

from gmc.exception import IllFormedError
from gmc.pcm.model import TablePCM
from gmc.pcm.syntax import parse_descriptor
from gmc.util import read_document, sub_element


__all__ = ["load_pcm", "dump_pcm", "load_pcm_document", "attribute"]


def attribute(node, name, *coordinates):
    """Return a required attribute of C{node}.

    @raises IllFormedError: If the attribute is missing.
    """
    value = node.get(name)
    if value is None:
        raise IllFormedError("<%s> lacks the %s attribute" % (node.tag, name),
                             coordinates)
    return value


def load_pcm(node, validate=True):
    """Build the PCM described by a C{<pcm>} element.

    Either C{spec} holds a descriptor, or C{kind="table"} lists C{<element>}
    and C{<sum>} children.
    """
    if node is None:
        raise IllFormedError("Missing <pcm> section")
    spec = node.get("spec")
    if spec is not None:
        return parse_descriptor(spec, validate)
    if node.get("kind") != "table":
        raise IllFormedError("<pcm> needs a spec or kind=\"table\"")
    elements = [attribute(child, "name") for child in node.findall("element")]
    table = {}
    for child in node.findall("sum"):
        key = (attribute(child, "left"), attribute(child, "right"))
        table[key] = attribute(child, "result", *key)
    return TablePCM(elements, table, attribute(node, "zero"), validate)


def dump_pcm(parent, pcm):
    """Append the C{<pcm>} element for C{pcm} to C{parent}."""
    if pcm.kind != "table":
        return sub_element(parent, "pcm", spec=pcm.tag)
    node = sub_element(parent, "pcm", kind="table", zero=pcm.zero_label)
    for label in pcm.labels:
        sub_element(node, "element", name=label)
    for a in pcm.labels:
        for b in pcm.labels:
            result = pcm.table.get((a, b))
            if result is not None and pcm.zero_label not in (a, b):
                sub_element(node, "sum", left=a, right=b, result=result)
    return node


def load_pcm_document(text, validate=True):
    """Load a standalone C{<pcm>} document."""
    return load_pcm(read_document(text, "pcm"), validate)
