import copy
import json

import pytest

from signed_at import certificate
from signed_at.core import SignedGraph
from signed_at.fileio import dumps_graph, loads_graph
from signed_at.generators import complete_graph, wheel
from signed_at.limits import InvalidArgumentError
from signed_at.orientation import at_number_orient, eulerian_imbalance
from signed_at.triangulation import at5_certificate, nice_orientation


@pytest.fixture
def nice_doc():
    t = wheel(5).with_signs([1, -1, 1, -1, -1, 1, 1, -1, 1, -1])
    return t, certificate.from_nice(nice_orientation(t))


def test_round_trip_verifies(nice_doc):
    t, doc = nice_doc
    doc = json.loads(certificate.dumps(doc))
    res = certificate.verify(doc, t.graph)
    assert res.ok, res.problems
    assert res.report.diff == doc["imbalance"]["diff"] != 0


def test_at5_and_at_kinds():
    t = wheel(6)
    doc = certificate.from_nice(at5_certificate(t))
    assert doc["kind"] == "at5" and doc["arcs"].count("v1->v2") == 1
    assert certificate.verify(doc, t.graph).ok
    g = complete_graph(4, -1)
    res = at_number_orient(g)
    adoc = certificate.certificate_doc(res.witness, "at", eulerian_imbalance(res.witness), res.k)
    assert certificate.verify(adoc, g).ok


def _flip_first_arc(doc):
    t, h = doc["arcs"][0].split("->")
    doc["arcs"][0] = f"{h}->{t}"


@pytest.mark.parametrize("tamper,needle", [
    (_flip_first_arc, ""),
    (lambda d: d["imbalance"].update(even=d["imbalance"]["even"] + 1), "recorded imbalance"),
    (lambda d: d["outdegree_audit"][0].update(outdegree=9), "recorded outdegree"),
    (lambda d: d["signs"].__setitem__(0, -d["signs"][0]), "signed edge set"),
    (lambda d: d.__setitem__("kind", "bogus"), "unknown certificate kind"),
    (lambda d: d.__setitem__("designated_edge", ["v2", "v3"]), "designated edge"),
    (lambda d: d["arcs"].pop(), "malformed"),
])
def test_tampering_detected(nice_doc, tamper, needle):
    t, doc = nice_doc
    bad = copy.deepcopy(doc)
    tamper(bad)
    res = certificate.verify(bad, t.graph)
    assert not res.ok
    assert any(needle in p for p in res.problems)


def test_overloaded_anchor_detected(nice_doc):
    t, doc = nice_doc
    bad = copy.deepcopy(doc)
    # point some arc out of an anchor
    for i, a in enumerate(bad["arcs"]):
        tail, head = a.split("->")
        if head in ("v1", "v2"):
            bad["arcs"][i] = f"{head}->{tail}"
            break
    assert not certificate.verify(bad).ok


def test_arrow_in_name_rejected():
    g = SignedGraph.from_edges(["a->b", "c"], [("a->b", "c", -1)])
    res = at_number_orient(g)
    with pytest.raises(InvalidArgumentError):
        certificate.certificate_doc(res.witness, "at", eulerian_imbalance(res.witness), res.k)


def test_graph_document_round_trip():
    t = wheel(4)
    text = dumps_graph(t.graph, t.outer, t.faces)
    doc = loads_graph(text)
    assert doc.graph == t.graph and doc.outer_cycle == t.outer and doc.faces == t.faces
    assert dumps_graph(doc.graph, doc.outer_cycle, doc.faces) == text
    bare = dumps_graph(SignedGraph(("a",), ()))
    assert loads_graph(bare).graph.n == 1 and loads_graph(bare).faces is None


@pytest.mark.parametrize("text", [
    "not json",
    "[]",
    '{"vertices": ["a", "b"]}',
    '{"vertices": ["a", "b"], "edges": [["a", "b", 2]]}',
    '{"vertices": ["a", "b"], "edges": [["a", "b", true]]}',
    '{"vertices": ["a", 1], "edges": []}',
    '{"vertices": ["a", "b"], "edges": [], "faces": "ab"}',
])
def test_graph_document_rejects(text):
    with pytest.raises(InvalidArgumentError):
        loads_graph(text)
