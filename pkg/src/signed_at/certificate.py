"""Certificate files and their independent verification.

A certificate is JSON holding the signed arcs of an orientation plus the
claims made about it.  :func:`verify` rebuilds the orientation from the arc
list alone, recounts outdegrees and Eulerian subdigraphs by explicit
enumeration, and compares with every recorded claim.  Nothing from the
construction is trusted.

Kinds:

``nice``  orientation of ``G - v1v2``; anchors 0, other boundary <= 2, interior <= 4
``at5``   orientation of ``G`` with every outdegree <= 4 (certifies AT <= 5)
``at``    orientation with every outdegree < ``bound`` (certifies AT <= bound)
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .core import SignedGraph, delete_edge
from .limits import InvalidArgumentError
from .orientation import ImbalanceReport, Orientation, imbalance_by_enumeration

ARROW = "->"


def _arc_text(t, h) -> str:
    for v in (t, h):
        if ARROW in str(v):
            raise InvalidArgumentError(f"vertex name {v!r} contains '{ARROW}'")
    return f"{t}{ARROW}{h}"


def certificate_doc(o: Orientation, kind: str, report: ImbalanceReport, bound: int,
                    outer=None, designated_edge=None, audit=None) -> dict:
    g = o.graph
    arcs, signs = [], []
    for k, (t, h) in enumerate(o.arcs()):
        arcs.append(_arc_text(t, h))
        signs.append(g.edges[k][2])
    doc = {"kind": kind, "bound": bound, "vertices": list(g.vertices)}
    if outer is not None:
        doc["outer_cycle"] = list(outer)
    if designated_edge is not None:
        doc["designated_edge"] = list(designated_edge)
    doc["arcs"] = arcs
    doc["signs"] = signs
    if audit is None:
        audit = [(v, "vertex", d, bound - 1) for v, d in zip(g.vertices, o.outdegree)]
    doc["outdegree_audit"] = [{"vertex": r[0], "role": r[1], "outdegree": r[2], "bound": r[3]}
                              for r in audit]
    doc["imbalance"] = {"even": report.even, "odd": report.odd, "diff": report.diff}
    return doc


def from_nice(cert) -> dict:
    """Document for a :class:`~signed_at.triangulation.NiceOrientationCertificate`."""
    rows = [(r.vertex, r.role, r.outdegree, r.bound) for r in cert.audit]
    return certificate_doc(cert.orientation, cert.kind, cert.report, 5, cert.outer,
                           cert.designated_edge, rows)


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


@dataclass
class VerifyResult:
    problems: list = field(default_factory=list)
    report: ImbalanceReport | None = None

    @property
    def ok(self) -> bool:
        return not self.problems


def _parse_arcs(doc):
    verts = doc.get("vertices")
    arcs = doc.get("arcs")
    signs = doc.get("signs")
    if not isinstance(verts, list) or not isinstance(arcs, list) or not isinstance(signs, list):
        raise InvalidArgumentError("certificate needs 'vertices', 'arcs' and 'signs' lists")
    if len(arcs) != len(signs):
        raise InvalidArgumentError("'arcs' and 'signs' differ in length")
    pairs = []
    for a in arcs:
        if not isinstance(a, str) or a.count(ARROW) != 1:
            raise InvalidArgumentError(f"arc {a!r} must read 'tail->head'")
        pairs.append(tuple(a.split(ARROW)))
    g = SignedGraph.from_edges(verts, [(t, h, s) for (t, h), s in zip(pairs, signs)])
    return g, Orientation.from_arcs(g, pairs)


def verify(doc: dict, graph: SignedGraph | None = None, cap: int | None = None) -> VerifyResult:
    """Re-check a certificate document; ``graph`` optionally pins the underlying signed graph."""
    res = VerifyResult()
    try:
        g, o = _parse_arcs(doc)
    except InvalidArgumentError as exc:
        res.problems.append(f"malformed: {exc}")
        return res
    kind = doc.get("kind")
    if kind not in ("nice", "at5", "at"):
        res.problems.append(f"unknown certificate kind {kind!r}")
        return res
    outdeg = dict(zip(g.vertices, o.outdegree))

    if graph is not None:
        expected = graph
        if kind == "nice":
            u, v = doc.get("designated_edge", [None, None])
            if not graph.has_edge(u, v):
                res.problems.append("designated edge is not an edge of the graph")
            else:
                expected = delete_edge(graph, u, v)
        if list(expected.vertices) != list(g.vertices):
            res.problems.append("vertex list differs from the graph file")
        mine = {(frozenset((a, b)), s) for a, b, s in g.named_edges()}
        theirs = {(frozenset((a, b)), s) for a, b, s in expected.named_edges()}
        if mine != theirs:
            res.problems.append("signed edge set differs from the graph file")

    bounds = {}
    if kind in ("nice", "at5"):
        outer = doc.get("outer_cycle")
        edge = doc.get("designated_edge")
        if not isinstance(outer, list) or len(outer) < 3 or not isinstance(edge, list) or len(edge) != 2:
            res.problems.append("missing outer_cycle or designated_edge")
            return res
        if list(edge) != outer[:2]:
            res.problems.append("designated edge must be the first two outer vertices")
        on = set(outer)
        for v in g.vertices:
            if kind == "at5":
                bounds[v] = 4
            elif v in edge:
                bounds[v] = 0
            elif v in on:
                bounds[v] = 2
            else:
                bounds[v] = 4
        known = all(x in g.index for x in edge)
        if kind == "nice" and known and g.has_edge(*edge):
            res.problems.append("nice orientation must omit the designated edge")
        if kind == "at5":
            if not known or (edge[0], edge[1]) not in o.arcs():
                res.problems.append("at5 certificate must contain the arc v1->v2")
    else:
        bound = doc.get("bound")
        if not isinstance(bound, int) or bound < 1:
            res.problems.append("'at' certificate needs a positive integer bound")
            return res
        bounds = {v: bound - 1 for v in g.vertices}

    for v in g.vertices:
        if outdeg[v] > bounds[v]:
            res.problems.append(f"vertex {v!r} has outdegree {outdeg[v]} > {bounds[v]}")
    recorded = {r.get("vertex"): r.get("outdegree") for r in doc.get("outdegree_audit", [])}
    for v in g.vertices:
        if v in recorded and recorded[v] != outdeg[v]:
            res.problems.append(f"recorded outdegree of {v!r} is {recorded[v]}, recount gives {outdeg[v]}")

    rep = imbalance_by_enumeration(o, cap=cap)
    res.report = rep
    claimed = doc.get("imbalance", {})
    if (claimed.get("even"), claimed.get("odd"), claimed.get("diff")) != (rep.even, rep.odd, rep.diff):
        res.problems.append(f"recorded imbalance {claimed} does not match recount "
                            f"even={rep.even} odd={rep.odd}")
    if rep.diff == 0:
        res.problems.append("even and odd Eulerian subdigraph counts are equal")
    return res
