"""Near triangulations and constructive nice orientations.

A near triangulation is a plane graph whose outer boundary is a cycle
``v1 v2 ... vk`` and whose inner faces are triangles.  For ``e = v1v2`` a
*nice* orientation of ``G - e`` has nonzero Eulerian imbalance, outdegree 0
at ``v1`` and ``v2``, at most 2 at the other boundary vertices and at most 4
inside.  :func:`nice_orientation` builds one by induction on ``|V|``:

* three vertices: orient ``v3`` into both ``v1`` and ``v2``;
* a chord ``vk vj`` (``2 <= j <= k-2``): split along it, solve both sides and
  take the union (imbalances multiply);
* otherwise delete ``vk``, solve the rest and reattach ``vk`` with the arcs
  fixed by the fan of faces around it; for ``k >= 4`` the cheap candidate is
  checked first and, if its imbalance vanishes, a *special* orientation of
  the smaller graph with nonzero imbalance is searched for instead.

Adding the arc ``(v1, v2)`` to a nice orientation gives every vertex
outdegree at most 4 without changing the imbalance, certifying AT <= 5.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import SignedGraph, delete_edge, signed_subgraph
from .limits import InternalError, InvalidArgumentError
from .orientation import (ImbalanceReport, Orientation, enumerate_special,
                          eulerian_imbalance, imbalance_by_enumeration)

log = logging.getLogger(__name__)


def _key(u, v) -> frozenset:
    return frozenset((u, v))


def face_edges(face: Sequence) -> list:
    return [_key(face[i], face[(i + 1) % len(face)]) for i in range(len(face))]


@dataclass(frozen=True)
class NearTriangulation:
    graph: SignedGraph
    outer: tuple
    faces: tuple

    def __post_init__(self):
        object.__setattr__(self, "outer", tuple(self.outer))
        object.__setattr__(self, "faces", tuple(tuple(f) for f in self.faces))

    @classmethod
    def checked(cls, graph: SignedGraph, outer: Sequence, faces: Iterable[Sequence]) -> "NearTriangulation":
        t = cls(graph, tuple(outer), tuple(faces))
        problem = validate(t)
        if problem is not None:
            raise InvalidArgumentError(problem)
        return t

    @property
    def k(self) -> int:
        return len(self.outer)

    def interior(self) -> list:
        on = set(self.outer)
        return [v for v in self.graph.vertices if v not in on]

    def with_signs(self, signs: Sequence[int]) -> "NearTriangulation":
        return NearTriangulation(self.graph.with_signs(signs), self.outer, self.faces)

    def with_graph(self, graph: SignedGraph) -> "NearTriangulation":
        return NearTriangulation(graph, self.outer, self.faces)

    def rooted_at(self, u, v) -> "NearTriangulation":
        """Same embedding with the outer cycle read so that it starts ``u, v``."""
        cyc = list(self.outer)
        if u not in cyc or v not in cyc:
            raise InvalidArgumentError(f"{u!r}{v!r} is not an outer edge")
        i = cyc.index(u)
        cyc = cyc[i:] + cyc[:i]
        if cyc[1] != v:
            cyc = [cyc[0]] + cyc[1:][::-1]
        if cyc[1] != v:
            raise InvalidArgumentError(f"{u!r}{v!r} is not an outer edge")
        return NearTriangulation(self.graph, tuple(cyc), self.faces)


def validate(t: NearTriangulation) -> str | None:
    """Return ``None`` if ``t`` is a near triangulation, else the first violated clause."""
    g = t.graph
    outer = t.outer
    if len(outer) < 3 or len(set(outer)) != len(outer):
        return "outer-cycle: the outer boundary must list at least 3 distinct vertices"
    for v in outer:
        if v not in g.index:
            return f"outer-cycle: unknown vertex {v!r}"
    for e in face_edges(outer):
        if not g.has_edge(*e):
            return f"outer-cycle: consecutive outer vertices {sorted(map(str, e))} are not adjacent"
    for f in t.faces:
        if len(set(f)) != len(f) or any(v not in g.index for v in f):
            return f"face-vertices: face {f!r} repeats or names unknown vertices"
    for f in t.faces:
        if len(f) != 3:
            return f"triangular-faces: inner face {f!r} is not a triangle"
    count = Counter()
    for f in t.faces:
        for e in face_edges(f):
            if not g.has_edge(*e):
                return f"face-edges: face {f!r} uses a non-edge {sorted(map(str, e))}"
            count[e] += 1
    outer_edges = set(face_edges(outer))
    for u, v, _ in g.named_edges():
        e = _key(u, v)
        want = 1 if e in outer_edges else 2
        if count[e] != want:
            return (f"edge-faces: edge {u!r}-{v!r} lies on {count[e]} inner face(s), "
                    f"expected {want}")
    if g.n - g.m + len(t.faces) + 1 != 2:
        return f"euler: |V|-|E|+|F| = {g.n - g.m + len(t.faces) + 1}, expected 2"
    # each vertex must see its faces (outer included) as a single cycle
    link = {v: [] for v in g.vertices}
    for f in list(t.faces) + [outer]:
        n = len(f)
        for i in range(n):
            link[f[i]].append((f[i - 1], f[(i + 1) % n]))
    for v, pairs in link.items():
        if not pairs:
            return f"vertex-link: vertex {v!r} lies on no face"
        adj = {}
        for a, b in pairs:
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        if any(len(x) != 2 for x in adj.values()):
            return f"vertex-link: faces around {v!r} do not close up"
        start = next(iter(adj))
        seen, prev, cur = {start}, None, start
        while True:
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            if nxt == start:
                break
            seen.add(nxt)
            prev, cur = cur, nxt
        if len(seen) != len(adj):
            return f"vertex-link: faces around {v!r} form more than one cycle"
    return None


def find_outer_chord(t: NearTriangulation) -> int | None:
    """Least ``j`` (1-based, ``2 <= j <= k-2``) with ``vk vj`` an edge."""
    outer, g = t.outer, t.graph
    vk = outer[-1]
    for j in range(2, len(outer) - 1):
        if g.has_edge(vk, outer[j - 1]):
            return j
    return None


def _faces_by_edge(faces) -> dict:
    by_edge = {}
    for f in faces:
        for e in face_edges(f):
            by_edge.setdefault(e, []).append(f)
    return by_edge


def fan_neighbors(t: NearTriangulation) -> list:
    """Neighbours of ``vk`` in facial order: ``v_{k-1}, u_1, ..., u_s, v_1``."""
    outer = t.outer
    vk, start, stop = outer[-1], outer[-2], outer[0]
    by_edge = _faces_by_edge(t.faces)
    seq = [start]
    prev_face = None
    cur = start
    for _ in range(t.graph.degree(t.graph.index[vk])):
        faces = [f for f in by_edge.get(_key(vk, cur), []) if f != prev_face]
        if len(faces) != 1:
            raise InvalidArgumentError(f"face structure around {vk!r} is inconsistent at {cur!r}")
        face = faces[0]
        (nxt,) = [w for w in face if w not in (vk, cur)]
        seq.append(nxt)
        if nxt == stop:
            return seq
        prev_face, cur = face, nxt
    raise InvalidArgumentError(f"fan around {vk!r} does not reach {stop!r}")


def _restrict(t: NearTriangulation, outer: Sequence, faces: Sequence) -> NearTriangulation:
    verts, edges = set(), set()
    for f in faces:
        verts.update(f)
        edges.update(face_edges(f))
    g = signed_subgraph(t.graph, verts, [tuple(e) for e in edges])
    return NearTriangulation(g, tuple(outer), tuple(faces))


def split_at_chord(t: NearTriangulation, j: int) -> tuple:
    """Split along the chord ``vk vj`` into the side holding ``v1v2`` and the other side.

    The second part's outer cycle starts ``vk, vj`` so that the chord is its
    designated edge.
    """
    outer = t.outer
    k = len(outer)
    vk, vj = outer[-1], outer[j - 1]
    chord = _key(vk, vj)
    by_edge = _faces_by_edge(t.faces)
    (start,) = by_edge[_key(outer[0], outer[1])]
    side = {start}
    stack = [start]
    while stack:
        f = stack.pop()
        for e in face_edges(f):
            if e == chord:
                continue
            for h in by_edge[e]:
                if h not in side:
                    side.add(h)
                    stack.append(h)
    faces1 = [f for f in t.faces if f in side]
    faces2 = [f for f in t.faces if f not in side]
    c1 = outer[:j] + (vk,)
    c2 = (vk,) + outer[j - 1:k - 1]
    return _restrict(t, c1, faces1), _restrict(t, c2, faces2)


def remove_last_outer(t: NearTriangulation) -> tuple:
    """Delete ``vk`` from a chordless instance; returns ``(G', u_1..u_s)``."""
    fan = fan_neighbors(t)
    us = tuple(fan[1:-1])
    vk = t.outer[-1]
    faces = [f for f in t.faces if vk not in f]
    keep = [v for v in t.graph.vertices if v != vk]
    V = t.graph.vertices
    edges = [(V[i], V[j]) for i, j, _ in t.graph.edges if vk not in (V[i], V[j])]
    g = signed_subgraph(t.graph, keep, edges)
    return NearTriangulation(g, t.outer[:-1] + us, tuple(faces)), us


@dataclass(frozen=True)
class AuditRow:
    vertex: object
    role: str   # anchor / boundary / interior
    outdegree: int
    bound: int

    @property
    def ok(self) -> bool:
        return self.outdegree <= self.bound


def outdegree_audit(outer: Sequence, o: Orientation, kind: str = "nice") -> list:
    g = o.graph
    anchors = set(outer[:2])
    boundary = set(outer)
    rows = []
    for v, d in zip(g.vertices, o.outdegree):
        if v in anchors:
            role = "anchor"
        elif v in boundary:
            role = "boundary"
        else:
            role = "interior"
        if kind == "nice":
            bound = {"anchor": 0, "boundary": 2, "interior": 4}[role]
        else:
            bound = 4
        rows.append(AuditRow(v, role, d, bound))
    return rows


@dataclass(frozen=True)
class NiceOrientationCertificate:
    orientation: Orientation
    designated_edge: tuple
    outer: tuple
    report: ImbalanceReport
    audit: tuple
    kind: str = "nice"  # "nice" orients G - e, "at5" orients all of G
    branches: Counter = field(default_factory=Counter, compare=False)

    @property
    def ok(self) -> bool:
        return self.report.diff != 0 and all(r.ok for r in self.audit)

    @property
    def max_outdegree(self) -> int:
        return self.orientation.max_outdegree()


def _arcs_orientation(g: SignedGraph, arcs) -> Orientation:
    return Orientation.from_arcs(g, sorted(arcs, key=lambda a: (g.index[a[0]], g.index[a[1]])))


def special_caps(t_prime: NearTriangulation, k: int) -> dict:
    """Outdegree caps for special orientations of ``G' - e`` when ``G`` had outer length ``k``."""
    outer = t_prime.outer
    caps = {v: 4 for v in t_prime.graph.vertices}
    caps[outer[0]] = caps[outer[1]] = 0
    for v in outer[2:k - 1]:
        caps[v] = 2
    caps[outer[k - 2]] = 1
    for u in outer[k - 1:]:
        caps[u] = 3
    return caps


def _nice(t: NearTriangulation, branches: Counter, cap) -> set:
    outer, g = t.outer, t.graph
    k = len(outer)
    v1, v2 = outer[0], outer[1]
    if g.n == 3:
        branches["base"] += 1
        v3 = outer[2]
        return {(v3, v2), (v3, v1)}
    j = find_outer_chord(t)
    if j is not None:
        branches["chord"] += 1
        t1, t2 = split_at_chord(t, j)
        return _nice(t1, branches, cap) | _nice(t2, branches, cap)
    vk, vk1 = outer[-1], outer[-2]
    t_prime, us = remove_last_outer(t)
    d_prime = _nice(t_prime, branches, cap)
    if k == 3:
        branches["triangle"] += 1
        return d_prime | {(vk, v1), (vk, v2)} | {(u, vk) for u in us}
    g_minus = delete_edge(g, v1, v2)
    cand = d_prime | {(vk, v1), (vk, vk1)} | {(u, vk) for u in us}
    if eulerian_imbalance(_arcs_orientation(g_minus, cand), cap=cap).diff != 0:
        branches["case2"] += 1
        return cand
    log.info("cheap reattachment of %r balanced; searching special orientations", vk)
    gp_minus = delete_edge(t_prime.graph, v1, v2)
    for d2 in enumerate_special(gp_minus, special_caps(t_prime, k), cap=cap):
        if eulerian_imbalance(d2, cap=cap).diff != 0:
            branches["case1"] += 1
            return set(d2.arcs()) | {(vk, v1), (vk1, vk)} | {(u, vk) for u in us}
    raise InternalError(f"no nice orientation found while reattaching {vk!r}")


def nice_orientation(t: NearTriangulation, edge: Sequence | None = None,
                     cap: int | None = None) -> NiceOrientationCertificate:
    """Nice orientation of ``G - v1v2``; ``edge`` re-roots the outer cycle first."""
    if edge is not None:
        t = t.rooted_at(*edge)
    problem = validate(t)
    if problem is not None:
        raise InvalidArgumentError(problem)
    branches = Counter()
    arcs = _nice(t, branches, cap)
    v1, v2 = t.outer[0], t.outer[1]
    o = _arcs_orientation(delete_edge(t.graph, v1, v2), arcs)
    report = eulerian_imbalance(o, cap=cap)
    cert = NiceOrientationCertificate(o, (v1, v2), t.outer, report,
                                      tuple(outdegree_audit(t.outer, o, "nice")), "nice", branches)
    if not cert.ok:
        raise InternalError("constructed orientation failed its own audit")
    log.debug("nice orientation built with branches %s", dict(branches))
    return cert


def at5_certificate(t: NearTriangulation, cap: int | None = None) -> NiceOrientationCertificate:
    """Orientation of all of ``G`` with outdegrees at most 4 and nonzero imbalance."""
    nice = nice_orientation(t, cap=cap)
    v1, v2 = nice.designated_edge
    o = _arcs_orientation(t.graph, nice.orientation.arcs() + [(v1, v2)])
    report = eulerian_imbalance(o, cap=cap)
    cert = NiceOrientationCertificate(o, (v1, v2), t.outer, report,
                                      tuple(outdegree_audit(t.outer, o, "at5")), "at5", nice.branches)
    if not cert.ok or report != nice.report:
        raise InternalError("adding the designated arc changed the certificate")
    return cert


def check_certificate(cert: NiceOrientationCertificate, cap: int | None = None) -> bool:
    """Recount the imbalance by explicit enumeration and redo the audit."""
    rep = imbalance_by_enumeration(cert.orientation, cap=cap)
    rows = outdegree_audit(cert.outer, cert.orientation, cert.kind)
    return rep == cert.report and rep.diff != 0 and all(r.ok for r in rows)


def triangulate_embedding(g: SignedGraph, outer: Sequence, faces: Iterable[Sequence]) -> NearTriangulation:
    """Fan-triangulate every non-triangular inner face; new edges are positive.

    The outer face must already be a cycle.  The fan apex of a face is its
    first vertex whose diagonals are all new edges.
    """
    outer = tuple(outer)
    faces = [tuple(f) for f in faces]
    if len(outer) < 3:
        raise InvalidArgumentError("outer face must be a cycle of length at least 3")
    if g.n < 3:
        raise InvalidArgumentError("need at least 3 vertices")
    present = {_key(u, v) for u, v, _ in g.named_edges()}
    added = []
    out_faces = []
    for f in faces:
        if len(f) < 3 or len(set(f)) != len(f):
            raise InvalidArgumentError(f"face {f!r} is not a simple cycle")
        if len(f) == 3:
            out_faces.append(f)
            continue
        n = len(f)
        for r in range(n):
            rot = f[r:] + f[:r]
            diags = [_key(rot[0], rot[i]) for i in range(2, n - 1)]
            if not any(d in present for d in diags):
                break
        else:
            raise InvalidArgumentError(f"face {f!r} cannot be fan-triangulated without a parallel edge")
        for i in range(2, n - 1):
            added.append((rot[0], rot[i], 1))
            present.add(_key(rot[0], rot[i]))
        out_faces += [(rot[0], rot[i], rot[i + 1]) for i in range(1, n - 1)]
    graph = g if not added else SignedGraph.from_edges(g.vertices, g.named_edges() + added)
    t = NearTriangulation(graph, outer, tuple(out_faces))
    problem = validate(t)
    if problem is not None:
        raise InvalidArgumentError(f"embedding is inconsistent: {problem}")
    return t
