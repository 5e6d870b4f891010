"""Signed graph data model.

A :class:`SignedGraph` is an immutable simple graph whose edges carry a sign
in ``{+1, -1}``.  The position of a vertex in ``vertices`` is the fixed
vertex ordering used everywhere else (graph polynomial factors, decreasing
edges, orientation bitmasks).  Edges are stored as index pairs ``(i, j, sign)``
with ``i < j``, in the order they were given.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Sequence

from .limits import InvalidArgumentError

Vertex = Hashable


@dataclass(frozen=True)
class SignedGraph:
    vertices: tuple
    edges: tuple  # of (i, j, sign), i < j, indices into vertices

    def __post_init__(self):
        verts = tuple(self.vertices)
        object.__setattr__(self, "vertices", verts)
        if len(set(verts)) != len(verts):
            raise InvalidArgumentError("duplicate vertex identifiers")
        n = len(verts)
        seen = set()
        norm = []
        for e in self.edges:
            try:
                i, j, s = e
            except (TypeError, ValueError):
                raise InvalidArgumentError(f"malformed edge {e!r}") from None
            if not (0 <= i < n and 0 <= j < n):
                raise InvalidArgumentError(f"edge {e!r} has an endpoint outside the vertex list")
            if i == j:
                raise InvalidArgumentError(f"loop at {verts[i]!r}")
            if s not in (1, -1):
                raise InvalidArgumentError(f"edge sign must be +1 or -1, got {s!r}")
            if i > j:
                i, j = j, i
            if (i, j) in seen:
                raise InvalidArgumentError(f"parallel edge {verts[i]!r}-{verts[j]!r}")
            seen.add((i, j))
            norm.append((i, j, int(s)))
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_edges(cls, vertices: Iterable[Vertex], edges: Iterable[Sequence]) -> "SignedGraph":
        """Build from vertex names and ``(u, v, sign)`` triples (sign defaults to +1)."""
        verts = tuple(vertices)
        pos = {v: i for i, v in enumerate(verts)}
        if len(pos) != len(verts):
            raise InvalidArgumentError("duplicate vertex identifiers")
        idx = []
        for e in edges:
            if len(e) == 2:
                u, v, s = e[0], e[1], 1
            else:
                u, v, s = e
            if u not in pos or v not in pos:
                raise InvalidArgumentError(f"edge ({u!r}, {v!r}) uses an unknown vertex")
            idx.append((pos[u], pos[v], s))
        return cls(verts, tuple(idx))

    @cached_property
    def index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def edge_index(self) -> dict:
        """Map ``(i, j)`` with ``i < j`` to the edge's position."""
        return {(i, j): k for k, (i, j, _) in enumerate(self.edges)}

    @cached_property
    def incidence(self) -> tuple:
        """Per vertex index, the tuple of incident edge positions."""
        inc = [[] for _ in self.vertices]
        for k, (i, j, _) in enumerate(self.edges):
            inc[i].append(k)
            inc[j].append(k)
        return tuple(tuple(x) for x in inc)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, i: int) -> int:
        return len(self.incidence[i])

    def neighbors(self, i: int) -> list:
        out = []
        for k in self.incidence[i]:
            a, b, _ = self.edges[k]
            out.append(b if a == i else a)
        return out

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        if u not in self.index or v not in self.index:
            return False
        i, j = self.index[u], self.index[v]
        return (min(i, j), max(i, j)) in self.edge_index

    def sign(self, u: Vertex, v: Vertex) -> int:
        i, j = self.index[u], self.index[v]
        k = self.edge_index.get((min(i, j), max(i, j)))
        if k is None:
            raise InvalidArgumentError(f"no edge {u!r}-{v!r}")
        return self.edges[k][2]

    def named_edges(self) -> list:
        """Edges as ``(u, v, sign)`` with ``u`` before ``v`` in the ordering."""
        V = self.vertices
        return [(V[i], V[j], s) for i, j, s in self.edges]

    def with_signs(self, signs: Sequence[int]) -> "SignedGraph":
        if len(signs) != self.m:
            raise InvalidArgumentError("one sign per edge required")
        return SignedGraph(self.vertices, tuple((i, j, s) for (i, j, _), s in zip(self.edges, signs)))

    def all_negative(self) -> "SignedGraph":
        return self.with_signs([-1] * self.m)

    def all_positive(self) -> "SignedGraph":
        return self.with_signs([1] * self.m)

    def reordered(self, order: Sequence[Vertex]) -> "SignedGraph":
        """Same signed graph under a different vertex ordering (edge order kept)."""
        order = tuple(order)
        if len(order) != self.n or set(order) != set(self.vertices):
            raise InvalidArgumentError("order must be a permutation of the vertices")
        return SignedGraph.from_edges(order, self.named_edges())

    def __repr__(self) -> str:
        return f"SignedGraph(n={self.n}, edges={self.named_edges()!r})"


def _vertex_indices(g: SignedGraph, x: Iterable[Vertex]) -> set:
    out = set()
    for v in x:
        if v not in g.index:
            raise InvalidArgumentError(f"unknown vertex {v!r}")
        out.add(g.index[v])
    return out


def switch(g: SignedGraph, x: Iterable[Vertex]) -> SignedGraph:
    """Negate the sign of every edge with exactly one end in ``x``."""
    xs = _vertex_indices(g, x)
    return SignedGraph(
        g.vertices,
        tuple((i, j, -s if (i in xs) != (j in xs) else s) for i, j, s in g.edges),
    )


def signed_subgraph(g: SignedGraph, keep_vertices: Iterable[Vertex], keep_edges: Iterable[Sequence]) -> SignedGraph:
    """Restrict ``g`` to a vertex set and an edge set, keeping signs and ordering.

    ``keep_edges`` holds unordered pairs ``(u, v)``; any sign given in a third
    slot is ignored, the sign always comes from ``g``.
    """
    keep = _vertex_indices(g, keep_vertices)
    verts = tuple(v for i, v in enumerate(g.vertices) if i in keep)
    wanted = set()
    for e in keep_edges:
        u, v = e[0], e[1]
        i, j = g.index.get(u), g.index.get(v)
        if i is None or j is None:
            raise InvalidArgumentError(f"edge ({u!r}, {v!r}) uses an unknown vertex")
        key = (min(i, j), max(i, j))
        if key not in g.edge_index:
            raise InvalidArgumentError(f"({u!r}, {v!r}) is not an edge of the graph")
        if i not in keep or j not in keep:
            raise InvalidArgumentError(f"edge ({u!r}, {v!r}) leaves the kept vertex set")
        wanted.add(key)
    V = g.vertices
    return SignedGraph.from_edges(verts, [(V[i], V[j], s) for i, j, s in g.edges if (i, j) in wanted])


def delete_edge(g: SignedGraph, u: Vertex, v: Vertex) -> SignedGraph:
    i, j = g.index[u], g.index[v]
    key = (min(i, j), max(i, j))
    if key not in g.edge_index:
        raise InvalidArgumentError(f"no edge {u!r}-{v!r}")
    return SignedGraph(g.vertices, tuple(e for e in g.edges if (e[0], e[1]) != key))


def is_antibalanced(g: SignedGraph) -> frozenset | None:
    """Return ``X`` with ``switch(g, X)`` all-negative, or ``None`` if none exists.

    Negating every sign turns the question into balance, which is a 2-labelling
    problem: negated-negative edges join equal labels, negated-positive edges
    join different labels.
    """
    label = [None] * g.n
    adj = [[] for _ in range(g.n)]
    for i, j, s in g.edges:
        flip = 1 if s == 1 else 0
        adj[i].append((j, flip))
        adj[j].append((i, flip))
    for root in range(g.n):
        if label[root] is not None:
            continue
        label[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w, flip in adj[u]:
                want = label[u] ^ flip
                if label[w] is None:
                    label[w] = want
                    queue.append(w)
                elif label[w] != want:
                    return None
    return frozenset(g.vertices[i] for i in range(g.n) if label[i] == 1)
