"""Orientations, Eulerian subdigraphs and the orientation form of the AT number.

An orientation is a bitmask over the graph's edge list: bit ``k`` clear means
edge ``k = (i, j)`` points from the earlier vertex ``i`` to the later ``j``,
bit set means it points backwards.  Enumerations walk masks in increasing
integer order, which is also the tie-break order for witnesses.

A positive edge pointing backwards is *decreasing*; the parity of the number
of decreasing edges is the orientation's sign.  An Eulerian subdigraph is a
set of arcs with indegree equal to outdegree everywhere, and it is *even* or
*odd* by the parity of its positive edges.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .core import SignedGraph
from .limits import InvalidArgumentError, check_cap, enumeration_cap
from .polynomial import ATResult


@dataclass(frozen=True)
class Orientation:
    graph: SignedGraph
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.graph.m:
            raise InvalidArgumentError("orientation mask has bits beyond the edge count")

    @classmethod
    def from_arcs(cls, g: SignedGraph, arcs: Iterable[Sequence]) -> "Orientation":
        """Build from ``(tail, head)`` vertex pairs covering every edge exactly once."""
        mask = 0
        seen = set()
        for tail, head in arcs:
            if tail not in g.index or head not in g.index:
                raise InvalidArgumentError(f"arc ({tail!r}, {head!r}) uses an unknown vertex")
            t, h = g.index[tail], g.index[head]
            k = g.edge_index.get((min(t, h), max(t, h)))
            if k is None:
                raise InvalidArgumentError(f"arc ({tail!r}, {head!r}) is not an edge")
            if k in seen:
                raise InvalidArgumentError(f"edge {tail!r}-{head!r} oriented twice")
            seen.add(k)
            if t > h:
                mask |= 1 << k
        if len(seen) != g.m:
            raise InvalidArgumentError(f"{g.m - len(seen)} edge(s) left unoriented")
        return cls(g, mask)

    def tail_head(self, k: int) -> tuple:
        i, j, _ = self.graph.edges[k]
        return (j, i) if self.mask >> k & 1 else (i, j)

    @cached_property
    def outdegree(self) -> tuple:
        out = [0] * self.graph.n
        for k in range(self.graph.m):
            out[self.tail_head(k)[0]] += 1
        return tuple(out)

    def arcs(self) -> list:
        V = self.graph.vertices
        return [(V[t], V[h]) for t, h in map(self.tail_head, range(self.graph.m))]

    def max_outdegree(self) -> int:
        return max(self.outdegree, default=0)

    def reversed_arc(self, k: int) -> "Orientation":
        return Orientation(self.graph, self.mask ^ (1 << k))


@dataclass(frozen=True)
class EulerianSubdigraph:
    orientation: Orientation
    mask: int  # edge positions included

    def edges(self) -> list:
        return [k for k in range(self.orientation.graph.m) if self.mask >> k & 1]

    def positive_edges(self) -> int:
        g = self.orientation.graph
        return sum(1 for k in self.edges() if g.edges[k][2] == 1)

    @property
    def parity(self) -> str:
        return "odd" if self.positive_edges() % 2 else "even"


@dataclass(frozen=True)
class ImbalanceReport:
    even: int
    odd: int

    @property
    def diff(self) -> int:
        return self.even - self.odd

    @property
    def total(self) -> int:
        return self.even + self.odd


def _positive_mask(g: SignedGraph) -> int:
    return sum(1 << k for k, e in enumerate(g.edges) if e[2] == 1)


def decreasing_edges(o: Orientation) -> int:
    return bin(o.mask & _positive_mask(o.graph)).count("1")


def sigma_parity(o: Orientation) -> str:
    return "odd" if decreasing_edges(o) % 2 else "even"


def iter_orientation_masks(g: SignedGraph, hi: Sequence[int] | None = None,
                           lo: Sequence[int] | None = None) -> Iterator[int]:
    """Masks of all orientations with ``lo[v] <= outdeg(v) <= hi[v]``, ascending."""
    n, m = g.n, g.m
    hi = list(hi) if hi is not None else [g.degree(v) for v in range(n)]
    lo = list(lo) if lo is not None else None
    if any(h < 0 for h in hi):
        return
    if sum(min(hi[v], g.degree(v)) for v in range(n)) < m:
        return
    if lo is not None and any(lo[v] > min(hi[v], g.degree(v)) for v in range(n)):
        return
    if m == 0:
        yield 0
        return
    edges = g.edges
    out = [0] * n
    rem = [g.degree(v) for v in range(n)]
    state = [0] * m    # next bit to try at each depth
    applied = [-1] * m  # bit currently applied at each depth, -1 if none
    mask = 0
    depth = 0
    # depth d decides edge m-1-d, so the most significant bit is fixed first
    while depth >= 0:
        k = m - 1 - depth
        i, j, _ = edges[k]
        c = applied[depth]
        if c >= 0:
            out[j if c else i] -= 1
            rem[i] += 1
            rem[j] += 1
            mask &= ~(1 << k)
            applied[depth] = -1
        b = state[depth]
        if b == 2:
            depth -= 1
            continue
        state[depth] = b + 1
        tail = j if b else i
        if out[tail] >= hi[tail]:
            continue
        out[tail] += 1
        rem[i] -= 1
        rem[j] -= 1
        if b:
            mask |= 1 << k
        applied[depth] = b
        if lo is not None and (out[i] + rem[i] < lo[i] or out[j] + rem[j] < lo[j]):
            continue
        if depth == m - 1:
            yield mask
            continue
        depth += 1
        state[depth] = 0
        applied[depth] = -1


def enumerate_orientations(g: SignedGraph, caps: Sequence[int] | None = None,
                           cap: int | None = None) -> Iterator[Orientation]:
    check_cap(g.m, cap, enumeration_cap, "orientation enumeration")
    for mask in iter_orientation_masks(g, caps):
        yield Orientation(g, mask)


def count_by_outdegree(g: SignedGraph, d: Sequence[int], cap: int | None = None) -> tuple:
    """Return ``(even, odd)``: orientations with outdegree sequence ``d`` split by sign."""
    d = tuple(d)
    if len(d) != g.n:
        raise InvalidArgumentError(f"outdegree sequence has length {len(d)}, expected {g.n}")
    check_cap(g.m, cap, enumeration_cap, "orientation enumeration")
    if sum(d) != g.m or any(x < 0 for x in d):
        return (0, 0)
    pos = _positive_mask(g)
    eo = oo = 0
    for mask in iter_orientation_masks(g, d, d):
        if bin(mask & pos).count("1") % 2:
            oo += 1
        else:
            eo += 1
    return (eo, oo)


def enumerate_eulerian(o: Orientation, cap: int | None = None) -> list:
    """All Eulerian subdigraphs of ``o`` (the empty one included), by ascending edge mask."""
    g = o.graph
    check_cap(g.m, cap, enumeration_cap, "Eulerian enumeration")
    m = g.m
    arcs = [o.tail_head(k) for k in range(m)]
    bal = [0] * g.n
    rem = [g.degree(v) for v in range(g.n)]
    found = []

    def walk(k: int, mask: int) -> None:
        if k < 0:
            found.append(mask)
            return
        t, h = arcs[k]
        rem[t] -= 1
        rem[h] -= 1
        if abs(bal[t]) <= rem[t] and abs(bal[h]) <= rem[h]:
            walk(k - 1, mask)
        bal[t] += 1
        bal[h] -= 1
        if abs(bal[t]) <= rem[t] and abs(bal[h]) <= rem[h]:
            walk(k - 1, mask | 1 << k)
        bal[t] -= 1
        bal[h] += 1
        rem[t] += 1
        rem[h] += 1

    walk(m - 1, 0)
    return [EulerianSubdigraph(o, mk) for mk in found]


def _edge_order(g: SignedGraph) -> list:
    # BFS vertex order keeps the DP frontier narrow on planar inputs
    seen = [False] * g.n
    rank = [0] * g.n
    r = 0
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        while queue:
            u = queue.pop(0)
            rank[u] = r
            r += 1
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return sorted(range(g.m), key=lambda k: (max(rank[g.edges[k][0]], rank[g.edges[k][1]]),
                                             min(rank[g.edges[k][0]], rank[g.edges[k][1]])))


def eulerian_imbalance(o: Orientation, cap: int | None = None) -> ImbalanceReport:
    """Count even and odd Eulerian subdigraphs of ``o``.

    Counts come from a dynamic program over edges that tracks the in/out
    balance of vertices whose incident edges are only partly decided; it
    visits the same subsets as the explicit enumeration but merges equal
    frontier states.
    """
    g = o.graph
    check_cap(g.m, cap, enumeration_cap, "Eulerian enumeration")
    order = _edge_order(g)
    last = {}
    remaining = [g.degree(v) for v in range(g.n)]
    for step, k in enumerate(order):
        for v in g.edges[k][:2]:
            last[v] = step
    states = {(): (1, 0)}
    for step, k in enumerate(order):
        t, h = o.tail_head(k)
        positive = g.edges[k][2] == 1
        remaining[t] -= 1
        remaining[h] -= 1
        closing = [v for v in (t, h) if last[v] == step]
        nxt: dict = {}
        for key, (ev, od) in states.items():
            bal = dict(key)
            for include in (False, True):
                b = dict(bal)
                if include:
                    b[t] = b.get(t, 0) + 1
                    b[h] = b.get(h, 0) - 1
                else:
                    b.setdefault(t, 0)
                    b.setdefault(h, 0)
                if any(b[v] for v in closing):
                    continue
                if abs(b[t]) > remaining[t] or abs(b[h]) > remaining[h]:
                    continue
                for v in closing:
                    del b[v]
                nk = tuple(sorted(b.items()))
                e0, o0 = nxt.get(nk, (0, 0))
                if include and positive:
                    nxt[nk] = (e0 + od, o0 + ev)
                else:
                    nxt[nk] = (e0 + ev, o0 + od)
        states = nxt
    ev, od = states.get((), (0, 0))
    return ImbalanceReport(ev, od)


def imbalance_by_enumeration(o: Orientation, cap: int | None = None) -> ImbalanceReport:
    ev = od = 0
    for h in enumerate_eulerian(o, cap=cap):
        if h.positive_edges() % 2:
            od += 1
        else:
            ev += 1
    return ImbalanceReport(ev, od)


def coefficient_via_orientation(g: SignedGraph, o: Orientation, cap: int | None = None) -> int:
    """Coefficient of the monomial given by ``o``'s outdegrees, read off its Eulerian subdigraphs."""
    if o.graph != g:
        raise InvalidArgumentError("orientation belongs to a different graph")
    diff = eulerian_imbalance(o, cap=cap).diff
    return diff if sigma_parity(o) == "even" else -diff


def find_orientation(g: SignedGraph, k: int, cap: int | None = None) -> Orientation | None:
    """Least-mask orientation with every outdegree below ``k`` and nonzero imbalance."""
    check_cap(g.m, cap, enumeration_cap, "orientation enumeration")
    for mask in iter_orientation_masks(g, [k - 1] * g.n):
        o = Orientation(g, mask)
        if eulerian_imbalance(o, cap=cap).diff != 0:
            return o
    return None


def at_number_orient(g: SignedGraph, cap: int | None = None) -> ATResult:
    check_cap(g.m, cap, enumeration_cap, "orientation enumeration")
    k = 1
    while True:
        o = find_orientation(g, k, cap=cap)
        if o is not None:
            return ATResult(k, o, "orientation", eulerian_imbalance(o, cap=cap).diff)
        k += 1


def enumerate_special(g: SignedGraph, caps: Mapping, cap: int | None = None) -> Iterator[Orientation]:
    """Orientations of ``g`` whose outdegrees respect per-vertex ``caps``.

    Vertices absent from ``caps`` are unconstrained.
    """
    hi = []
    for v in g.vertices:
        hi.append(caps.get(v, g.degree(g.index[v])))
    unknown = set(caps) - set(g.vertices)
    if unknown:
        raise InvalidArgumentError(f"caps name unknown vertices {sorted(map(str, unknown))}")
    return enumerate_orientations(g, hi, cap=cap)
