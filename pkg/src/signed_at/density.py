"""Maximum average degree and bounded-outdegree orientations.

Signs play no role here except in :func:`at_all_negative`, where every edge
must be negative: then no Eulerian subdigraph has a positive edge, so any
orientation has nonzero imbalance and the AT number is fixed by the best
possible maximum outdegree.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .core import SignedGraph
from .limits import InternalError, InvalidArgumentError, check_cap, mad_cap
from .orientation import Orientation


@dataclass(frozen=True)
class DensityReport:
    mad: Fraction
    witness: frozenset

    def __str__(self) -> str:
        return f"{self.mad.numerator}/{self.mad.denominator}"


def mad(g: SignedGraph, cap: int | None = None) -> DensityReport:
    """Exact maximum of ``2|E(H)|/|V(H)|`` over nonempty induced subgraphs."""
    check_cap(g.n, cap, mad_cap, "exhaustive density")
    n = g.n
    if n == 0:
        raise InvalidArgumentError("mad of the empty graph is undefined")
    nbr = [0] * n
    for i, j, _ in g.edges:
        nbr[i] |= 1 << j
        nbr[j] |= 1 << i
    # e[S] = e[S minus lowest vertex] + edges from that vertex into the rest
    e = [0] * (1 << n)
    best_num, best_den, best_mask = 0, 1, 1
    for s in range(1, 1 << n):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        e[s] = e[rest] + bin(nbr[v] & rest).count("1")
        size = bin(s).count("1")
        if 2 * e[s] * best_den > best_num * size:
            best_num, best_den, best_mask = 2 * e[s], size, s
    witness = frozenset(g.vertices[i] for i in range(n) if best_mask >> i & 1)
    return DensityReport(Fraction(best_num, best_den), witness)


def bounded_outdegree_orientation(g: SignedGraph, p: int) -> Orientation | None:
    """An orientation with every outdegree at most ``p``, or ``None`` if mad(g) > 2p.

    Starts from the all-forward orientation and repeatedly reverses a
    shortest directed path from an overloaded vertex to one with spare room.
    If an overloaded vertex reaches no such vertex, its reachable set spans
    more than ``p`` edges per vertex, which certifies mad > 2p.
    """
    if p < 0:
        raise InvalidArgumentError("p must be nonnegative")
    n = g.n
    tail = [i for i, _, _ in g.edges]
    head = [j for _, j, _ in g.edges]
    out_arcs = [set() for _ in range(n)]
    for k in range(g.m):
        out_arcs[tail[k]].add(k)
    while True:
        over = next((v for v in range(n) if len(out_arcs[v]) > p), None)
        if over is None:
            break
        prev = {over: None}
        queue = deque([over])
        target = None
        while queue and target is None:
            u = queue.popleft()
            for k in sorted(out_arcs[u], key=lambda k: head[k]):
                w = head[k]
                if w in prev:
                    continue
                prev[w] = k
                if len(out_arcs[w]) < p:
                    target = w
                    break
                queue.append(w)
        if target is None:
            return None
        w = target
        while prev[w] is not None:
            k = prev[w]
            u = tail[k]
            out_arcs[u].discard(k)
            out_arcs[w].add(k)
            tail[k], head[k] = w, u
            w = u
    mask = 0
    for k, (i, j, _) in enumerate(g.edges):
        if tail[k] == j:
            mask |= 1 << k
    return Orientation(g, mask)


@dataclass(frozen=True)
class NegativeATResult:
    k: int
    density: DensityReport
    orientation: Orientation


def at_all_negative(g: SignedGraph, cap: int | None = None) -> NegativeATResult:
    if any(s == 1 for _, _, s in g.edges):
        raise InvalidArgumentError("at_all_negative needs every edge negative")
    if g.m == 0:
        return NegativeATResult(1, mad(g, cap=cap) if g.n else DensityReport(Fraction(0), frozenset()),
                                Orientation(g, 0))
    report = mad(g, cap=cap)
    p = ceil(report.mad / 2)
    o = bounded_outdegree_orientation(g, p)
    if o is None:
        raise InternalError("no orientation within the density bound")
    return NegativeATResult(p + 1, report, o)
