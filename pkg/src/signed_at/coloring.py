"""Proper colourings, list colourings and bounded choosability refutation.

A colouring ``phi`` of a signed graph is proper when ``phi(u) != sign(uv) * phi(v)``
on every edge.  For a negative edge this forbids ``phi(u) == -phi(v)``, so two
ends coloured 0 clash while equal nonzero colours are fine.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import prod
from typing import Mapping, Sequence

from .core import SignedGraph
from .limits import InternalError, InvalidArgumentError, ResourceLimitError, search_cap


def palette(k: int) -> tuple:
    """The palette M_k, listed 0, 1, -1, 2, -2, ... (search order)."""
    if k < 1:
        raise InvalidArgumentError("palette size must be positive")
    out = [0] if k % 2 else []
    for c in range(1, k // 2 + 1):
        out += [c, -c]
    return tuple(out)


def is_proper(g: SignedGraph, coloring: Mapping) -> bool:
    missing = [v for v in g.vertices if v not in coloring]
    if missing:
        raise InvalidArgumentError(f"no colour for vertices {missing!r}")
    V = g.vertices
    return all(coloring[V[i]] != s * coloring[V[j]] for i, j, s in g.edges)


class _Budget:
    def __init__(self, cap):
        self.limit = search_cap() if cap is None else cap
        self.used = 0

    def spend(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.limit:
            raise ResourceLimitError(f"search exceeded cap of {self.limit} steps")


def _earlier_neighbors(g: SignedGraph) -> list:
    """For each vertex index, ``(j, sign)`` for neighbours that come earlier."""
    back = [[] for _ in range(g.n)]
    for i, j, s in g.edges:
        back[j].append((i, s))
    return back


def _first_coloring(g: SignedGraph, options: Sequence[Sequence[int]], budget: _Budget):
    """Backtrack in vertex order; returns (colouring list or None, assignments ruled out)."""
    n = g.n
    back = _earlier_neighbors(g)
    # suffix[i] = number of full assignments below a node fixed up to vertex i-1
    suffix = [1] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] * len(options[i])
    phi = [0] * n
    ruled_out = 0

    def walk(i: int) -> bool:
        nonlocal ruled_out
        if i == n:
            return True
        for c in options[i]:
            budget.spend()
            if all(c != s * phi[j] for j, s in back[i]):
                phi[i] = c
                if walk(i + 1):
                    return True
            else:
                ruled_out += suffix[i + 1]
        return False

    if walk(0):
        return list(phi), ruled_out
    return None, ruled_out


@dataclass(frozen=True)
class ChromaticResult:
    k: int
    coloring: dict


def chromatic_number(g: SignedGraph, cap: int | None = None) -> ChromaticResult:
    """Least ``k`` with a proper M_k-colouring, with the first one found."""
    budget = _Budget(cap)
    k = 1
    while True:
        pal = palette(k)
        phi, _ = _first_coloring(g, [pal] * g.n, budget)
        if phi is not None:
            return ChromaticResult(k, dict(zip(g.vertices, phi)))
        k += 1


@dataclass(frozen=True)
class ListColorResult:
    coloring: dict | None
    exhausted: int  # full assignments ruled out before stopping
    total: int      # product of list sizes

    @property
    def colorable(self) -> bool:
        return self.coloring is not None


def _normalize_lists(g: SignedGraph, lists: Mapping) -> list:
    out = []
    for v in g.vertices:
        if v not in lists:
            raise InvalidArgumentError(f"no list for vertex {v!r}")
        L = sorted(set(int(c) for c in lists[v]))
        if not L:
            raise InvalidArgumentError(f"empty list at vertex {v!r}")
        out.append(L)
    return out


def list_color(g: SignedGraph, lists: Mapping, cap: int | None = None) -> ListColorResult:
    """First proper colouring with ``phi(v)`` in ``lists[v]``, searching lists in ascending order."""
    options = _normalize_lists(g, lists)
    total = prod(len(L) for L in options)
    limit = search_cap() if cap is None else cap
    if total > limit:
        raise ResourceLimitError(f"{total} assignments exceed the search cap {limit}")
    phi, ruled_out = _first_coloring(g, options, _Budget(cap))
    if phi is None:
        return ListColorResult(None, ruled_out, total)
    return ListColorResult(dict(zip(g.vertices, phi)), ruled_out, total)


# --- the 2-colourable, non-3-choosable planar example ---------------------

FIGURE2_CORE = ("a", "b", "c", "d")


def _prime(x: str) -> str:
    return x + "'"


FIGURE2_NEIGHBORS = {"a": ("a", "b", "c"), "b": ("a", "b", "d"), "c": ("a", "c", "d"), "d": ("b", "c", "d")}


def figure2_instance() -> tuple:
    """All-negative K4 on a, b, c, d plus one vertex x' per K4 triangle, with the 3-lists."""
    core = list(FIGURE2_CORE)
    verts = core + [_prime(x) for x in core]
    edges = [(u, v, -1) for u, v in combinations(core, 2)]
    for x in core:
        edges += [(y, _prime(x), -1) for y in FIGURE2_NEIGHBORS[x]]
    g = SignedGraph.from_edges(verts, edges)
    base = {"a": (0, -1, -2), "b": (0, -1, 2), "c": (0, 1, -2), "d": (0, 1, 2)}
    lists = {}
    for x, L in base.items():
        lists[x] = L
        lists[_prime(x)] = L
    return g, lists


def figure2_embedding() -> tuple:
    """Plane embedding as ``(outer_cycle, inner_faces)``.

    Each x' sits inside the K4 triangle formed by its three neighbours, which
    splits the four K4 faces into twelve triangles; one of them is the outer face.
    """
    faces = []
    for x in FIGURE2_CORE:
        p, (u, v, w) = _prime(x), FIGURE2_NEIGHBORS[x]
        faces += [(p, u, v), (p, v, w), (p, u, w)]
    outer = ("b", "c", "d'")
    inner = [f for f in faces if set(f) != set(outer)]
    return outer, inner


@dataclass
class ClaimsReport:
    core_colorings: list = field(default_factory=list)
    claim1: bool = False
    claim2: bool = False
    zero_cases: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.claim1 and self.claim2


def verify_claims(g: SignedGraph, lists: Mapping, core: Sequence = FIGURE2_CORE) -> ClaimsReport:
    """Exhaustively check both claims over proper list colourings of the core clique.

    Claim 1: every such colouring uses 0 somewhere.  Claim 2: when
    ``phi(x) == 0`` the colours on the neighbours of ``x'`` are exactly ``-L(x')``.
    """
    core = list(core)
    sub_edges = [(g.vertices[i], g.vertices[j], s) for i, j, s in g.edges
                 if g.vertices[i] in core and g.vertices[j] in core]
    sub = SignedGraph.from_edges(core, sub_edges)
    report = ClaimsReport()
    choices = [sorted(lists[x]) for x in core]

    def rec(i, acc):
        if i == len(core):
            phi = dict(zip(core, acc))
            if is_proper(sub, phi):
                report.core_colorings.append(phi)
            return
        for c in choices[i]:
            rec(i + 1, acc + [c])

    rec(0, [])
    report.claim1 = bool(report.core_colorings)
    report.claim2 = True
    for phi in report.core_colorings:
        zeros = [x for x in core if phi[x] == 0]
        if not zeros:
            report.claim1 = False
            report.failures.append(("claim1", phi))
        for x in zeros:
            xp = _prime(x)
            nbrs = [g.vertices[j] for j in g.neighbors(g.index[xp])]
            seen = {phi[y] for y in nbrs}
            want = {-c for c in lists[xp]}
            report.zero_cases.setdefault(x, []).append(phi)
            if seen != want:
                report.claim2 = False
                report.failures.append(("claim2", x, phi))
    return report


# --- bounded refutation search -------------------------------------------

@dataclass(frozen=True)
class RefutationResult:
    lists: dict | None
    steps: int

    @property
    def found(self) -> bool:
        return self.lists is not None


def _max_independent_set(g: SignedGraph) -> list:
    n = g.n
    nbr = [0] * n
    for i, j, _ in g.edges:
        nbr[i] |= 1 << j
        nbr[j] |= 1 << i
    if n > 20:
        chosen, blocked = [], 0
        for v in sorted(range(n), key=g.degree):
            if not blocked >> v & 1:
                chosen.append(v)
                blocked |= nbr[v] | 1 << v
        return sorted(chosen)
    best = []

    def grow(v, chosen, blocked):
        nonlocal best
        if len(chosen) + (n - v) <= len(best):
            return
        if v == n:
            best = list(chosen)
            return
        if not blocked >> v & 1:
            chosen.append(v)
            grow(v + 1, chosen, blocked | nbr[v])
            chosen.pop()
        grow(v + 1, chosen, blocked)

    grow(0, [], 0)
    return best


def refute_choosability(g: SignedGraph, k: int, m: int, cap: int | None = None) -> RefutationResult:
    """Search for a k-list assignment from ``{-m..m}`` with no proper colouring.

    A ``None`` result means nothing was found in the bounded palette; it
    says nothing about k-choosability over all integers.

    Lists are fixed first on the vertices outside a maximum independent set,
    tracking their proper colourings.  The independent vertices then only need
    to block every surviving colouring: vertex ``v`` blocks ``phi`` exactly when
    its list lies inside the colours forbidden by its neighbours under ``phi``.
    Since negating a list assignment preserves colourability, the first list
    is taken up to negation.
    """
    if k < 1 or m < 0:
        raise InvalidArgumentError("need k >= 1 and m >= 0")
    colors = list(range(-m, m + 1))
    if k > len(colors):
        raise InvalidArgumentError(f"no {k}-subsets of a {len(colors)}-colour palette")
    budget = _Budget(cap)
    indep = _max_independent_set(g)
    in_indep = set(indep)
    core = [v for v in range(g.n) if v not in in_indep]
    back = [[] for _ in range(g.n)]  # core neighbours earlier in core order
    pos = {v: t for t, v in enumerate(core)}
    for i, j, s in g.edges:
        if i in pos and j in pos:
            a, b = (i, j) if pos[i] < pos[j] else (j, i)
            back[b].append((pos[a], s))
    indep_nbrs = {v: [(pos[w], g.sign(g.vertices[v], g.vertices[w])) for w in g.neighbors(v)]
                  for v in indep}
    subsets = [tuple(c) for c in combinations(colors, k)]
    first_subsets = [L for L in subsets if L <= tuple(sorted(-c for c in L))]
    filler = subsets[0]

    def forbidden(v, phi):
        return {s * phi[t] for t, s in indep_nbrs[v]}

    def cover(pending, remaining):
        if not pending:
            return {}
        budget.spend()
        phi0 = pending[0]
        for idx, v in enumerate(remaining):
            F = sorted(c for c in forbidden(v, phi0) if -m <= c <= m)
            for L in combinations(F, k):
                Ls = set(L)
                rest = [phi for phi in pending if not Ls <= forbidden(v, phi)]
                sub = cover(rest, remaining[:idx] + remaining[idx + 1:])
                if sub is not None:
                    sub[v] = L
                    return sub
        return None

    chosen = []

    def search(t, colorings):
        if not colorings:
            return True, {}
        if t == len(core):
            res = cover(colorings, list(indep))
            return (res is not None), (res or {})
        v = core[t]
        for L in (first_subsets if t == 0 else subsets):
            budget.spend(len(colorings))
            nxt = [phi + (c,) for phi in colorings for c in L
                   if all(c != s * phi[a] for a, s in back[v])]
            chosen.append(L)
            ok, extra = search(t + 1, nxt)
            if ok:
                return True, extra
            chosen.pop()
        return False, {}

    ok, indep_lists = search(0, [()])
    if not ok:
        return RefutationResult(None, budget.used)
    lists = {}
    for t, v in enumerate(core):
        lists[g.vertices[v]] = chosen[t] if t < len(chosen) else filler
    for v in indep:
        lists[g.vertices[v]] = indep_lists.get(v, filler)
    if list_color(g, lists, cap=cap).colorable:
        raise InternalError("refutation candidate turned out to be colourable")
    return RefutationResult(lists, budget.used)


def read_lists(text: str) -> dict:
    """Parse ``name: c1,c2,...`` lines."""
    out = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise InvalidArgumentError(f"line {lineno}: expected 'name: c1,c2,...'")
        name, rest = line.rsplit(":", 1)
        name = name.strip()
        if name in out:
            raise InvalidArgumentError(f"line {lineno}: duplicate list for {name!r}")
        try:
            out[name] = tuple(int(c) for c in rest.split(",") if c.strip())
        except ValueError:
            raise InvalidArgumentError(f"line {lineno}: colours must be integers") from None
    return out


def write_lists(lists: Mapping, order: Sequence | None = None) -> str:
    names = list(order) if order is not None else list(lists)
    return "".join(f"{v}: {','.join(str(c) for c in lists[v])}\n" for v in names)
