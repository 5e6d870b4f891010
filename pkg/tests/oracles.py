"""Brute-force reference computations used as independent oracles.

None of these share code paths with the library beyond reading a graph's
vertex and edge tuples.
"""
from collections import Counter
from fractions import Fraction
from itertools import combinations, product


def brute_expand(g):
    """Expand the product term by term over all 2^|E| factor choices."""
    terms = Counter()
    n = g.n
    for choice in product((0, 1), repeat=g.m):
        mono = [0] * n
        coef = 1
        for (i, j, s), c in zip(g.edges, choice):
            if c == 0:
                mono[i] += 1
            else:
                mono[j] += 1
                coef *= -s
        terms[tuple(mono)] += coef
    return {k: v for k, v in terms.items() if v}


def brute_at_poly(g):
    terms = brute_expand(g)
    return 1 + min(max(m, default=0) for m in terms)


def all_orientations(g):
    """(mask, outdegrees, decreasing count) for every mask, bit set = backwards."""
    for mask in range(1 << g.m):
        out = [0] * g.n
        dec = 0
        for k, (i, j, s) in enumerate(g.edges):
            if mask >> k & 1:
                out[j] += 1
                dec += s == 1
            else:
                out[i] += 1
        yield mask, tuple(out), dec


def brute_eulerian(g, mask):
    """All edge subsets of orientation ``mask`` with in = out everywhere (no pruning)."""
    arcs = [((j, i) if mask >> k & 1 else (i, j)) for k, (i, j, _) in enumerate(g.edges)]
    found = []
    for sub in range(1 << g.m):
        bal = [0] * g.n
        for k, (t, h) in enumerate(arcs):
            if sub >> k & 1:
                bal[t] += 1
                bal[h] -= 1
        if not any(bal):
            found.append(sub)
    return found


def brute_imbalance(g, mask):
    even = odd = 0
    for sub in brute_eulerian(g, mask):
        pos = sum(1 for k, e in enumerate(g.edges) if sub >> k & 1 and e[2] == 1)
        if pos % 2:
            odd += 1
        else:
            even += 1
    return even, odd


def brute_at_orient(g):
    best = None
    for mask, out, _ in all_orientations(g):
        ev, od = brute_imbalance(g, mask)
        if ev != od:
            k = max(out, default=0) + 1
            best = k if best is None else min(best, k)
    return best


def brute_mad(g):
    best = Fraction(0)
    idx = range(g.n)
    for r in range(1, g.n + 1):
        for sub in combinations(idx, r):
            s = set(sub)
            e = sum(1 for i, j, _ in g.edges if i in s and j in s)
            best = max(best, Fraction(2 * e, r))
    return best


def proper(g, phi):
    return all(phi[i] != s * phi[j] for i, j, s in g.edges)


def brute_colorings(g, options):
    """All proper colourings with ``phi[i]`` from ``options[i]`` by full product scan."""
    return [phi for phi in product(*options) if proper(g, phi)]


def brute_chromatic(g):
    k = 1
    while True:
        half = k // 2
        pal = ([0] if k % 2 else []) + [c for x in range(1, half + 1) for c in (x, -x)]
        if brute_colorings(g, [pal] * g.n):
            return k
        k += 1


def is_balanced_by_cycles(g):
    """Antibalanced iff every cycle has an even number of positive edges; scan edge subsets."""
    for r in range(3, g.m + 1):
        for sub in combinations(range(g.m), r):
            deg = Counter()
            for k in sub:
                i, j, _ = g.edges[k]
                deg[i] += 1
                deg[j] += 1
            if any(d != 2 for d in deg.values()):
                continue
            # connected 2-regular edge set is a cycle
            verts = list(deg)
            adj = {v: [] for v in verts}
            for k in sub:
                i, j, _ = g.edges[k]
                adj[i].append(j)
                adj[j].append(i)
            seen, stack = {verts[0]}, [verts[0]]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) != len(verts):
                continue
            if sum(1 for k in sub if g.edges[k][2] == 1) % 2:
                return False
    return True
