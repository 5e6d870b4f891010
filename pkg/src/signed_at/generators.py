"""Small graph families and a random near-triangulation generator."""
from __future__ import annotations

import random
from itertools import combinations

from .core import SignedGraph
from .triangulation import NearTriangulation, face_edges


def complete_graph(n: int, sign: int = 1, prefix: str = "v") -> SignedGraph:
    verts = [f"{prefix}{i}" for i in range(1, n + 1)]
    return SignedGraph.from_edges(verts, [(u, v, sign) for u, v in combinations(verts, 2)])


def cycle_graph(n: int, sign: int = 1, prefix: str = "v") -> SignedGraph:
    verts = [f"{prefix}{i}" for i in range(1, n + 1)]
    return SignedGraph.from_edges(verts, [(verts[i], verts[(i + 1) % n], sign) for i in range(n)])


def complete_bipartite(p: int, q: int, sign: int = 1) -> SignedGraph:
    left = [f"a{i}" for i in range(1, p + 1)]
    right = [f"b{i}" for i in range(1, q + 1)]
    return SignedGraph.from_edges(left + right, [(u, v, sign) for u in left for v in right])


def edgeless(n: int) -> SignedGraph:
    return SignedGraph(tuple(f"v{i}" for i in range(1, n + 1)), ())


def random_signed_graph(n: int, max_edges: int, rng: random.Random, p: float = 0.5) -> SignedGraph:
    pairs = [pr for pr in combinations(range(n), 2) if rng.random() < p]
    rng.shuffle(pairs)
    pairs = pairs[:max_edges]
    verts = [f"v{i}" for i in range(1, n + 1)]
    return SignedGraph(tuple(verts), tuple((i, j, rng.choice((1, -1))) for i, j in pairs))


def random_signs(g: SignedGraph, rng: random.Random) -> SignedGraph:
    return g.with_signs([rng.choice((1, -1)) for _ in range(g.m)])


def triangle() -> NearTriangulation:
    g = SignedGraph.from_edges(["v1", "v2", "v3"], [("v1", "v2"), ("v2", "v3"), ("v1", "v3")])
    return NearTriangulation(g, ("v1", "v2", "v3"), (("v1", "v2", "v3"),))


def wheel(rim: int) -> NearTriangulation:
    """Hub ``u`` joined to an outer cycle ``v1..v_rim``."""
    outer = [f"v{i}" for i in range(1, rim + 1)]
    edges = [(outer[i], outer[(i + 1) % rim]) for i in range(rim)] + [(v, "u") for v in outer]
    g = SignedGraph.from_edges(outer + ["u"], edges)
    faces = [(outer[i], outer[(i + 1) % rim], "u") for i in range(rim)]
    return NearTriangulation(g, tuple(outer), tuple(faces))


def _triangulate_polygon(poly: list, rng: random.Random, out: list) -> None:
    if len(poly) == 3:
        out.append(tuple(poly))
        return
    a = rng.randrange(1, len(poly) - 1)
    out.append((poly[0], poly[a], poly[-1]))
    if a >= 2:
        _triangulate_polygon(poly[: a + 1], rng, out)
    if len(poly) - a >= 3:
        _triangulate_polygon(poly[a:], rng, out)


def random_near_triangulation(k: int, interior: int, rng: random.Random,
                              flips: int | None = None, shuffle: bool = True) -> NearTriangulation:
    """Random near triangulation with outer cycle ``v1..vk`` and interior ``u1..``.

    The polygon is triangulated at random, interior vertices are dropped into
    random faces, then random flips of non-outer edges mix the result.  With
    ``shuffle`` the vertex ordering (and edge order) is randomised as well.
    """
    if k < 3:
        raise ValueError("outer cycle needs at least 3 vertices")
    outer = [f"v{i}" for i in range(1, k + 1)]
    faces: list = []
    _triangulate_polygon(outer, rng, faces)
    for t in range(1, interior + 1):
        u = f"u{t}"
        a, b, c = faces.pop(rng.randrange(len(faces)))
        faces += [(a, b, u), (b, c, u), (a, c, u)]
    outer_edges = set(face_edges(outer))
    for _ in range(k + 2 * interior if flips is None else flips):
        by_edge: dict = {}
        for f in faces:
            for e in face_edges(f):
                by_edge.setdefault(e, []).append(f)
        adjacent = set(by_edge)
        inner = sorted((e for e in by_edge if e not in outer_edges), key=lambda e: sorted(e))
        if not inner:
            break
        e = inner[rng.randrange(len(inner))]
        f1, f2 = by_edge[e]
        (c,) = set(f1) - e
        (d,) = set(f2) - e
        if frozenset((c, d)) in adjacent:
            continue
        a, b = sorted(e)
        faces.remove(f1)
        faces.remove(f2)
        faces += [(a, c, d), (b, c, d)]
    verts = outer + [f"u{t}" for t in range(1, interior + 1)]
    edges = sorted({e for f in faces for e in face_edges(f)}, key=lambda e: sorted(e))
    edges = [tuple(sorted(e)) for e in edges]
    if shuffle:
        rng.shuffle(verts)
        rng.shuffle(edges)
    g = SignedGraph.from_edges(verts, edges)
    return NearTriangulation(g, tuple(outer), tuple(faces))
