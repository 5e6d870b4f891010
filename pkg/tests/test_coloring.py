import random

import pytest

import oracles
from signed_at.coloring import (chromatic_number, figure2_embedding, figure2_instance, is_proper, list_color,
                                palette, read_lists, refute_choosability, verify_claims, write_lists)
from signed_at.core import SignedGraph
from signed_at.generators import complete_bipartite, complete_graph, cycle_graph, random_signed_graph
from signed_at.limits import InvalidArgumentError, ResourceLimitError
from signed_at.triangulation import NearTriangulation, validate


def test_palette_order():
    assert palette(1) == (0,)
    assert palette(4) == (1, -1, 2, -2)
    assert palette(5) == (0, 1, -1, 2, -2)
    with pytest.raises(InvalidArgumentError):
        palette(0)


def test_negative_edge_semantics():
    g = SignedGraph.from_edges("ab", [("a", "b", -1)])
    assert is_proper(g, {"a": 1, "b": 1})
    assert not is_proper(g, {"a": 0, "b": 0})
    assert not is_proper(g, {"a": 1, "b": -1})
    with pytest.raises(InvalidArgumentError):
        is_proper(g, {"a": 1})


def test_chromatic_matches_brute():
    rng = random.Random(51)
    for _ in range(60):
        g = random_signed_graph(rng.randint(1, 6), 10, rng, 0.6)
        res = chromatic_number(g)
        assert res.k == oracles.brute_chromatic(g)
        assert is_proper(g, res.coloring)
    assert chromatic_number(complete_graph(4, -1)).k == 2
    assert chromatic_number(complete_graph(4, 1)).k == 4
    assert chromatic_number(cycle_graph(3, 1)).k == 3


def test_list_color_matches_brute():
    rng = random.Random(52)
    for _ in range(80):
        g = random_signed_graph(rng.randint(1, 6), 10, rng, 0.7)
        lists = {v: rng.sample(range(-2, 3), rng.randint(1, 3)) for v in g.vertices}
        res = list_color(g, lists)
        brute = oracles.brute_colorings(g, [sorted(lists[v]) for v in g.vertices])
        assert res.colorable == bool(brute)
        if res.colorable:
            assert is_proper(g, res.coloring)
            assert all(res.coloring[v] in lists[v] for v in g.vertices)
            # first found in lexicographic order of sorted lists
            assert tuple(res.coloring[v] for v in g.vertices) == brute[0]
        else:
            assert res.exhausted == res.total


def test_list_color_errors():
    g = complete_graph(3, -1)
    with pytest.raises(InvalidArgumentError):
        list_color(g, {"v1": [0], "v2": [1]})
    with pytest.raises(InvalidArgumentError):
        list_color(g, {"v1": [0], "v2": [1], "v3": []})
    with pytest.raises(ResourceLimitError):
        list_color(g, {v: [0, 1, 2] for v in g.vertices}, cap=10)


def test_figure2_instance_shape():
    g, lists = figure2_instance()
    assert g.n == 8 and g.m == 18
    assert all(s == -1 for _, _, s in g.edges)
    assert all(len(L) == 3 for L in lists.values())
    outer, faces = figure2_embedding()
    assert len(faces) == 11
    assert validate(NearTriangulation(g, outer, faces)) is None


def test_figure2_not_list_colorable():
    g, lists = figure2_instance()
    res = list_color(g, lists)
    assert not res.colorable
    assert res.exhausted == res.total == 3 ** 8


def test_figure2_claims():
    g, lists = figure2_instance()
    rep = verify_claims(g, lists)
    assert rep.ok and not rep.failures
    assert rep.core_colorings
    assert all(any(phi[x] == 0 for x in "abcd") for phi in rep.core_colorings)
    assert set(rep.zero_cases) <= set("abcd")


def test_claims_detect_broken_lists():
    g, lists = figure2_instance()
    lists = dict(lists)
    lists["a'"] = (0, -1, 1)
    rep = verify_claims(g, lists)
    assert not rep.claim2 and rep.failures


def test_refutation_k24():
    g = complete_bipartite(2, 4)
    res = refute_choosability(g, 2, 2)
    assert res.found
    assert all(len(L) == 2 and all(-2 <= c <= 2 for c in L) for L in res.lists.values())
    assert not oracles.brute_colorings(g, [sorted(res.lists[v]) for v in g.vertices])


def test_refutation_figure2():
    g, _ = figure2_instance()
    res = refute_choosability(g, 3, 2)
    assert res.found
    assert not oracles.brute_colorings(g, [sorted(res.lists[v]) for v in g.vertices])


def test_no_refutation_when_choosable():
    # an even cycle is 2-choosable, so the bounded search must come back empty
    res = refute_choosability(cycle_graph(4, -1), 2, 2)
    assert not res.found and res.steps > 0
    with pytest.raises(InvalidArgumentError):
        refute_choosability(cycle_graph(4), 6, 2)


def test_lists_round_trip():
    g, lists = figure2_instance()
    text = write_lists(lists, g.vertices)
    assert read_lists(text) == {v: tuple(lists[v]) for v in g.vertices}
    assert write_lists(read_lists(text), g.vertices) == text
    with pytest.raises(InvalidArgumentError):
        read_lists("a: 1,x\n")
    with pytest.raises(InvalidArgumentError):
        read_lists("a: 1\na: 2\n")
