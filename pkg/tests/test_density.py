import random
from fractions import Fraction

import pytest

import oracles
from signed_at.core import SignedGraph
from signed_at.density import at_all_negative, bounded_outdegree_orientation, mad
from signed_at.generators import complete_bipartite, complete_graph, cycle_graph, random_signed_graph
from signed_at.limits import InvalidArgumentError, ResourceLimitError


def test_mad_values():
    assert mad(complete_graph(4)).mad == 3
    assert mad(cycle_graph(5)).mad == 2
    assert mad(complete_bipartite(2, 4)).mad == Fraction(8, 3)
    assert str(mad(complete_bipartite(2, 4))) == "8/3"
    assert mad(SignedGraph(("a",), ())).mad == 0


def test_mad_witness_attains_density():
    rng = random.Random(41)
    for _ in range(80):
        g = random_signed_graph(rng.randint(1, 8), 14, rng, 0.5)
        rep = mad(g)
        assert rep.mad == oracles.brute_mad(g)
        w = rep.witness
        inside = sum(1 for u, v, _ in g.named_edges() if u in w and v in w)
        assert Fraction(2 * inside, len(w)) == rep.mad


def test_orientation_within_bound():
    rng = random.Random(42)
    for _ in range(80):
        g = random_signed_graph(rng.randint(1, 8), 16, rng, 0.6)
        d = oracles.brute_mad(g)
        for p in range(0, 5):
            o = bounded_outdegree_orientation(g, p)
            assert (o is not None) == (d <= 2 * p)
            if o is not None:
                assert o.max_outdegree() <= p


def test_all_negative_formula_spots():
    assert at_all_negative(complete_graph(4, -1)).k == 3
    assert at_all_negative(cycle_graph(6, -1)).k == 2
    assert at_all_negative(complete_graph(5, -1)).k == 3
    assert at_all_negative(SignedGraph(("a", "b"), ())).k == 1
    assert bounded_outdegree_orientation(complete_graph(4), 1) is None


def test_input_checks():
    with pytest.raises(InvalidArgumentError):
        at_all_negative(complete_graph(3, 1))
    with pytest.raises(InvalidArgumentError):
        bounded_outdegree_orientation(complete_graph(3), -1)
    with pytest.raises(InvalidArgumentError):
        mad(SignedGraph((), ()))
    with pytest.raises(ResourceLimitError):
        mad(complete_graph(6), cap=5)
