import random

import pytest
from hypothesis import given, strategies as st

import brute
from conftest import graphs
from strongclique.errors import StrongCliqueError
from strongclique.graph import build, cycle_graph, named, path_graph
from strongclique.matching import (
    WeightedGraph, exists_matching_saturating, has_perfect_matching, is_matching, max_weight_matching,
    maximum_matching, saturating_matching,
)


def unit(g):
    return WeightedGraph(g, {e: 1 for e in g.edges()})


def test_unit_weight_examples():
    assert max_weight_matching(unit(named("complete", 3))).weight == 1
    assert max_weight_matching(unit(cycle_graph(4))).weight == 2
    assert max_weight_matching(unit(build(0, []))).weight == 0


def test_weighted_graph_validation():
    with pytest.raises(StrongCliqueError):
        WeightedGraph(path_graph(3), {(0, 2): 1})
    with pytest.raises(StrongCliqueError):
        WeightedGraph(path_graph(3), {(0, 1): -1})
    with pytest.raises(StrongCliqueError):
        WeightedGraph(path_graph(3), {(0, 1): 1.5})


def test_heavy_middle_edge_beats_two_light_ones():
    g = path_graph(4)
    r = max_weight_matching(WeightedGraph(g, {(0, 1): 2, (1, 2): 5, (2, 3): 2}))
    assert r.weight == 5 and r.edges == ((1, 2),)
    r = max_weight_matching(WeightedGraph(g, {(0, 1): 3, (1, 2): 5, (2, 3): 3}))
    assert r.weight == 6


@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_weight_matches_brute_force(g, rnd):
    weight = {e: rnd.randint(0, 5) for e in g.edges()}
    r = max_weight_matching(WeightedGraph(g, weight))
    assert is_matching(r.edges)
    assert r.weight == sum(weight[e] for e in r.edges)
    assert r.weight == brute.max_matching_weight(g.edges(), weight)


def test_perfect_matching_examples():
    assert has_perfect_matching(cycle_graph(4))[0]
    assert has_perfect_matching(cycle_graph(5)) == (False, None)
    ok, m = has_perfect_matching(named("petersen"))
    assert ok and is_matching(m) and sorted(v for e in m for v in e) == list(range(10))


@given(graphs(max_n=8))
def test_perfect_matching_matches_maximum_matching(g):
    ok, m = has_perfect_matching(g)
    size = len(maximum_matching(g))
    assert ok == (2 * size == g.n)
    assert size == max(len(x) for x in brute.matchings(g.edges()))
    if g.n % 2:
        assert not ok
    if ok:
        assert sorted(v for e in m for v in e) == list(range(g.n))


def test_saturating_examples():
    p4 = path_graph(4)
    assert exists_matching_saturating(p4, [1, 2])
    m = saturating_matching(p4, [1, 2])
    assert is_matching(m) and {1, 2} <= {v for e in m for v in e}
    claw = named("complete_bipartite", 1, 3)
    assert not exists_matching_saturating(claw, [1, 2, 3])
    # triangle 0,1,2 with pendants 3 at 0 and 4 at 1
    g = build(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)])
    tri = [(0, 1), (0, 2), (1, 2)]
    assert exists_matching_saturating(g, [0, 1, 2], forbidden=tri, threshold=2)
    assert not exists_matching_saturating(g, [0, 1, 2], forbidden=tri)


@given(graphs(max_n=7), st.data())
def test_saturating_matches_brute_force(g, data):
    targets = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    forbidden = data.draw(st.sets(st.sampled_from(g.edges()))) if g.m else set()
    threshold = data.draw(st.integers(0, len(targets)))
    allowed = [e for e in g.edges() if e not in forbidden]
    expect = any(len(targets & {v for e in m for v in e}) >= threshold for m in brute.matchings(allowed))
    got = saturating_matching(g, targets, forbidden, threshold)
    assert (got is not None) == expect
    if got is not None:
        assert is_matching(got) and not set(got) & forbidden
        assert len(targets & {v for e in got for v in e}) >= threshold


def test_dense_random_graphs_agree_with_brute_force():
    rng = random.Random(3)
    for _ in range(300):
        n = rng.randint(6, 8)
        g = build(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.7])
        weight = {e: rng.randint(0, 5) for e in g.edges()}
        assert max_weight_matching(WeightedGraph(g, weight)).weight == brute.max_matching_weight(g.edges(), weight)
