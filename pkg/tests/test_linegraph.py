from functools import lru_cache

import pytest

import brute
from strongclique.corpus import root_graphs, unlabeled_graphs
from strongclique.errors import NotACliqueError, StrongCliqueError
from strongclique.graph import build, complement, cycle_graph, line_graph, named, path_graph
from strongclique.iso import are_isomorphic, canonical_form
from strongclique.linegraph import (
    NotLineGraph, RootGraphMap, classify_edge_set, edge_families, edges_to_vertices, maximal_matchings,
    recognize_line_graph, translate_clique,
)
from strongclique.oracle import maximal_cliques, maximal_independent_sets


@lru_cache(maxsize=None)
def line_graph_forms(max_edges):
    """Canonical forms of L(H) for every H without isolated vertices and at most max_edges edges,
    grown one edge at a time (new edge between old vertices, old-new, or new-new)."""
    level = {canonical_form(build(0, [])): build(0, [])}
    forms = {canonical_form(build(0, []))}
    for _ in range(max_edges):
        nxt = {}
        for h in level.values():
            n, es = h.n, list(h.edges())
            cands = [(u, v) for u in range(n) for v in range(u + 1, n) if not h.has_edge(u, v)]
            cands += [(u, n) for u in range(n)] + [(n, n + 1)]
            for u, v in cands:
                g = build(max(n, v + 1), es + [(u, v)])
                nxt.setdefault(canonical_form(g), g)
        level = nxt
        forms |= {canonical_form(line_graph(h).graph) for h in level.values()}
    return forms


def test_recognition_examples():
    r = recognize_line_graph(path_graph(3))
    assert isinstance(r, RootGraphMap) and are_isomorphic(r.root, path_graph(4))
    r = recognize_line_graph(named("complete", 3))
    assert isinstance(r, RootGraphMap) and r.root.n in (3, 4) and r.verify(named("complete", 3))
    r = recognize_line_graph(named("complete_bipartite", 1, 3))
    assert isinstance(r, NotLineGraph) and sorted(r.obstruction) == [0, 1, 2, 3]


def test_root_map_validation():
    with pytest.raises(AssertionError):
        RootGraphMap(path_graph(3), ((0, 1), (0, 1)))
    with pytest.raises(AssertionError):
        RootGraphMap(build(3, [(0, 1)]), ((0, 1),))


@pytest.mark.parametrize("h", root_graphs(6), ids=lambda h: str(h.edges()))
def test_round_trip_over_roots(h):
    lg = line_graph(h).graph
    r = recognize_line_graph(lg)
    assert isinstance(r, RootGraphMap) and r.verify(lg)
    assert are_isomorphic(line_graph(r.root).graph, lg)
    if not {canonical_form(h)} & {canonical_form(named("complete", 3)),
                                  canonical_form(named("complete_bipartite", 1, 3))}:
        assert are_isomorphic(r.root, h)


@pytest.mark.parametrize("n", range(0, 7))
def test_recognition_matches_enumerated_line_graphs(n):
    forms = line_graph_forms(6)
    for g in unlabeled_graphs(n):
        r = recognize_line_graph(g)
        assert isinstance(r, RootGraphMap) == (canonical_form(g) in forms)
        if isinstance(r, RootGraphMap):
            assert r.verify(g)
        else:
            sub, _ = g.induced_subgraph(r.obstruction)
            assert isinstance(recognize_line_graph(sub), NotLineGraph)
            for v in range(sub.n):
                smaller, _ = sub.induced_subgraph([w for w in range(sub.n) if w != v])
                assert isinstance(recognize_line_graph(smaller), RootGraphMap)


def test_recognition_of_larger_line_graphs():
    for h in (named("petersen"), named("complete", 6), named("F_n", 3), cycle_graph(11)):
        lg = line_graph(h).graph
        r = recognize_line_graph(lg)
        assert isinstance(r, RootGraphMap) and r.verify(lg) and are_isomorphic(r.root, h)
    assert isinstance(recognize_line_graph(complement(cycle_graph(7))), NotLineGraph)


def test_edge_families_examples():
    fam = edge_families(named("complete", 3))
    assert fam.maximal == {frozenset({(0, 1), (0, 2), (1, 2)})}
    assert len(fam.triangles) == 1
    fam = edge_families(named("complete_bipartite", 1, 3))
    assert fam.maximal == {frozenset({(0, 1), (0, 2), (0, 3)})} and not fam.triangles
    fam = edge_families(cycle_graph(4))
    assert fam.maximal == {frozenset(fam.stars[v]) for v in range(4)} and len(fam.maximal) == 4
    with pytest.raises(StrongCliqueError):
        edge_families(build(3, [(0, 1)]))


def test_classify_edge_set():
    assert classify_edge_set([(0, 1), (1, 2), (0, 2)]).tag == "triangle"
    t = classify_edge_set([(3, 1), (1, 2)])
    assert t.tag == "star" and t.center == 1
    assert classify_edge_set([(0, 1), (2, 3)]).tag == "invalid"
    assert classify_edge_set([(0, 1), (1, 2), (2, 3)]).tag == "invalid"


def test_translate_clique():
    h = named("diamond")
    lg = line_graph(h)
    r = recognize_line_graph(lg.graph)
    star = edges_to_vertices(r, [e for e in r.root.edges() if 0 in e])
    assert translate_clique(r, lg.graph, star).tag == "star"
    tags = sorted(translate_clique(r, lg.graph, c).tag for c in maximal_cliques(lg.graph))
    assert tags == ["star", "star", "triangle", "triangle"]
    with pytest.raises(NotACliqueError):
        translate_clique(r, lg.graph, [v for v in range(lg.graph.n)])


def _edge_sets(lg, cliques):
    return {frozenset(lg.edges[v] for v in c) for c in cliques}


@pytest.mark.parametrize("h", root_graphs(6), ids=lambda h: str(h.edges()))
def test_cliques_and_independent_sets_of_line_graphs(h):
    lg = line_graph(h)
    fam = edge_families(h)
    assert _edge_sets(lg, maximal_cliques(lg.graph)) == set(fam.maximal)
    assert _edge_sets(lg, maximal_independent_sets(lg.graph)) == set(maximal_matchings(h))
    # complement swaps the two
    co = complement(lg.graph)
    assert _edge_sets(lg, maximal_independent_sets(co)) == set(fam.maximal)
    well_covered = len({len(c) for c in brute.maximal_independent_sets(co.n, co.edges())}) == 1
    assert well_covered == (len({len(s) for s in fam.maximal}) == 1)


def test_maximal_matchings_match_brute_force():
    for h in root_graphs(5):
        expect = {frozenset(map(tuple, m)) for m in brute.matchings(h.edges())
                  if all(set(e) & {x for f in m for x in f} for e in h.edges())}
        assert set(maximal_matchings(h)) == expect


def test_whitney_pair_has_same_line_graph():
    a = line_graph(named("complete", 3)).graph
    b = line_graph(named("complete_bipartite", 1, 3)).graph
    assert are_isomorphic(a, b)
