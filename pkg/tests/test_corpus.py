import random

import pytest

from strongclique.corpus import (
    all_labeled_graphs, connected_graphs, connected_subcubic_graphs, random_cubic_graph, random_graph,
    root_graphs, unlabeled_graphs,
)
from strongclique.errors import StrongCliqueError
from strongclique.graph import connected_components
from strongclique.iso import canonical_form

# graphs and connected graphs on n vertices up to isomorphism (OEIS A000088, A001349)
GRAPH_COUNTS = [1, 1, 2, 4, 11, 34, 156, 1044]
CONNECTED_COUNTS = [1, 1, 1, 2, 6, 21, 112, 853]


def test_labeled_enumeration():
    assert sum(1 for _ in all_labeled_graphs(4)) == 64
    seen = {g.edges() for g in all_labeled_graphs(4)}
    assert len(seen) == 64


@pytest.mark.parametrize("n", range(0, 8))
def test_unlabeled_counts(n):
    gs = unlabeled_graphs(n)
    assert len(gs) == GRAPH_COUNTS[n]
    assert len({canonical_form(g) for g in gs}) == len(gs)
    assert len(connected_graphs(n)) == CONNECTED_COUNTS[n]


def test_unlabeled_classes_cover_labeled_graphs():
    forms = {canonical_form(g) for g in unlabeled_graphs(5)}
    assert {canonical_form(g) for g in all_labeled_graphs(5)} == forms


def test_subcubic_corpus_against_filter():
    for n in range(1, 8):
        expect = {canonical_form(g) for g in connected_graphs(n) if max(g.degrees(), default=0) <= 3}
        assert {canonical_form(g) for g in connected_subcubic_graphs(n)} == expect


def test_root_graphs():
    roots = root_graphs(6)
    assert len(roots) == sum(CONNECTED_COUNTS[2:7])
    assert all(min(g.degrees()) >= 1 for g in roots)


def test_random_generators():
    rng = random.Random(4)
    for n in (4, 6, 10, 14):
        g = random_cubic_graph(n, rng)
        assert set(g.degrees()) == {3} and len(connected_components(g)) == 1
        assert g.m == 3 * n // 2
    with pytest.raises(StrongCliqueError):
        random_cubic_graph(7, rng)
    a = random_graph(9, 0.4, random.Random(1))
    assert a == random_graph(9, 0.4, random.Random(1)) and a.n == 9
