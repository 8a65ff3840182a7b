"""Graph corpora for exhaustive and randomized verification runs."""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterator

from .errors import StrongCliqueError
from .graph import Graph, build, is_connected
from .iso import canonical_form


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every graph on vertex set {0..n-1}: 2^(n choose 2) of them."""
    pairs = [(u, v) for v in range(n) for u in range(v)]
    for code in range(1 << len(pairs)):
        adj = [0] * n
        i = 0
        c = code
        while c:
            if c & 1:
                u, v = pairs[i]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            c >>= 1
            i += 1
        yield Graph(n, adj)


def _extend(g: Graph, nbrs: int) -> Graph:
    n = g.n
    adj = list(g.adj) + [nbrs]
    for v in range(n):
        if nbrs >> v & 1:
            adj[v] |= 1 << n
    return Graph(n + 1, adj)


@lru_cache(maxsize=None)
def unlabeled_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class on n vertices."""
    if n == 0:
        return (Graph(0, []),)
    seen: dict = {}
    for g in unlabeled_graphs(n - 1):
        for nbrs in range(1 << (n - 1)):
            h = _extend(g, nbrs)
            seen.setdefault(canonical_form(h), h)
    return tuple(seen[k] for k in sorted(seen))


def connected_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in unlabeled_graphs(n) if is_connected(g))


@lru_cache(maxsize=None)
def connected_subcubic_graphs(n: int) -> tuple[Graph, ...]:
    """Connected graphs with max degree <= 3 on n vertices, up to isomorphism.

    Every connected graph has a vertex whose removal keeps it connected, so
    growing by one vertex attached to 1..3 unsaturated vertices reaches all.
    """
    if n <= 1:
        return (Graph(n, [0] * n),)
    seen: dict = {}
    for g in connected_subcubic_graphs(n - 1):
        open_vs = [v for v in range(g.n) if g.degree(v) < 3]
        for nbrs in range(1, 1 << g.n):
            if nbrs.bit_count() > 3 or any(nbrs >> v & 1 and v not in open_vs for v in range(g.n)):
                continue
            h = _extend(g, nbrs)
            seen.setdefault(canonical_form(h), h)
    return tuple(seen[k] for k in sorted(seen))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return build(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_cubic_graph(n: int, rng: random.Random, connected: bool = True, tries: int = 10000) -> Graph:
    """Uniform-ish simple cubic graph via the pairing model with rejection."""
    if n % 2 or n < 4:
        raise StrongCliqueError("cubic graphs need an even number of vertices, at least 4")
    for _ in range(tries):
        points = [v for v in range(n) for _ in range(3)]
        rng.shuffle(points)
        edges = set()
        ok = True
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            e = (min(u, v), max(u, v))
            if u == v or e in edges:
                ok = False
                break
            edges.add(e)
        if not ok:
            continue
        g = build(n, sorted(edges))
        if not connected or is_connected(g):
            return g
    raise StrongCliqueError(f"no simple cubic graph on {n} vertices after {tries} pairings")


def root_graphs(max_n: int = 6) -> list[Graph]:
    """Connected graphs with at least one edge on 2..max_n vertices (so no isolated vertices)."""
    return [g for n in range(2, max_n + 1) for g in connected_graphs(n)]
