"""Exact exponential-time reference routines for strong cliques.

Everything here works by exhaustive enumeration (Bron-Kerbosch with pivoting
over bitsets, exact colouring by backtracking) and is intended for graphs of
a few dozen vertices at most. The polynomial solvers in ``solvers`` are
checked against these.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import NotACliqueError, StrongCliqueError
from .graph import Graph, VertexSet, complement, iter_bits, line_graph, lowest, members, to_mask


# -- enumeration ---------------------------------------------------------------

def _bron_kerbosch(adj: Sequence[int], p: int, r: int = 0, x: int = 0) -> Iterator[int]:
    """Maximal cliques (as masks) of the graph ``adj`` that extend ``r`` inside ``p``."""
    if not p and not x:
        yield r
        return
    # Tomita pivot: the vertex of p|x with most neighbours in p
    pivot = max(iter_bits(p | x), key=lambda u: (adj[u] & p).bit_count())
    for v in iter_bits(p & ~adj[pivot]):
        bit = 1 << v
        yield from _bron_kerbosch(adj, p & adj[v], r | bit, x & adj[v])
        p &= ~bit
        x |= bit


def _complement_adj(g: Graph) -> list[int]:
    full = g.full
    return [full & ~a & ~(1 << v) for v, a in enumerate(g.adj)]


def _sorted_sets(masks: Iterator[int]) -> list[VertexSet]:
    return sorted(members(m) for m in masks)


def maximal_cliques(g: Graph) -> list[VertexSet]:
    """All inclusion-maximal cliques, in lexicographic order (none when n = 0)."""
    if g.n == 0:
        return []
    return _sorted_sets(_bron_kerbosch(g.adj, g.full))


def maximal_independent_sets(g: Graph) -> list[VertexSet]:
    """All inclusion-maximal independent sets, in lexicographic order.

    The graph with no vertices has exactly one: the empty set.
    """
    if g.n == 0:
        return [()]
    return _sorted_sets(_bron_kerbosch(_complement_adj(g), g.full))


def maximal_cliques_containing(g: Graph, clique: int) -> Iterator[int]:
    """Maximal cliques (masks) that contain the clique ``clique``; none when n = 0."""
    return (c for c in _bron_kerbosch(g.adj, g.common_neighbors(clique), clique) if c)


def clique_number(g: Graph) -> int:
    best = 0

    def grow(p: int, size: int) -> None:
        nonlocal best
        if not p:
            best = max(best, size)
            return
        while p:
            if size + p.bit_count() <= best:
                return
            v = lowest(p)
            p &= ~(1 << v)
            grow(p & g.adj[v], size + 1)

    grow(g.full, 0)
    return best


def max_clique(g: Graph) -> VertexSet:
    return max(maximal_cliques(g), key=len, default=())


# -- domination primitives ---------------------------------------------------------

def require_clique(g: Graph, clique: Sequence[int], allow_empty: bool = True) -> int:
    vs = set(clique)
    for v in vs:
        if not 0 <= v < g.n:
            raise StrongCliqueError(f"vertex {v} is not in the graph (n={g.n})")
    if not vs and not allow_empty:
        raise StrongCliqueError("the empty set is not a valid clique here")
    pair = g.non_adjacent_pair(vs)
    if pair is not None:
        raise NotACliqueError(pair)
    return to_mask(vs)


def extend_independent(g: Graph, start: int, forbidden: int = 0) -> int:
    """Greedily grow independent set ``start`` to a maximal one, lowest ids first.

    Vertices in ``forbidden`` are skipped; the result is maximal in ``g`` only
    when every forbidden vertex is already dominated by ``start``.
    """
    blocked = start | forbidden
    for v in iter_bits(start):
        blocked |= g.adj[v]
    result = start
    free = g.full & ~blocked
    while free:
        v = lowest(free)
        result |= 1 << v
        free &= ~(g.adj[v] | 1 << v)
    return result


def dominating_independent_set(g: Graph, clique: int) -> int | None:
    """An independent set outside ``clique`` that dominates it, or None.

    Branches on the first undominated clique vertex; each chosen vertex must
    privately cover something, so depth is at most ``|clique|``.
    """
    outside = g.full & ~clique

    def search(chosen: int, dominated: int, allowed: int) -> int | None:
        todo = clique & ~dominated
        if not todo:
            return chosen
        c = lowest(todo)
        for w in iter_bits(g.adj[c] & allowed):
            found = search(chosen | 1 << w, dominated | g.adj[w], allowed & ~g.adj[w] & ~(1 << w))
            if found is not None:
                return found
            allowed &= ~(1 << w)
        return None

    return search(0, 0, outside)


def disjoint_maximal_independent_set(g: Graph, clique: int) -> int | None:
    """A maximal independent set of ``g`` missing ``clique``, or None.

    Searches for an independent set dominating the clique from outside and
    grows it; any maximal independent set missing the clique is such a set.
    """
    dom = dominating_independent_set(g, clique)
    return None if dom is None else extend_independent(g, dom, forbidden=clique)


def disjoint_mis_by_enumeration(g: Graph, clique: int) -> int | None:
    """Same question answered by scanning every maximal independent set."""
    rest = g.full & ~clique
    if not rest:
        return None
    comp = _complement_adj(g)
    for mis in _bron_kerbosch(comp, rest):
        covered = 0
        for v in iter_bits(mis):
            covered |= g.adj[v]
        if clique & ~covered == 0:
            return mis
    return None


@dataclass(frozen=True)
class StrongCliqueWitness:
    verdict: bool
    witness: VertexSet  # maximal independent set disjoint from the clique when verdict is False


def is_strong_clique(g: Graph, clique: Sequence[int]) -> StrongCliqueWitness:
    mask = require_clique(g, clique, allow_empty=False)
    mis = disjoint_maximal_independent_set(g, mask)
    if mis is None:
        return StrongCliqueWitness(True, ())
    return StrongCliqueWitness(False, members(mis))


def is_strong_mask(g: Graph, clique: int) -> bool:
    return disjoint_maximal_independent_set(g, clique) is None


def strong_cliques_all(g: Graph) -> list[VertexSet]:
    return [c for c in maximal_cliques(g) if is_strong_mask(g, to_mask(c))]


def strong_cliques_by_definition(g: Graph) -> list[VertexSet]:
    """Maximal cliques meeting every enumerated maximal independent set."""
    mis = [to_mask(s) for s in maximal_independent_sets(g)]
    return [c for c in maximal_cliques(g) if all(to_mask(c) & m for m in mis)]


def extends_to_strong(g: Graph, clique: Sequence[int]) -> VertexSet | None:
    """Oracle for clique extension: a strong maximal clique containing ``clique``."""
    mask = require_clique(g, clique)
    found = []
    for cand in maximal_cliques_containing(g, mask):
        if is_strong_mask(g, cand):
            found.append(members(cand))
    return min(found) if found else None


# -- colouring / clique cover ----------------------------------------------------

def _colorable(g: Graph, order: list[int], k: int) -> list[int] | None:
    classes = [0] * k
    color = [-1] * g.n

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for c in range(min(used + 1, k)):
            if classes[c] & g.adj[v]:
                continue
            classes[c] |= 1 << v
            color[v] = c
            if place(i + 1, max(used, c + 1)):
                return True
            classes[c] &= ~(1 << v)
        color[v] = -1
        return False

    return color if place(0, 0) else None


def chromatic_number(g: Graph) -> tuple[int, list[int]]:
    """Exact chromatic number with a witness colouring.

    Iterative deepening on k from the clique number, colouring vertices in
    largest-degree-first order.
    """
    if g.n == 0:
        return 0, []
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    k = max(1, clique_number(g))
    while True:
        coloring = _colorable(g, order, k)
        if coloring is not None:
            return k, coloring
        k += 1


def clique_cover(g: Graph) -> tuple[int, list[VertexSet]]:
    """theta(G) and a minimum partition into cliques (colour classes of the complement)."""
    k, coloring = chromatic_number(complement(g))
    parts = [tuple(v for v in range(g.n) if coloring[v] == c) for c in range(k)]
    return k, sorted(parts)


def chromatic_index_exact(g: Graph) -> int:
    return chromatic_number(line_graph(g).graph)[0]


# -- invariants and localizability ---------------------------------------------------

@dataclass(frozen=True)
class InvariantsReport:
    alpha: int
    idom: int
    theta: int
    omega: int
    well_covered: bool
    semi_perfect: bool


def invariants_report(g: Graph) -> InvariantsReport:
    sizes = [len(s) for s in maximal_independent_sets(g)] or [0]
    alpha, idom = max(sizes), min(sizes)
    theta = clique_cover(g)[0]
    return InvariantsReport(alpha, idom, theta, clique_number(g), idom == alpha, theta == alpha)


def _exact_cover(g: Graph, blocks: list[int]) -> list[int] | None:
    """First exact cover of V(g) by ``blocks``, branching on the lowest uncovered vertex."""
    containing: list[list[int]] = [[b for b in blocks if b >> v & 1] for v in range(g.n)]

    def search(covered: int, chosen: list[int]) -> list[int] | None:
        if covered == g.full:
            return list(chosen)
        v = lowest(g.full & ~covered)
        for b in containing[v]:
            if b & covered:
                continue
            chosen.append(b)
            found = search(covered | b, chosen)
            if found is not None:
                return found
            chosen.pop()
        return None

    return search(0, [])


def strong_clique_partition(g: Graph) -> list[VertexSet] | None:
    """Lexicographically first partition of V(g) into strong cliques, or None."""
    blocks = [to_mask(c) for c in strong_cliques_all(g)]
    cover = _exact_cover(g, blocks)
    return None if cover is None else [members(b) for b in cover]


def localizable_exact(g: Graph) -> tuple[bool, list[VertexSet] | None]:
    """Decide localizability by i(G) = theta(G); certify with a strong partition."""
    if g.n == 0:
        return True, []
    rep = invariants_report(g)
    decided = rep.idom == rep.theta
    partition = strong_clique_partition(g)
    if decided != (partition is not None):
        raise AssertionError(f"i=theta test and exact cover disagree on {g!r}")
    return decided, partition


def _clique_partitions(g: Graph, k: int) -> Iterator[list[int]]:
    """All partitions of V(g) into exactly ``k`` nonempty cliques."""

    def cliques_within(p: int, base: int) -> Iterator[int]:
        yield base
        while p:
            v = lowest(p)
            p &= ~(1 << v)
            yield from cliques_within(p & g.adj[v], base | 1 << v)

    def search(remaining: int, parts: list[int]) -> Iterator[list[int]]:
        if not remaining:
            if len(parts) == k:
                yield list(parts)
            return
        if len(parts) == k:
            return
        v = lowest(remaining)
        for part in cliques_within(remaining & g.adj[v], 1 << v):
            parts.append(part)
            yield from search(remaining & ~part, parts)
            parts.pop()

    yield from search(g.full, [])


def localizability_statements(g: Graph) -> dict[str, bool]:
    """The five equivalent localizability statements, each by its own route.

    a: V partitions into strong cliques (exact cover over strong cliques)
    b: some alpha-clique cover has every part strong
    c: an alpha-clique cover exists and every part of every one is strong
    d: well-covered and semi-perfect
    e: i(G) = theta(G)
    """
    mis = maximal_independent_sets(g)
    sizes = [len(s) for s in mis] or [0]
    alpha, idom = max(sizes), min(sizes)
    theta = clique_cover(g)[0]

    a = strong_clique_partition(g) is not None

    covers = list(_clique_partitions(g, alpha))
    mis_masks = [to_mask(s) for s in mis]

    def strong(part: int) -> bool:
        return all(part & m for m in mis_masks)

    all_strong = [all(strong(p) for p in cover) for cover in covers]
    b = any(all_strong)
    c = bool(covers) and all(all_strong)
    d = idom == alpha and theta == alpha
    e = idom == theta
    return {"a": a, "b": b, "c": c, "d": d, "e": e}
