"""Line-graph recognition with root reconstruction, and star/triangle edge families.

Recognition searches for a Krausz cover: a partition of the edges of G into
cliques with every vertex in at most two of them. Once one clique at a vertex
is fixed, the vertex's second clique is forced (it is the vertex plus all its
still-uncovered neighbours), so branching only happens at fresh vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import NotACliqueError, StrongCliqueError
from .graph import Edge, Graph, VertexSet, build, connected_components, iter_bits, lowest, to_mask

EdgeSet = frozenset  # frozenset[Edge]


def _norm(e: Sequence[int]) -> Edge:
    u, v = e
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class RootGraphMap:
    """``root`` is H with L(H) == G under ``to_edge`` (vertex v of G is edge to_edge[v])."""

    root: Graph
    to_edge: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if len(set(self.to_edge)) != len(self.to_edge) or len(self.to_edge) != self.root.m:
            raise AssertionError("to_edge is not a bijection onto E(root)")
        if any(d == 0 for d in self.root.degrees()):
            raise AssertionError("root has an isolated vertex")

    def to_vertex(self) -> dict[Edge, int]:
        return {e: v for v, e in enumerate(self.to_edge)}

    def verify(self, g: Graph) -> bool:
        if g.n != len(self.to_edge):
            return False
        for u in range(g.n):
            a, b = self.to_edge[u]
            for v in range(u + 1, g.n):
                c, d = self.to_edge[v]
                if g.has_edge(u, v) != bool({a, b} & {c, d}):
                    return False
        return True


@dataclass(frozen=True)
class NotLineGraph:
    obstruction: VertexSet  # induces a minimal non-line-graph (a claw when one exists)


def _find_claw(g: Graph) -> VertexSet | None:
    for v in range(g.n):
        nb = list(iter_bits(g.adj[v]))
        for i, a in enumerate(nb):
            for j in range(i + 1, len(nb)):
                b = nb[j]
                if g.has_edge(a, b):
                    continue
                rest = g.adj[v] & ~g.adj[a] & ~g.adj[b] & ~((1 << (b + 1)) - 1)
                if rest:
                    return (v, a, b, lowest(rest))
    return None


def _cliques_through(rem: list[int], base: int, cand: int) -> Iterator[int]:
    """Cliques of the uncovered-edge graph containing ``base``, extended from ``cand``."""
    yield base
    while cand:
        w = lowest(cand)
        cand &= ~(1 << w)
        yield from _cliques_through(rem, base | 1 << w, cand & rem[w])


def _krausz_cover(g: Graph, comp: int) -> list[int] | None:
    rem = [g.adj[v] if comp >> v & 1 else 0 for v in range(g.n)]
    count = [0] * g.n

    def apply(k: int) -> list[tuple[int, int, int]] | None:
        undo = []
        ok = True
        for w in iter_bits(k):
            undo.append((w, rem[w], count[w]))
            rem[w] &= ~k
            count[w] += 1
            if count[w] > 2 or (count[w] == 2 and rem[w]):
                ok = False
        if not ok:
            revert(undo)
            return None
        return undo

    def revert(undo: list[tuple[int, int, int]]) -> None:
        for w, r, c in reversed(undo):
            rem[w] = r
            count[w] = c

    def is_rem_clique(k: int) -> bool:
        return all((k & ~(1 << w)) & ~rem[w] == 0 for w in iter_bits(k))

    cover: list[int] = []

    def search() -> bool:
        forced = next((v for v in iter_bits(comp) if count[v] == 1 and rem[v]), None)
        if forced is not None:
            k = rem[forced] | 1 << forced
            if not is_rem_clique(k):
                return False
            undo = apply(k)
            if undo is None:
                return False
            cover.append(k)
            if search():
                return True
            cover.pop()
            revert(undo)
            return False
        v = next((v for v in iter_bits(comp) if rem[v]), None)
        if v is None:
            return True
        u = lowest(rem[v])
        avail = rem[u] & rem[v]
        avail &= ~to_mask(w for w in iter_bits(avail) if count[w] >= 2)
        options = sorted(_cliques_through(rem, 1 << u | 1 << v, avail), key=lambda k: (-k.bit_count(), k))
        for k in options:
            undo = apply(k)
            if undo is None:
                continue
            cover.append(k)
            if search():
                return True
            cover.pop()
            revert(undo)
        return False

    return list(cover) if search() else None


def _recognize(g: Graph) -> RootGraphMap | None:
    to_edge: list[Edge | None] = [None] * g.n
    next_id = 0
    for comp_vs in connected_components(g):
        comp = to_mask(comp_vs)
        if len(comp_vs) == 1:
            to_edge[comp_vs[0]] = (next_id, next_id + 1)
            next_id += 2
            continue
        cover = _krausz_cover(g, comp)
        if cover is None:
            return None
        ends: dict[int, list[int]] = {v: [] for v in comp_vs}
        for i, k in enumerate(cover):
            for w in iter_bits(k):
                ends[w].append(next_id + i)
        next_id += len(cover)
        for v in comp_vs:
            if len(ends[v]) == 1:
                ends[v].append(next_id)
                next_id += 1
            to_edge[v] = _norm(ends[v])
    root = build(next_id, [e for e in to_edge if e is not None])
    rmap = RootGraphMap(root, tuple(e for e in to_edge if e is not None))
    if not rmap.verify(g):
        raise AssertionError("Krausz cover produced an inconsistent root")
    return rmap


def _minimal_obstruction(g: Graph) -> VertexSet:
    claw = _find_claw(g)
    if claw is not None:
        return tuple(sorted(claw))
    keep = list(range(g.n))
    for v in range(g.n):
        trial = [w for w in keep if w != v]
        sub, _ = g.induced_subgraph(trial)
        if _recognize(sub) is None:
            keep = trial
    return tuple(keep)


def recognize_line_graph(g: Graph) -> RootGraphMap | NotLineGraph:
    """Root graph H (no isolated vertices) with G = L(H), or an induced obstruction."""
    rmap = _recognize(g)
    if rmap is not None:
        return rmap
    return NotLineGraph(_minimal_obstruction(g))


# -- star and triangle families --------------------------------------------------

@dataclass(frozen=True)
class EdgeFamilyMG:
    triangles: frozenset  # frozenset of 3-edge frozensets
    stars: dict  # vertex -> frozenset of incident edges
    maximal: frozenset  # inclusion-maximal members of triangles | stars


def edge_families(h: Graph) -> EdgeFamilyMG:
    for v, d in enumerate(h.degrees()):
        if d == 0:
            raise StrongCliqueError(f"root graph has isolated vertex {v}")
    stars = {v: frozenset(_norm((v, w)) for w in iter_bits(h.adj[v])) for v in range(h.n)}
    triangles = set()
    for u, v in h.edges():
        for w in iter_bits(h.adj[u] & h.adj[v] & ~((1 << (v + 1)) - 1)):
            triangles.add(frozenset({(u, v), (u, w), (v, w)}))
    pool = set(triangles) | set(stars.values())
    maximal = frozenset(s for s in pool if not any(s < t for t in pool))
    return EdgeFamilyMG(frozenset(triangles), stars, maximal)


@dataclass(frozen=True)
class CliqueTranslation:
    edges: frozenset
    tag: str  # "star", "triangle" or "invalid"
    center: int | None  # for stars: a common endpoint (None when the set is empty)


def classify_edge_set(edges: Iterable[Edge]) -> CliqueTranslation:
    es = frozenset(_norm(e) for e in edges)
    if not es:
        return CliqueTranslation(es, "star", None)
    common = set.intersection(*(set(e) for e in es))
    if common:
        return CliqueTranslation(es, "star", min(common))
    verts = {v for e in es for v in e}
    if len(es) == 3 and len(verts) == 3:
        return CliqueTranslation(es, "triangle", None)
    return CliqueTranslation(es, "invalid", None)


def translate_clique(rmap: RootGraphMap, g: Graph, clique: Iterable[int]) -> CliqueTranslation:
    cs = sorted(set(clique))
    pair = g.non_adjacent_pair(cs)
    if pair is not None:
        raise NotACliqueError(pair)
    return classify_edge_set(rmap.to_edge[v] for v in cs)


def edges_to_vertices(rmap: RootGraphMap, edges: Iterable[Edge]) -> VertexSet:
    index = rmap.to_vertex()
    return tuple(sorted(index[_norm(e)] for e in edges))


def maximal_matchings(h: Graph) -> list[frozenset]:
    """All maximal matchings of h (exhaustive; test-scale only)."""
    edges = h.edges()
    out = []

    def rec(i: int, used: int, chosen: list[Edge]) -> None:
        if i == len(edges):
            if all(used >> u & 1 or used >> v & 1 for u, v in edges):
                out.append(frozenset(chosen))
            return
        u, v = edges[i]
        if not (used >> u & 1 or used >> v & 1):
            chosen.append((u, v))
            rec(i + 1, used | 1 << u | 1 << v, chosen)
            chosen.pop()
        rec(i + 1, used, chosen)

    rec(0, 0, [])
    return out

