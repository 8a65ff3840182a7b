"""Simple undirected graphs over dense integer ids, stored as neighbor bitsets.

A vertex set is passed around either as a sorted tuple of ids (the public
form) or as an ``int`` bitmask (the internal form); ``to_mask`` and
``members`` convert between the two.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import InvalidGraphError

VertexSet = tuple[int, ...]
Edge = tuple[int, int]


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> VertexSet:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the bitmask of neighbors of ``v``. Optional ``labels`` give
    each vertex a human-readable name (used by the reduction gadgets).
    """

    __slots__ = ("n", "adj", "labels", "_edges")

    def __init__(self, n: int, adj: Sequence[int], labels: Sequence[str] | None = None):
        self.n = n
        self.adj = tuple(adj)
        self.labels = tuple(labels) if labels is not None else None
        self._edges: tuple[Edge, ...] | None = None

    # -- construction -------------------------------------------------------

    @classmethod
    def build(cls, n: int, edges: Iterable[Sequence[int]], labels: Sequence[str] | None = None) -> "Graph":
        if n < 0:
            raise InvalidGraphError(f"vertex count must be nonnegative, got {n}")
        adj = [0] * n
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}", edge=(u, v))
            if u == v:
                raise InvalidGraphError(f"self-loop at vertex {u}", edge=(u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if labels is not None and len(labels) != n:
            raise InvalidGraphError(f"expected {n} labels, got {len(labels)}")
        return cls(n, adj, labels)

    # -- basic queries ------------------------------------------------------

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> tuple[Edge, ...]:
        if self._edges is None:
            self._edges = tuple(
                (u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))
            )
        return self._edges

    @property
    def m(self) -> int:
        return len(self.edges())

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> VertexSet:
        return members(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | 1 << v

    def neighborhood_of_set(self, mask: int) -> int:
        """N(X): vertices outside X with a neighbor in X."""
        out = 0
        for v in iter_bits(mask):
            out |= self.adj[v]
        return out & ~mask

    def common_neighbors(self, mask: int) -> int:
        out = self.full
        for v in iter_bits(mask):
            out &= self.adj[v]
        return out & ~mask

    def is_clique_mask(self, mask: int) -> bool:
        for v in iter_bits(mask):
            if (mask & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def is_independent_mask(self, mask: int) -> bool:
        return all(not (self.adj[v] & mask) for v in iter_bits(mask))

    def non_adjacent_pair(self, vertices: Iterable[int]) -> Edge | None:
        vs = sorted(set(vertices))
        for i, u in enumerate(vs):
            for v in vs[i + 1:]:
                if not self.has_edge(u, v):
                    return (u, v)
        return None

    def is_clique(self, vertices: Iterable[int]) -> bool:
        return self.non_adjacent_pair(vertices) is None

    def is_independent(self, vertices: Iterable[int]) -> bool:
        return self.is_independent_mask(to_mask(vertices))

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", VertexSet]:
        """Subgraph induced by ``vertices``; returns it with the old ids in new-id order."""
        old = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(old)}
        adj = [0] * len(old)
        for i, v in enumerate(old):
            for w in iter_bits(self.adj[v]):
                j = index.get(w)
                if j is not None:
                    adj[i] |= 1 << j
        labels = [self.labels[v] for v in old] if self.labels else None
        return Graph(len(old), adj, labels), old

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            adj[perm[v]] = to_mask(perm[w] for w in iter_bits(self.adj[v]))
        return Graph(self.n, adj)

    def with_labels(self, labels: Sequence[str]) -> "Graph":
        return Graph(self.n, self.adj, labels)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    # -- dunder -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def build(n: int, edges: Iterable[Sequence[int]], labels: Sequence[str] | None = None) -> Graph:
    return Graph.build(n, edges, labels)


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, [full & ~a & ~(1 << v) for v, a in enumerate(g.adj)], g.labels)


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    offset = 0
    for h in graphs:
        adj.extend(a << offset for a in h.adj)
        offset += h.n
    return Graph(offset, adj)


class LineGraph(NamedTuple):
    graph: Graph
    edges: tuple[Edge, ...]  # vertex i of ``graph`` is edge ``edges[i]`` of the root


def line_graph(g: Graph) -> LineGraph:
    edges = g.edges()
    incident: list[int] = [0] * g.n
    for i, (u, v) in enumerate(edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    adj = [(incident[u] | incident[v]) & ~(1 << i) for i, (u, v) in enumerate(edges)]
    return LineGraph(Graph(len(edges), adj), edges)


# -- named families ----------------------------------------------------------

FAMILIES = (
    "complete", "empty", "path", "cycle", "complete_bipartite", "diamond",
    "co_P2_plus_P3", "co_C6", "F_gadget", "F_n", "petersen",
)


def complete_graph(n: int) -> Graph:
    return build(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def path_graph(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidGraphError(f"cycle needs at least 3 vertices, got {n}")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def petersen_graph() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build(10, edges)


# Within one F block: x, y, z form a triangle, x', y', z' form a triangle,
# y-y' and z-z' join them; x and x' carry the single external edge each.
_F_ROLES = ("x", "y", "z", "x'", "y'", "z'")
_F_EDGES = ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (1, 4), (2, 5))
F_X, F_XP = 0, 3


def f_gadget() -> Graph:
    return build(6, _F_EDGES, labels=list(_F_ROLES))


def f_family(k: int) -> Graph:
    """F_k: k gadgets on a cycle, x of block i joined to x' of block i+1."""
    if k < 2:
        raise InvalidGraphError(f"F_n requires n >= 2, got {k}")
    edges = []
    labels = []
    for i in range(k):
        base = 6 * i
        edges += [(base + u, base + v) for u, v in _F_EDGES]
        labels += [f"{r}{i + 1}" for r in _F_ROLES]
        edges.append((base + F_X, 6 * ((i + 1) % k) + F_XP))
    return build(6 * k, edges, labels)


def named(family: str, *params: int) -> Graph:
    """Build a member of a named family; ``params`` are the family's integers."""
    def need(count: int) -> None:
        if len(params) != count:
            raise InvalidGraphError(f"family {family!r} takes {count} parameter(s), got {len(params)}")
        if any(p < 0 for p in params):
            raise InvalidGraphError(f"family {family!r} parameters must be nonnegative")

    if family == "complete":
        need(1)
        return complete_graph(params[0])
    if family == "empty":
        need(1)
        return empty_graph(params[0])
    if family == "path":
        need(1)
        return path_graph(params[0])
    if family == "cycle":
        need(1)
        return cycle_graph(params[0])
    if family == "complete_bipartite":
        need(2)
        return complete_bipartite(*params)
    if family == "diamond":
        need(0)
        return build(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    if family == "co_P2_plus_P3":
        need(0)
        return complement(build(5, [(0, 1), (2, 3), (3, 4)]))
    if family == "co_C6":
        need(0)
        return complement(cycle_graph(6))
    if family == "F_gadget":
        need(0)
        return f_gadget()
    if family == "F_n":
        need(1)
        return f_family(params[0])
    if family == "petersen":
        need(0)
        return petersen_graph()
    raise InvalidGraphError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


# -- structure ----------------------------------------------------------------

def connected_components(g: Graph) -> list[VertexSet]:
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(members(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


@dataclass(frozen=True)
class DegreeProfile:
    min_degree: int
    max_degree: int
    is_regular: bool
    is_cubic: bool
    is_subcubic: bool


def degree_profile(g: Graph) -> DegreeProfile:
    degs = g.degrees() or [0]
    lo, hi = min(degs), max(degs)
    return DegreeProfile(lo, hi, lo == hi, lo == hi == 3 and g.n > 0, hi <= 3)


def _shortest_path(g: Graph, allowed: int, src: int, dst: int) -> list[int] | None:
    prev = {src: src}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            path = [v]
            while path[-1] != src:
                path.append(prev[path[-1]])
            return path[::-1]
        for w in iter_bits(g.adj[v] & allowed):
            if w not in prev:
                prev[w] = v
                queue.append(w)
    return None


def find_long_hole(g: Graph) -> list[int] | None:
    """Return an induced cycle of length >= 5, or None.

    Every such hole passes through an induced P4 a-b-c-d whose ends are joined
    by a path avoiding N[b] and N[c]; conversely a shortest such path closes a
    hole. So it suffices to scan middle edges b-c.
    """
    for b in range(g.n):
        for c in iter_bits(g.adj[b]):
            if c < b:
                continue
            nb, nc = g.closed_neighborhood(b), g.closed_neighborhood(c)
            side_a = g.adj[b] & ~nc
            side_d = g.adj[c] & ~nb
            if not side_a or not side_d:
                continue
            allowed = g.full & ~(nb | nc)
            for a in iter_bits(side_a):
                for d in iter_bits(side_d & ~g.adj[a]):
                    path = _shortest_path(g, allowed | 1 << d, a, d)
                    if path is not None:
                        # path runs a ... d; the hole is a-b-c-d-...-a
                        return [a, b, c] + path[::-1][:-1]
    return None


class WeakChordality(NamedTuple):
    weakly_chordal: bool
    witness: VertexSet | None  # hole in cyclic order
    side: str | None  # "graph" or "complement"


def is_weakly_chordal(g: Graph) -> WeakChordality:
    hole = find_long_hole(g)
    if hole is not None:
        return WeakChordality(False, tuple(hole), "graph")
    hole = find_long_hole(complement(g))
    if hole is not None:
        return WeakChordality(False, tuple(hole), "complement")
    return WeakChordality(True, None, None)


def find_induced_c4(g: Graph) -> VertexSet | None:
    """Induced 4-cycle in cyclic order, or None."""
    for u in range(g.n):
        for w in iter_bits(g.full & ~g.adj[u] & ~((1 << (u + 1)) - 1)):
            common = g.adj[u] & g.adj[w]
            for v in iter_bits(common):
                rest = common & ~g.adj[v] & ~(1 << v)
                if rest:
                    return (u, v, w, lowest(rest))
    return None


# -- edge-list text format -----------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise InvalidGraphError("empty edge list: missing 'n m' header")
    lineno, header = rows[0]
    try:
        n, m = (int(t) for t in header)
    except ValueError:
        raise InvalidGraphError(f"bad header {' '.join(header)!r}, expected 'n m'", line=lineno) from None
    body = rows[1:]
    if len(body) != m:
        raise InvalidGraphError(f"header declares {m} edges, found {len(body)}", line=lineno)
    edges = []
    for lineno, toks in body:
        try:
            u, v = (int(t) for t in toks)
        except ValueError:
            raise InvalidGraphError(f"bad edge line {' '.join(toks)!r}", line=lineno) from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            try:
                build(n, [(u, v)])
            except InvalidGraphError as exc:
                raise InvalidGraphError(f"line {lineno}: {exc}", edge=(u, v), line=lineno) from None
        edges.append((u, v))
    return build(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_edge_list(path: str) -> Graph:
    with open(path) as f:
        return parse_edge_list(f.read())


def write_edge_list(g: Graph, path: str) -> None:
    with open(path, "w") as f:
        f.write(format_edge_list(g))
