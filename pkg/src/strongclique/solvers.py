"""Polynomial-time strong-clique algorithms for special graph classes, and a dispatcher.

Every class engine answers clique extension: given a clique C, is there a
strong clique containing it? The dispatcher reduces the other problems to
extension (strongness of a clique = maximality plus extension; existence =
extension of the empty clique; vertex/edge cover = extension of every
singleton/edge; partition = strongness of each part) and picks the cheapest
engine whose class membership it can confirm.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Sequence

from .errors import OracleCapExceeded, PreconditionError, StrongCliqueError
from .graph import (
    Graph, VertexSet, complement, connected_components, degree_profile, f_family, find_induced_c4,
    is_connected, iter_bits, lowest, members, named, to_mask, F_X, F_XP,
)
from .iso import find_isomorphism, is_isomorphism
from .linegraph import RootGraphMap, NotLineGraph, edge_families, recognize_line_graph, _norm
from .matching import WeightedGraph, has_perfect_matching, max_weight_matching, saturating_matching
from . import oracle


class Problem(str, Enum):
    STRONG_CLIQUE = "StrongClique"
    EXISTENCE = "Existence"
    VERTEX_COVER = "VertexCover"
    EDGE_COVER = "EdgeCover"
    PARTITION = "Partition"
    PARTITION_EXISTENCE = "PartitionExistence"
    EXTENSION = "Extension"

    @classmethod
    def parse(cls, name: str) -> "Problem":
        key = name.replace("-", "").replace("_", "").lower()
        for p in cls:
            if p.value.lower() == key:
                return p
        raise StrongCliqueError(f"unknown problem {name!r}; expected one of {', '.join(p.value for p in cls)}")


@dataclass(frozen=True)
class Verdict:
    """Answer to one problem instance.

    ``kind`` names the certificate shape: ``strong_clique`` (a VertexSet),
    ``disjoint_mis`` (a maximal independent set missing the queried clique),
    ``partition`` (list of VertexSets), ``cover`` (dict from vertex or edge to a
    strong clique), ``uncovered`` (the vertex or edge in no strong clique),
    ``bad_part`` ((part, disjoint_mis)) or ``component`` (a failing component).
    """

    problem: Problem
    answer: bool
    method: str
    certificate: object = None
    kind: str | None = None


# -- shared helpers ---------------------------------------------------------------

def small_dominating_independent_set(g: Graph, clique: int, k: int) -> int | None:
    """Independent I subset of N(C), |I| <= k, dominating C; found by plain enumeration."""
    nbhd = list(iter_bits(g.neighborhood_of_set(clique)))
    for size in range(1, k + 1):
        for combo in combinations(nbhd, size):
            mask = to_mask(combo)
            if not g.is_independent_mask(mask):
                continue
            covered = 0
            for v in combo:
                covered |= g.adj[v]
            if clique & ~covered == 0:
                return mask
    return None


def _is_maximal_clique(g: Graph, clique: int) -> bool:
    return clique != 0 and g.common_neighbors(clique) == 0


def _mis_witness(g: Graph, clique: int, dominator: int) -> VertexSet:
    """Grow an independent set that dominates ``clique`` into a maximal one avoiding it."""
    return members(oracle.extend_independent(g, dominator, forbidden=clique))


# -- engines ---------------------------------------------------------------------------

class Engine:
    """Clique extension for one graph; subclasses know one graph class.

    ``dominator(C)`` is only called on maximal cliques and returns None when C
    is strong, else an independent set outside C dominating it.
    """

    method = "oracle"

    def __init__(self, g: Graph):
        self.g = g

    def extend(self, clique: int) -> int | None:
        raise NotImplementedError

    def dominator(self, clique: int) -> int | None:
        raise NotImplementedError


class OracleEngine(Engine):
    method = "oracle"

    def extend(self, clique: int) -> int | None:
        found = oracle.extends_to_strong(self.g, members(clique))
        return None if found is None else to_mask(found)

    def dominator(self, clique: int) -> int | None:
        return oracle.disjoint_maximal_independent_set(self.g, clique)


class C4FreeEngine(Engine):
    """In C4-free graphs the strong cliques are exactly the simplicial ones."""

    method = "c4free"

    def __init__(self, g: Graph, checked: bool = False):
        super().__init__(g)
        if not checked:
            hole = find_induced_c4(g)
            if hole is not None:
                raise PreconditionError("graph contains an induced C4", witness=hole)
        self.simplicial = sorted(
            {g.closed_neighborhood(v) for v in range(g.n) if g.is_clique_mask(g.closed_neighborhood(v))},
            key=members,
        )

    def extend(self, clique: int) -> int | None:
        return next((s for s in self.simplicial if clique & ~s == 0), None)

    def dominator(self, clique: int) -> int | None:
        if clique in self.simplicial:
            return None
        return oracle.dominating_independent_set(self.g, clique)


class LineGraphEngine(Engine):
    """Extension in L(H) through the star/triangle families of the root H."""

    method = "linegraph"

    def __init__(self, g: Graph, rmap: RootGraphMap | None = None):
        super().__init__(g)
        if rmap is None:
            found = recognize_line_graph(g)
            if isinstance(found, NotLineGraph):
                raise PreconditionError("graph is not a line graph", witness=found.obstruction)
            rmap = found
        self.rmap = rmap
        self.h = rmap.root
        self.index = rmap.to_vertex()
        fam = edge_families(self.h) if self.h.n else None
        self.maximal = sorted(
            (self._to_mask(s) for s in (fam.maximal if fam else ())), key=members
        )
        self._kind: dict[int, tuple[str, object]] = {}
        if fam:
            for t in fam.triangles:
                self._kind[self._to_mask(t)] = ("triangle", t)
            for v, s in fam.stars.items():
                self._kind.setdefault(self._to_mask(s), ("star", v))

    def _to_mask(self, edges: Iterable) -> int:
        return to_mask(self.index[_norm(e)] for e in edges)

    def _edges(self, mask: int) -> list:
        return [self.rmap.to_edge[v] for v in iter_bits(mask)]

    def dominator(self, clique: int) -> int | None:
        kind, data = self._kind[clique]
        h = self.h
        if kind == "triangle":
            tri = sorted({v for e in data for v in e})
            m = saturating_matching(h, tri, forbidden=data, threshold=2)
        else:
            v = data
            star = [_norm((v, w)) for w in iter_bits(h.adj[v])]
            m = saturating_matching(h, h.neighbors(v), forbidden=star)
        return None if m is None else self._to_mask(m)

    def extend(self, clique: int) -> int | None:
        for cand in self.maximal:
            if clique & ~cand == 0 and self.dominator(cand) is None:
                return cand
        return None


class CoLineGraphEngine(Engine):
    """Extension in the complement of L(H) by maximum-weight matching in H."""

    method = "coline"

    def __init__(self, g: Graph, rmap: RootGraphMap | None = None):
        super().__init__(g)
        if rmap is None:
            found = recognize_line_graph(complement(g))
            if isinstance(found, NotLineGraph):
                raise PreconditionError("complement is not a line graph", witness=found.obstruction)
            rmap = found
        self.rmap = rmap
        self.h = rmap.root
        self.index = rmap.to_vertex()
        fam = edge_families(self.h) if self.h.n else None
        self.family = sorted((to_mask(self.index[e] for e in s) for s in (fam.maximal if fam else ())), key=members)

    def dominator(self, clique: int) -> int | None:
        # a maximal clique is a maximal matching; it is strong iff it meets every family set
        return next((s for s in self.family if not s & clique), None)

    def extend(self, clique: int) -> int | None:
        if self.g.n == 0:
            return None
        h = self.h
        chosen = {self.rmap.to_edge[v] for v in iter_bits(clique)}
        touched = {x for e in chosen for x in e}
        weight = {}
        for v in range(self.g.n):
            e = self.rmap.to_edge[v]
            if e not in chosen and touched & set(e):
                continue
            w = sum(1 for s in self.family if s >> v & 1)
            if w:
                weight[e] = w
        best = max_weight_matching(WeightedGraph(h, weight))
        if best.weight < len(self.family):
            return None
        # any such matching already contains the chosen edges; grow it to a maximal one
        used = set()
        picked = []
        for e in list(best.edges) + sorted(chosen) + list(h.edges()):
            e = _norm(e)
            if e[0] in used or e[1] in used:
                continue
            used.update(e)
            picked.append(e)
        result = to_mask(self.index[e] for e in picked)
        if clique & ~result:
            raise AssertionError("weighted matching lost a queried edge")
        return result


class BoundedOmegaEngine(Engine):
    """Clique number at most k: test strongness by small dominating subsets of N(C)."""

    method = "bounded_omega"

    def __init__(self, g: Graph, k: int, omega: int | None = None):
        super().__init__(g)
        omega = oracle.clique_number(g) if omega is None else omega
        if omega > k:
            raise PreconditionError(f"clique number {omega} exceeds {k}", witness=oracle.max_clique(g))
        self.k = k

    def dominator(self, clique: int) -> int | None:
        return small_dominating_independent_set(self.g, clique, self.k)

    def extend(self, clique: int) -> int | None:
        for cand in sorted(oracle.maximal_cliques_containing(self.g, clique), key=members):
            if self.dominator(cand) is None:
                return cand
        return None


# -- public class solvers ------------------------------------------------------------------

def _ext_verdict(engine: Engine, g: Graph, clique: Sequence[int]) -> Verdict:
    mask = oracle.require_clique(g, clique)
    found = engine.extend(mask)
    if found is None:
        return Verdict(Problem.EXTENSION, False, engine.method)
    return Verdict(Problem.EXTENSION, True, engine.method, members(found), "strong_clique")


def sce_c4free(g: Graph, clique: Sequence[int]) -> Verdict:
    return _ext_verdict(C4FreeEngine(g), g, clique)


def sce_linegraph(g: Graph, clique: Sequence[int]) -> Verdict:
    return _ext_verdict(LineGraphEngine(g), g, clique)


def sce_coline(g: Graph, clique: Sequence[int]) -> Verdict:
    return _ext_verdict(CoLineGraphEngine(g), g, clique)


def sce_bounded_omega(g: Graph, clique: Sequence[int], k: int) -> Verdict:
    return _ext_verdict(BoundedOmegaEngine(g, k), g, clique)


def _component_strong_cliques(g: Graph, comp: VertexSet) -> list[int]:
    """Strong cliques inside one component of a subcubic graph (domination tests, size <= 4)."""
    out = []
    for c in oracle.maximal_cliques_containing(g.induced_subgraph(comp)[0], 0):
        mask = to_mask(comp[i] for i in iter_bits(c))
        if small_dominating_independent_set(g, mask, 4) is None:
            out.append(mask)
    return sorted(out, key=members)


_CO_P2_P3 = named("co_P2_plus_P3")


def localizable_subcubic(g: Graph) -> Verdict:
    """Localizability for max degree <= 3 via perfect matching on strong 2-cliques."""
    prof = degree_profile(g)
    if prof.max_degree > 3:
        worst = max(range(g.n), key=g.degree)
        raise PreconditionError(f"vertex {worst} has degree {g.degree(worst)} > 3", witness=worst)
    partition: list[VertexSet] = []
    for comp in connected_components(g):
        if len(comp) == 1:
            partition.append(comp)
            continue
        strong = _component_strong_cliques(g, comp)
        if any(s.bit_count() == 4 for s in strong):
            partition.append(comp)  # the component is K4
            continue
        triangles = [s for s in strong if s.bit_count() == 3]
        overlapping = any(t & s for t in triangles for s in strong if s != t)
        if overlapping:
            sub, _ = g.induced_subgraph(comp)
            if find_isomorphism(sub, _CO_P2_P3) is None:
                return Verdict(Problem.PARTITION_EXISTENCE, False, "subcubic", comp, "component")
            cover = _cover_within(comp, strong)
            if cover is None:
                raise AssertionError("co(P2+P3) component without a strong partition")
            partition.extend(members(b) for b in cover)
            continue
        in_triangle = 0
        for t in triangles:
            in_triangle |= t
            partition.append(members(t))
        rest = [v for v in comp if not in_triangle >> v & 1]
        index = {v: i for i, v in enumerate(rest)}
        pairs = [s for s in strong if s.bit_count() == 2 and not s & in_triangle]
        derived = Graph.build(len(rest), [tuple(index[v] for v in iter_bits(s)) for s in pairs])
        ok, matching = has_perfect_matching(derived)
        if not ok:
            return Verdict(Problem.PARTITION_EXISTENCE, False, "subcubic", comp, "component")
        partition.extend(tuple(sorted((rest[a], rest[b]))) for a, b in matching)
    return Verdict(Problem.PARTITION_EXISTENCE, True, "subcubic", sorted(partition), "partition")


def _cover_within(comp: VertexSet, blocks: list[int]) -> list[int] | None:
    target = to_mask(comp)

    def search(covered: int) -> list[int] | None:
        if covered == target:
            return []
        v = lowest(target & ~covered)
        for b in blocks:
            if b >> v & 1 and not b & covered:
                rest = search(covered | b)
                if rest is not None:
                    return [b] + rest
        return None

    return search(0)


def localizable_c4free(g: Graph) -> Verdict:
    """C4-free: localizable iff the simplicial cliques are pairwise disjoint and cover V.

    Each simplicial vertex lies in exactly one maximal clique, so every
    simplicial clique is forced into any strong partition.
    """
    engine = C4FreeEngine(g)
    covered = 0
    for s in engine.simplicial:
        if s & covered:
            return Verdict(Problem.PARTITION_EXISTENCE, False, "c4free", members(s), "overlapping_simplicial")
        covered |= s
    if covered != g.full:
        missing = lowest(g.full & ~covered)
        return Verdict(Problem.PARTITION_EXISTENCE, False, "c4free", missing, "uncovered")
    return Verdict(Problem.PARTITION_EXISTENCE, True, "c4free", [members(s) for s in engine.simplicial], "partition")


def _two_coloring(g: Graph) -> list[int] | None:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in iter_bits(g.adj[v]):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def _triangle(g: Graph) -> VertexSet | None:
    for u, v in g.edges():
        common = g.adj[u] & g.adj[v]
        if common:
            return (u, v, lowest(common))
    return None


def localizable_alpha2(g: Graph) -> Verdict:
    """alpha = 2: localizable iff the complement is bipartite without isolated vertices."""
    co = complement(g)
    tri = _triangle(co)
    if tri is not None:
        raise PreconditionError("independence number exceeds 2", witness=tri)
    if co.m == 0:
        raise PreconditionError("independence number is at most 1", witness=None)
    isolated = [v for v in range(co.n) if co.degree(v) == 0]
    coloring = _two_coloring(co)
    if isolated or coloring is None:
        return Verdict(Problem.PARTITION_EXISTENCE, False, "alpha2")
    parts = [tuple(v for v in range(g.n) if coloring[v] == c) for c in (0, 1)]
    return Verdict(Problem.PARTITION_EXISTENCE, True, "alpha2", sorted(parts), "partition")


# -- cubic classification --------------------------------------------------------------

@dataclass(frozen=True)
class CubicClassification:
    tag: str  # "K33", "K4", "coC6", "Fn" or "NotLocalizable"
    param: int | None = None
    witness: object = None  # isomorphism dict onto the family graph, or a vertex in no strong clique

    def __str__(self) -> str:
        return f"Fn({self.param})" if self.tag == "Fn" else self.tag

    @property
    def localizable(self) -> bool:
        return self.tag != "NotLocalizable"


def _triangle_partition(g: Graph) -> list[int] | None:
    owner: dict[int, int] = {}
    tris = []
    for v in range(g.n):
        nb = list(iter_bits(g.adj[v]))
        found = [(a, b) for a, b in combinations(nb, 2) if g.has_edge(a, b)]
        if len(found) != 1:
            return None
        t = 1 << v | 1 << found[0][0] | 1 << found[0][1]
        if v not in owner:
            tris.append(t)
            for w in iter_bits(t):
                owner[w] = len(tris) - 1
    return tris


def _match_f_family(g: Graph) -> tuple[int, dict[int, int]] | None:
    """Recognize F_k structurally and return (k, isomorphism onto f_family(k))."""
    if g.n % 6 or g.n < 12:
        return None
    tris = _triangle_partition(g)
    if tris is None or len(tris) != g.n // 3:
        return None
    tri_of = {v: i for i, t in enumerate(tris) for v in iter_bits(t)}
    outside = {v: lowest(g.adj[v] & ~tris[tri_of[v]]) for v in range(g.n)}
    partner = {}
    for i, t in enumerate(tris):
        targets = [tri_of[outside[v]] for v in iter_bits(t)]
        twice = [j for j in set(targets) if targets.count(j) == 2]
        if len(twice) != 1:
            return None
        partner[i] = twice[0]
    if any(partner[partner[i]] != i for i in partner):
        return None
    external = {}
    for i, t in enumerate(tris):
        ext = [v for v in iter_bits(t) if tri_of[outside[v]] != partner[i]]
        external[i] = ext[0]

    k = g.n // 6
    mapping: dict[int, int] = {}
    start = 0
    x = external[start]
    visited = set()
    for i in range(k):
        t = tri_of[x]
        if t in visited:
            return None
        visited.update((t, partner[t]))
        xp = external[partner[t]]
        y, z = sorted(v for v in iter_bits(tris[t]) if v != x)
        base = 6 * i
        mapping.update({x: base + F_X, y: base + 1, z: base + 2, xp: base + F_XP,
                        outside[y]: base + 4, outside[z]: base + 5})
        if i == 0:
            first_xp = xp
        x_next_prime = outside[x]
        if i < k - 1:
            nt = tri_of[x_next_prime]
            x = external[partner[nt]]
        elif x_next_prime != first_xp:
            return None
    target = f_family(k)
    if len(mapping) != g.n:
        return None
    return (k, mapping) if is_isomorphism(g, target, mapping) else None


def classify_cubic(g: Graph) -> CubicClassification:
    prof = degree_profile(g)
    if not prof.is_cubic:
        raise PreconditionError("graph is not cubic", witness=(prof.min_degree, prof.max_degree))
    if not is_connected(g):
        raise PreconditionError("graph is not connected", witness=connected_components(g))
    for tag, ref in (("K4", named("complete", 4)), ("K33", named("complete_bipartite", 3, 3)), ("coC6", named("co_C6"))):
        if g.n == ref.n:
            iso = find_isomorphism(g, ref)
            if iso is not None:
                return CubicClassification(tag, None, iso)
    fam = _match_f_family(g)
    if fam is not None:
        return CubicClassification("Fn", fam[0], fam[1])
    covered = 0
    for s in _component_strong_cliques(g, tuple(range(g.n))):
        covered |= s
    if covered == g.full:
        raise AssertionError("cubic graph outside the list with every vertex in a strong clique")
    return CubicClassification("NotLocalizable", None, lowest(g.full & ~covered))


# -- dispatcher ---------------------------------------------------------------------

@dataclass
class SolverConfig:
    omega_cap: int = 6
    oracle_cap: int = 20


def select_engine(g: Graph, config: SolverConfig | None = None) -> Engine:
    """Cheapest applicable engine: C4-free, line, co-line, bounded omega, then oracle."""
    config = config or SolverConfig()
    if find_induced_c4(g) is None:
        return C4FreeEngine(g, checked=True)
    found = recognize_line_graph(g)
    if isinstance(found, RootGraphMap):
        return LineGraphEngine(g, found)
    found = recognize_line_graph(complement(g))
    if isinstance(found, RootGraphMap):
        return CoLineGraphEngine(g, found)
    omega = oracle.clique_number(g)
    if omega <= config.omega_cap:
        return BoundedOmegaEngine(g, config.omega_cap, omega)
    if g.n > config.oracle_cap:
        raise OracleCapExceeded(g.n, config.oracle_cap)
    return OracleEngine(g)


def _join(methods: Iterable[str]) -> str:
    seen: list[str] = []
    for m in methods:
        if m not in seen:
            seen.append(m)
    return "+".join(seen) if seen else "trivial"


def validate_partition(g: Graph, parts: Sequence[Sequence[int]]) -> list[int]:
    masks = []
    seen = 0
    for part in parts:
        mask = oracle.require_clique(g, part, allow_empty=False)
        if mask & seen:
            raise StrongCliqueError(f"parts overlap at vertex {lowest(mask & seen)}")
        seen |= mask
        masks.append(mask)
    if seen != g.full:
        raise StrongCliqueError(f"vertex {lowest(g.full & ~seen)} is in no part")
    return masks


def _strong_test(engine: Engine, g: Graph, mask: int) -> tuple[bool, VertexSet]:
    """(is strong, disjoint maximal independent set when not)."""
    if not _is_maximal_clique(g, mask):
        v = lowest(g.common_neighbors(mask))
        return False, _mis_witness(g, mask, 1 << v)
    dom = engine.dominator(mask)
    if dom is None:
        return True, ()
    return False, _mis_witness(g, mask, dom)


def localizable_dispatch(g: Graph, config: SolverConfig) -> Verdict:
    partition: list[VertexSet] = []
    methods = []
    for comp in connected_components(g):
        sub, old = g.induced_subgraph(comp)
        verdict = _localizable_component(sub, config)
        methods.append(verdict.method)
        if not verdict.answer:
            return Verdict(Problem.PARTITION_EXISTENCE, False, _join(methods), comp, "component")
        partition.extend(tuple(old[v] for v in part) for part in verdict.certificate)
    return Verdict(Problem.PARTITION_EXISTENCE, True, _join(methods), sorted(partition), "partition")


def _localizable_component(g: Graph, config: SolverConfig) -> Verdict:
    if find_induced_c4(g) is None:
        return localizable_c4free(g)
    if max(g.degrees()) <= 3:
        return localizable_subcubic(g)
    co = complement(g)
    if co.m and _triangle(co) is None:
        return localizable_alpha2(g)
    if g.n > config.oracle_cap:
        raise OracleCapExceeded(g.n, config.oracle_cap)
    ok, partition = oracle.localizable_exact(g)
    return Verdict(Problem.PARTITION_EXISTENCE, ok, "oracle", partition, "partition" if ok else None)


def solve(
    problem: Problem | str,
    g: Graph,
    extra: object = None,
    config: SolverConfig | None = None,
) -> Verdict:
    """Answer one of the strong-clique problems.

    ``extra`` is the clique for StrongClique/Extension and the list of parts
    for Partition; other problems ignore it.
    """
    problem = Problem.parse(problem) if isinstance(problem, str) else problem
    config = config or SolverConfig()

    if problem is Problem.PARTITION_EXISTENCE:
        return localizable_dispatch(g, config)

    if problem is Problem.EXISTENCE:
        methods = []
        for comp in connected_components(g):
            sub, old = g.induced_subgraph(comp)
            engine = select_engine(sub, config)
            methods.append(engine.method)
            found = engine.extend(0)
            if found is not None:
                clique = tuple(old[v] for v in iter_bits(found))
                return Verdict(problem, True, _join(methods), clique, "strong_clique")
        return Verdict(problem, False, _join(methods))

    if problem is Problem.PARTITION:
        if extra is None:
            raise StrongCliqueError("Partition needs a list of parts")
        masks = validate_partition(g, extra)  # type: ignore[arg-type]
        engine = select_engine(g, config)
        for mask in masks:
            strong, mis = _strong_test(engine, g, mask)
            if not strong:
                return Verdict(problem, False, engine.method, (members(mask), mis), "bad_part")
        return Verdict(problem, True, engine.method, [members(m) for m in masks], "partition")

    engine = select_engine(g, config)

    if problem is Problem.STRONG_CLIQUE:
        mask = oracle.require_clique(g, extra or (), allow_empty=False)  # type: ignore[arg-type]
        strong, mis = _strong_test(engine, g, mask)
        if strong:
            return Verdict(problem, True, engine.method, members(mask), "strong_clique")
        return Verdict(problem, False, engine.method, mis, "disjoint_mis")

    if problem is Problem.EXTENSION:
        mask = oracle.require_clique(g, extra or ())  # type: ignore[arg-type]
        found = engine.extend(mask)
        if found is None:
            return Verdict(problem, False, engine.method)
        return Verdict(problem, True, engine.method, members(found), "strong_clique")

    if problem is Problem.VERTEX_COVER:
        items: list = [(v,) for v in range(g.n)]
    else:
        items = list(g.edges())
    cover = {}
    for item in items:
        found = engine.extend(to_mask(item))
        if found is None:
            return Verdict(problem, False, engine.method, item[0] if len(item) == 1 else item, "uncovered")
        cover[item[0] if len(item) == 1 else item] = members(found)
    return Verdict(problem, True, engine.method, cover, "cover")


# -- certificate checking ---------------------------------------------------------------

def check_certificate(g: Graph, verdict: Verdict, extra: object = None) -> bool:
    """Re-verify a verdict's certificate with the exhaustive definitions."""
    cert, kind = verdict.certificate, verdict.kind
    if kind is None:
        return True
    if kind == "strong_clique":
        clique = tuple(cert)  # type: ignore[arg-type]
        if extra and not set(extra) <= set(clique):  # type: ignore[arg-type]
            return False
        return g.is_clique(clique) and bool(clique) and oracle.is_strong_clique(g, clique).verdict
    if kind == "disjoint_mis":
        return _is_disjoint_mis(g, tuple(cert), tuple(extra))  # type: ignore[arg-type]
    if kind == "partition":
        parts = list(cert)  # type: ignore[arg-type]
        try:
            validate_partition(g, parts)
        except StrongCliqueError:
            return False
        return all(oracle.is_strong_clique(g, p).verdict for p in parts)
    if kind == "cover":
        for key, clique in cert.items():  # type: ignore[union-attr]
            need = (key,) if isinstance(key, int) else key
            if not set(need) <= set(clique) or not oracle.is_strong_clique(g, clique).verdict:
                return False
        return True
    if kind == "bad_part":
        part, mis = cert  # type: ignore[misc]
        return _is_disjoint_mis(g, mis, part)
    return True


def _is_disjoint_mis(g: Graph, mis: VertexSet, clique: VertexSet) -> bool:
    mask = to_mask(mis)
    if mask & to_mask(clique) or not g.is_independent_mask(mask):
        return False
    dominated = mask
    for v in mis:
        dominated |= g.adj[v]
    return dominated == g.full
