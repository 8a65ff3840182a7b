"""Batch verification: run the polynomial solvers over a corpus and compare with exact answers.

Each preset is a generator of :class:`Record`; a record's status is ``ok``,
``mismatch`` (wrong answer, wrong routing or a certificate that does not
re-verify) or ``skipped: cap``.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass
from typing import Callable, Iterator

from . import oracle, solvers
from .corpus import (
    all_labeled_graphs, connected_subcubic_graphs, random_cubic_graph, random_graph, root_graphs,
)
from .errors import OracleCapExceeded, StrongCliqueError
from .generators import planted_unsat_3sat, random_3sat, sat_bruteforce, sat_gadget, sat_gadget_prime
from .graph import (
    Graph, complement, degree_profile, find_induced_c4, is_connected, is_weakly_chordal, line_graph,
    members, named, to_mask,
)
from .iso import are_isomorphic
from .linegraph import RootGraphMap, recognize_line_graph
from .solvers import Problem, SolverConfig


@dataclass
class Record:
    instance: str
    problem: str
    answer: bool | None
    method: str
    expected: bool | None
    certificate: object
    seconds: float
    status: str = "ok"
    note: str = ""

    def as_dict(self) -> dict:
        d = asdict(self)
        d["certificate"] = jsonable(self.certificate)
        return d


def jsonable(obj: object) -> object:
    if isinstance(obj, dict):
        return {",".join(map(str, k)) if isinstance(k, tuple) else str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    return obj


@dataclass(frozen=True)
class Truth:
    """Exact answers derived from the full list of strong cliques."""

    strong: tuple
    n: int
    edges: tuple

    @classmethod
    def of(cls, g: Graph) -> "Truth":
        return cls(tuple(oracle.strong_cliques_by_definition(g)), g.n, tuple(g.edges()))

    def answer(self, problem: Problem, g: Graph) -> bool:
        covered = set().union(*map(set, self.strong)) if self.strong else set()
        if problem is Problem.EXISTENCE:
            return bool(self.strong)
        if problem is Problem.VERTEX_COVER:
            return covered == set(range(self.n))
        if problem is Problem.EDGE_COVER:
            return all(any(u in s and v in s for s in self.strong) for u, v in self.edges)
        if problem is Problem.PARTITION_EXISTENCE:
            return oracle._exact_cover(g, [to_mask(s) for s in self.strong]) is not None
        raise ValueError(problem)


def _judge(
    instance: str,
    g: Graph,
    problem: Problem,
    expected: bool,
    config: SolverConfig,
    extra: object = None,
    want_method: str | None = None,
) -> Record:
    start = time.perf_counter()
    try:
        v = solvers.solve(problem, g, extra, config)
    except OracleCapExceeded as exc:
        return Record(instance, problem.value, None, "oracle", expected, None, time.perf_counter() - start,
                      "skipped: cap", str(exc))
    took = time.perf_counter() - start
    status, note = "ok", ""
    if v.answer != expected:
        status, note = "mismatch", "answer differs from oracle"
    elif not solvers.check_certificate(g, v, extra):
        status, note = "mismatch", "certificate does not verify"
    elif want_method is not None and v.method != want_method:
        status, note = "mismatch", f"routed to {v.method}, expected {want_method}"
    return Record(instance, problem.value, v.answer, v.method, expected, v.certificate, took, status, note)


_COVER_PROBLEMS = (Problem.EXISTENCE, Problem.VERTEX_COVER, Problem.EDGE_COVER, Problem.PARTITION_EXISTENCE)


def small_exhaustive(seed: int, config: SolverConfig, quick: bool = False) -> Iterator[Record]:
    """Every labeled graph on up to 6 vertices (5 in quick mode), four problems each."""
    top = 5 if quick else 6
    for n in range(top + 1):
        for code, g in enumerate(all_labeled_graphs(n)):
            truth = Truth.of(g)
            for problem in _COVER_PROBLEMS:
                yield _judge(f"n{n}-{code}", g, problem, truth.answer(problem, g), config)


def _all_cliques(g: Graph) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = [()]

    def grow(base: tuple[int, ...], cand: int) -> None:
        for v in range(g.n):
            if cand >> v & 1:
                out.append(base + (v,))
                grow(base + (v,), cand & g.adj[v] & ~((1 << (v + 1)) - 1))

    grow((), g.full)
    return out


def _extension_records(tag: str, g: Graph, engine: solvers.Engine) -> Iterator[Record]:
    strong = [to_mask(s) for s in oracle.strong_cliques_by_definition(g)]
    for clique in _all_cliques(g):
        start = time.perf_counter()
        found = engine.extend(to_mask(clique))
        took = time.perf_counter() - start
        expected = any(to_mask(clique) & ~s == 0 for s in strong)
        got = found is not None
        status = "ok"
        note = ""
        if got != expected:
            status, note = "mismatch", "answer differs from oracle"
        elif got and not (to_mask(clique) & ~found == 0 and found in strong):
            status, note = "mismatch", "certificate does not verify"
        cert = members(found) if found is not None else None
        yield Record(f"{tag}/{','.join(map(str, clique))}", Problem.EXTENSION.value, got, engine.method,
                     expected, cert, took, status, note)


def line_roundtrip(seed: int, config: SolverConfig, quick: bool = False) -> Iterator[Record]:
    """Connected roots H on <= 6 vertices: recognition round trip, then extension in L(H) and its complement."""
    roots = root_graphs(5 if quick else 6)
    for idx, h in enumerate(roots):
        tag = f"H{h.n}-{idx}"
        lg = line_graph(h).graph
        start = time.perf_counter()
        rmap = recognize_line_graph(lg)
        took = time.perf_counter() - start
        ok = isinstance(rmap, RootGraphMap) and rmap.verify(lg) and are_isomorphic(line_graph(rmap.root).graph, lg)
        cert = rmap.root.edges() if isinstance(rmap, RootGraphMap) else None
        yield Record(tag, "RecognizeLine", ok, "linegraph", True, cert, took, "ok" if ok else "mismatch")
        if not isinstance(rmap, RootGraphMap):
            continue
        yield from _extension_records(f"{tag}/L", lg, solvers.LineGraphEngine(lg, rmap))
        co = complement(lg)
        yield from _extension_records(f"{tag}/coL", co, solvers.CoLineGraphEngine(co))


def subcubic(seed: int, config: SolverConfig, quick: bool = False) -> Iterator[Record]:
    """Connected subcubic graphs up to 9 vertices (7 in quick mode)."""
    top = 7 if quick else 9
    for n in range(1, top + 1):
        for idx, g in enumerate(connected_subcubic_graphs(n)):
            start = time.perf_counter()
            v = solvers.localizable_subcubic(g)
            took = time.perf_counter() - start
            expected = oracle.localizable_exact(g)[0]
            status = "ok"
            if v.answer != expected or not solvers.check_certificate(g, v):
                status = "mismatch"
            yield Record(f"sub{n}-{idx}", Problem.PARTITION_EXISTENCE.value, v.answer, v.method, expected,
                         v.certificate, took, status)


def cubic_instances(seed: int, count: int = 200) -> list[tuple[str, Graph]]:
    out = [("K4", named("complete", 4)), ("K33", named("complete_bipartite", 3, 3)), ("coC6", named("co_C6")),
           ("Petersen", named("petersen"))]
    out += [(f"F{k}", named("F_n", k)) for k in range(2, 6)]
    rng = random.Random(seed)
    for i in range(count):
        n = rng.choice(range(4, 15, 2))
        out.append((f"cubic{n}-{i}", random_cubic_graph(n, rng)))
    return out


def cubic_families(seed: int, config: SolverConfig, quick: bool = False) -> Iterator[Record]:
    """Three-way agreement on connected cubic graphs: partition, vertex cover by strong cliques, family tag."""
    for name, g in cubic_instances(seed, 40 if quick else 200):
        start = time.perf_counter()
        cls = solvers.classify_cubic(g)
        loc = solvers.localizable_subcubic(g)
        took = time.perf_counter() - start
        truth = Truth.of(g)
        covered = truth.answer(Problem.VERTEX_COVER, g)
        status, note = "ok", ""
        if not (loc.answer == covered == cls.localizable):
            status, note = "mismatch", f"partition={loc.answer} covered={covered} tag={cls}"
        elif loc.answer != oracle.localizable_exact(g)[0]:
            status, note = "mismatch", "localizability differs from oracle"
        elif not cls.localizable and any(cls.witness in s for s in truth.strong):
            status, note = "mismatch", "witness vertex lies in a strong clique"
        yield Record(name, "ClassifyCubic", cls.localizable, "cubic_classification", covered,
                     {"tag": str(cls), "partition": loc.certificate}, took, status, note)


def sat_instances(seed: int, count: int = 500) -> list[tuple[str, object]]:
    """Mostly uniform random formulas, one in four planted unsatisfiable (uniform ones rarely are)."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        s = rng.randrange(1 << 30)
        if i % 4 == 3:
            phi = planted_unsat_3sat(5, 10, s, ("i", "ii", "iii"))
        else:
            n = rng.randint(3, 6)
            phi = random_3sat(n, rng.randint(1, 10), s, ("i",))
        out.append((f"sat{i}", phi))
    return out


def sat_reductions(seed: int, config: SolverConfig, quick: bool = False) -> Iterator[Record]:
    for name, phi in sat_instances(seed, 100 if quick else 500):
        start = time.perf_counter()
        sat, _ = sat_bruteforce(phi)
        gad = sat_gadget(phi)
        g = gad.graph
        problems = []
        c_strong = oracle.is_strong_clique(g, gad.clause_clique).verdict
        if c_strong == sat:
            problems.append("clause clique strongness")
        if not all(oracle.is_strong_clique(g, p).verdict for p in gad.literal_pairs):
            problems.append("literal pair not strong")
        if not is_weakly_chordal(g).weakly_chordal:
            problems.append("G not weakly chordal")
        has_all = phi.every_literal_occurs and phi.no_dominating_variable
        if has_all:
            gp = sat_gadget_prime(phi).graph
            strong = [c for c in oracle.maximal_cliques(gp) if oracle.is_strong_mask(gp, to_mask(c))]
            if bool(strong) == sat or (strong and strong != [gad.clause_clique]):
                problems.append("G' strong clique existence")
            if not is_weakly_chordal(gp).weakly_chordal:
                problems.append("G' not weakly chordal")
            cover = all(any(v in s for s in oracle.strong_cliques_all(g)) for v in range(g.n))
            if cover == sat:
                problems.append("vertex cover form")
        took = time.perf_counter() - start
        yield Record(name, "SatReduction", not c_strong, "oracle", sat,
                     {"variables": phi.num_vars, "clauses": len(phi.clauses), "prime": has_all},
                     took, "mismatch" if problems else "ok", "; ".join(problems))


def table_instances(seed: int, per_class: int = 12) -> list[tuple[str, Graph, Problem, str]]:
    """Instances whose class is pinned down: (id, graph, problem, method the router must pick)."""
    rng = random.Random(seed)
    out: list[tuple[str, Graph, Problem, str]] = []

    def collect(kind: str, make: Callable[[], Graph | None], problems: tuple[Problem, ...], method: str) -> None:
        found = 0
        while found < per_class:
            g = make()
            if g is None:
                continue
            for p in problems:
                out.append((f"{kind}{found}", g, p, method))
            found += 1

    edge_problems = (Problem.EXISTENCE, Problem.VERTEX_COVER, Problem.EDGE_COVER)

    def c4free() -> Graph | None:
        g = random_graph(rng.randint(4, 10), rng.uniform(0.2, 0.8), rng)
        return g if find_induced_c4(g) is None and is_connected(g) else None

    def line() -> Graph | None:
        h = random_graph(rng.randint(4, 7), rng.uniform(0.3, 0.7), rng)
        if not is_connected(h):
            return None
        g = line_graph(h).graph
        return g if find_induced_c4(g) is not None else None

    def coline() -> Graph | None:
        h = random_graph(rng.randint(4, 6), rng.uniform(0.3, 0.7), rng)
        if any(d == 0 for d in h.degrees()):
            return None
        g = complement(line_graph(h).graph)
        if not is_connected(g) or find_induced_c4(g) is None:
            return None
        return None if isinstance(recognize_line_graph(g), RootGraphMap) else g

    def bounded() -> Graph | None:
        g = random_graph(rng.randint(7, 10), rng.uniform(0.3, 0.6), rng)
        if not is_connected(g) or find_induced_c4(g) is None:
            return None
        if isinstance(recognize_line_graph(g), RootGraphMap):
            return None
        if isinstance(recognize_line_graph(complement(g)), RootGraphMap):
            return None
        return g

    def sub() -> Graph | None:
        g = random_cubic_graph(rng.choice((6, 8, 10)), rng) if rng.random() < 0.5 else None
        if g is None:
            g = random_graph(rng.randint(4, 11), 0.35, rng)
            if degree_profile(g).max_degree > 3 or not is_connected(g):
                return None
        return g if find_induced_c4(g) is not None else None

    def alpha2() -> Graph | None:
        co = random_graph(rng.randint(5, 10), rng.uniform(0.2, 0.5), rng)
        if co.m == 0 or solvers._triangle(co) is not None:
            return None
        g = complement(co)
        if not is_connected(g) or find_induced_c4(g) is None or degree_profile(g).max_degree <= 3:
            return None
        return g

    collect("c4free", c4free, edge_problems + (Problem.PARTITION_EXISTENCE,), "c4free")
    collect("line", line, edge_problems, "linegraph")
    collect("coline", coline, edge_problems, "coline")
    collect("omega", bounded, edge_problems, "bounded_omega")
    collect("subcubic", sub, (Problem.PARTITION_EXISTENCE,), "subcubic")
    collect("alpha2", alpha2, (Problem.PARTITION_EXISTENCE,), "alpha2")
    return out


def table(seed: int, config: SolverConfig, quick: bool = False) -> Iterator[Record]:
    """Instances from each polynomial class; the router must pick that class and agree with the oracle."""
    for name, g, problem, method in table_instances(seed, 4 if quick else 12):
        truth = Truth.of(g)
        yield _judge(name, g, problem, truth.answer(problem, g), config, want_method=method)


PRESETS: dict[str, Callable[..., Iterator[Record]]] = {
    "small-exhaustive": small_exhaustive,
    "line-roundtrip": line_roundtrip,
    "subcubic": subcubic,
    "cubic-families": cubic_families,
    "sat-reductions": sat_reductions,
    "table": table,
}


def run_preset(name: str, seed: int = 0, config: SolverConfig | None = None, quick: bool = False) -> Iterator[Record]:
    try:
        preset = PRESETS[name]
    except KeyError:
        raise StrongCliqueError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}") from None
    return preset(seed, config or SolverConfig(), quick)
