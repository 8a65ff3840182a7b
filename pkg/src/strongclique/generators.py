"""3-SAT instances and the gadget graphs built from them.

The basic gadget has a clique of clause vertices and an edge per variable
joining its two literal vertices; a clause vertex sees the literals it
contains. The strengthened gadget adds a four-vertex widget per variable that
kills every maximal clique except the clause clique.

Vertex layout is fixed: clause vertices c1..cm first, then x1, ~x1, x2, ~x2,
..., then (in the strengthened variant) u_i, v_i, ~u_i, ~v_i per variable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .errors import AssumptionError, CnfParseError, StrongCliqueError
from .graph import Graph, VertexSet, build

Clause = tuple[int, int, int]


@dataclass(frozen=True)
class SatInstance:
    """3-CNF formula; literal +i is x_i and -i its negation (variables are 1-based)."""

    num_vars: int
    clauses: tuple[Clause, ...]

    def __post_init__(self) -> None:
        if self.num_vars < 1:
            raise StrongCliqueError("a formula needs at least one variable")
        for idx, clause in enumerate(self.clauses, 1):
            if len(clause) != 3:
                raise StrongCliqueError(f"clause {idx} has {len(clause)} literals, expected 3")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise StrongCliqueError(f"clause {idx}: literal {lit} out of range 1..{self.num_vars}")
            if len(set(clause)) != 3:
                raise StrongCliqueError(f"clause {idx} repeats a literal")
            if any(-lit in clause for lit in clause):
                raise AssumptionError("i", f"clause {idx} contains a variable and its negation")

    @property
    def every_literal_occurs(self) -> bool:
        seen = {lit for c in self.clauses for lit in c}
        return all(v in seen and -v in seen for v in range(1, self.num_vars + 1))

    @property
    def no_dominating_variable(self) -> bool:
        """No variable appears (either sign) in every clause."""
        return all(any(v not in map(abs, c) for c in self.clauses) for v in range(1, self.num_vars + 1))

    def check_assumptions(self) -> None:
        if not self.every_literal_occurs:
            raise AssumptionError("ii", "some literal occurs in no clause")
        if not self.no_dominating_variable:
            raise AssumptionError("iii", "some variable occurs in every clause")

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        """``assignment[i-1]`` is the value of x_i."""
        return all(any((lit > 0) == assignment[abs(lit) - 1] for lit in c) for c in self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        lines += [" ".join(map(str, c)) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class GadgetGraph:
    graph: Graph
    clause_clique: VertexSet
    literal_pairs: tuple[tuple[int, int], ...]
    variant: str  # "G" or "Gprime"
    roles: tuple[str, ...] = field(default=())

    def literal_vertex(self, lit: int) -> int:
        pos, neg = self.literal_pairs[abs(lit) - 1]
        return pos if lit > 0 else neg

    def label_lines(self) -> list[str]:
        """Sidecar lines ``vertex_id role name``."""
        return [f"{v} {self.roles[v]} {self.graph.label(v)}" for v in range(self.graph.n)]


def _base_layout(phi: SatInstance) -> tuple[list[tuple[int, int]], list[str], list[str], int]:
    m, n = len(phi.clauses), phi.num_vars
    names = [f"c{j + 1}" for j in range(m)]
    roles = ["clause"] * m
    edges = [(a, b) for a in range(m) for b in range(a + 1, m)]
    for i in range(1, n + 1):
        names += [f"x{i}", f"~x{i}"]
        roles += ["literal", "literal"]
        base = m + 2 * (i - 1)
        edges.append((base, base + 1))
    for j, clause in enumerate(phi.clauses):
        for lit in clause:
            edges.append((j, m + 2 * (abs(lit) - 1) + (0 if lit > 0 else 1)))
    return edges, names, roles, m + 2 * n


def sat_gadget(phi: SatInstance) -> GadgetGraph:
    """Formula satisfiable iff the clause clique is not strong."""
    edges, names, roles, size = _base_layout(phi)
    m = len(phi.clauses)
    g = build(size, edges).with_labels(names)
    pairs = tuple((m + 2 * i, m + 2 * i + 1) for i in range(phi.num_vars))
    return GadgetGraph(g, tuple(range(m)), pairs, "G", tuple(roles))


def sat_gadget_prime(phi: SatInstance) -> GadgetGraph:
    """Has a strong clique iff the formula is unsatisfiable (needs all three assumptions)."""
    phi.check_assumptions()
    edges, names, roles, size = _base_layout(phi)
    m = len(phi.clauses)
    for i in range(1, phi.num_vars + 1):
        x, nx = m + 2 * (i - 1), m + 2 * (i - 1) + 1
        u, v, nu, nv = size, size + 1, size + 2, size + 3
        size += 4
        names += [f"u{i}", f"v{i}", f"~u{i}", f"~v{i}"]
        roles += ["widget"] * 4
        edges += [(x, u), (x, v), (u, v), (u, nu), (u, nv), (v, nu), (nu, nv), (nx, nu), (nx, nv)]
    g = build(size, edges).with_labels(names)
    pairs = tuple((m + 2 * i, m + 2 * i + 1) for i in range(phi.num_vars))
    return GadgetGraph(g, tuple(range(m)), pairs, "Gprime", tuple(roles))


def sat_bruteforce(phi: SatInstance, limit: int = 24) -> tuple[bool, tuple[bool, ...] | None]:
    if phi.num_vars > limit:
        raise StrongCliqueError(f"{phi.num_vars} variables exceeds brute-force limit {limit}")
    for bits in product((False, True), repeat=phi.num_vars):
        if phi.satisfied_by(bits):
            return True, bits
    return False, None


def random_3sat(
    n: int,
    m: int,
    seed: int,
    enforce: Iterable[str] = ("i",),
    retries: int = 1000,
) -> SatInstance:
    """Uniform random 3-CNF with distinct variables per clause, resampled until the
    requested assumptions ("i", "ii", "iii") hold."""
    enforce = set(enforce)
    unknown = enforce - {"i", "ii", "iii"}
    if unknown:
        raise StrongCliqueError(f"unknown assumption(s) {sorted(unknown)}")
    if n < 3:
        raise StrongCliqueError("need at least 3 variables for distinct-variable clauses")
    rng = random.Random(seed)
    for _ in range(retries):
        clauses = []
        for _ in range(m):
            vs = rng.sample(range(1, n + 1), 3)
            clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
        phi = SatInstance(n, tuple(clauses))
        if "ii" in enforce and not phi.every_literal_occurs:
            continue
        if "iii" in enforce and not phi.no_dominating_variable:
            continue
        return phi
    raise StrongCliqueError(f"no instance with n={n}, m={m} met {sorted(enforce)} in {retries} tries")


def planted_unsat_3sat(
    n: int,
    m: int,
    seed: int,
    enforce: Iterable[str] = ("i",),
    retries: int = 1000,
) -> SatInstance:
    """Unsatisfiable 3-CNF: all eight sign patterns on three random variables,
    plus m - 8 random clauses, resampled until the requested assumptions hold."""
    if m < 8:
        raise StrongCliqueError("an unsatisfiable 3-CNF with distinct variables needs at least 8 clauses")
    enforce = set(enforce)
    rng = random.Random(seed)
    for _ in range(retries):
        core = rng.sample(range(1, n + 1), 3)
        clauses = [tuple(v if s else -v for v, s in zip(core, signs)) for signs in product((True, False), repeat=3)]
        for _ in range(m - 8):
            vs = rng.sample(range(1, n + 1), 3)
            clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
        rng.shuffle(clauses)
        phi = SatInstance(n, tuple(clauses))
        if "ii" in enforce and not phi.every_literal_occurs:
            continue
        if "iii" in enforce and not phi.no_dominating_variable:
            continue
        return phi
    raise StrongCliqueError(f"no planted instance with n={n}, m={m} met {sorted(enforce)} in {retries} tries")


def parse_dimacs_cnf(text: str) -> SatInstance:
    header = None
    clauses: list[tuple[int, ...]] = []
    pending: list[int] = []
    pending_line = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise CnfParseError(f"malformed header {line!r}", line=lineno)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise CnfParseError(f"malformed header {line!r}", line=lineno) from None
            continue
        if header is None:
            raise CnfParseError("clause before 'p cnf' header", line=lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise CnfParseError(f"bad literal {tok!r}", line=lineno) from None
            if not pending:
                pending_line = lineno
            if lit == 0:
                if len(pending) != 3:
                    raise CnfParseError(f"clause has {len(pending)} literals, expected 3", line=pending_line)
                clauses.append(tuple(pending))
                pending = []
                continue
            if abs(lit) > header[0]:
                raise CnfParseError(f"literal {lit} exceeds declared {header[0]} variables", line=lineno)
            pending.append(lit)
    if header is None:
        raise CnfParseError("missing 'p cnf' header")
    if pending:
        raise CnfParseError("clause not terminated by 0", line=pending_line)
    if len(clauses) != header[1]:
        raise CnfParseError(f"header declares {header[1]} clauses, found {len(clauses)}")
    for idx, clause in enumerate(clauses, 1):
        if any(-lit in clause for lit in clause):
            raise AssumptionError("i", f"clause {idx} contains a variable and its negation")
    return SatInstance(header[0], tuple(clauses))  # type: ignore[arg-type]
