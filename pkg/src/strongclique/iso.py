"""Canonical labelling and isomorphism for small graphs.

Individualization-refinement: equitable colour refinement, then branch on the
first non-singleton cell. Twins (vertices with equal open or closed
neighbourhoods) are interchangeable, so only one per twin class is branched
on. Good for the n <= 20 graphs the test campaigns use; no attempt is made at
nauty-style automorphism pruning.
"""

from __future__ import annotations

from .graph import Graph, disjoint_union, iter_bits

Certificate = tuple[int, tuple[int, ...]]


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    while True:
        cell_mask = [sum(1 << v for v in cell) for cell in cells]
        out: list[list[int]] = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                a = g.adj[v]
                sig = tuple((a & m).bit_count() for m in cell_mask)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                split = True
                for sig in sorted(groups):
                    out.append(groups[sig])
            else:
                out.append(cell)
        cells = out
        if not split:
            return cells


def _leaf_certificate(g: Graph, cells: list[list[int]]) -> tuple[tuple[int, ...], list[int]]:
    pos = [0] * g.n
    for i, cell in enumerate(cells):
        pos[cell[0]] = i
    relabeled = [0] * g.n
    for v in range(g.n):
        relabeled[pos[v]] = sum(1 << pos[w] for w in iter_bits(g.adj[v]))
    return tuple(relabeled), pos


def _twin_representatives(g: Graph, cell: list[int]) -> list[int]:
    reps: list[int] = []
    for v in cell:
        # N(r) - v == N(v) - r covers both adjacent and non-adjacent twins
        if any((g.adj[r] & ~(1 << v)) == (g.adj[v] & ~(1 << r)) for r in reps):
            continue
        reps.append(v)
    return reps


def canonical_labeling(g: Graph) -> tuple[Certificate, list[int]]:
    """Return (certificate, pos) where ``pos[v]`` is v's canonical position.

    Two graphs are isomorphic iff their certificates are equal.
    """
    if g.n == 0:
        return (0, ()), []
    initial: dict[int, list[int]] = {}
    for v in range(g.n):
        initial.setdefault(g.degree(v), []).append(v)
    cells = _refine(g, [initial[d] for d in sorted(initial)])

    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            cert, pos = _leaf_certificate(g, cells)
            if best[0] is None or cert > best[0]:
                best[0], best[1] = cert, pos
            return
        cell = cells[target]
        for v in _twin_representatives(g, cell):
            rest = [w for w in cell if w != v]
            search(_refine(g, cells[:target] + [[v], rest] + cells[target + 1:]))

    search(cells)
    return (g.n, best[0]), best[1]


def canonical_form(g: Graph) -> Certificate:
    return canonical_labeling(g)[0]


def find_isomorphism(g1: Graph, g2: Graph) -> dict[int, int] | None:
    """An isomorphism g1 -> g2 as a vertex map, or None.

    Refines the disjoint union of both graphs and individualizes a g1 vertex
    against each same-coloured g2 vertex; a cell with unequal numbers of g1
    and g2 vertices kills the branch. Stops at the first complete match, so
    symmetric isomorphic pairs are cheap.
    """
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    n = g1.n
    if n == 0:
        return {}
    union = disjoint_union(g1, g2)

    def balanced(cells: list[list[int]]) -> bool:
        return all(2 * sum(1 for v in c if v < n) == len(c) for c in cells)

    initial: dict[int, list[int]] = {}
    for v in range(2 * n):
        initial.setdefault(union.degree(v), []).append(v)
    cells = _refine(union, [initial[d] for d in sorted(initial)])
    if not balanced(cells):
        return None

    def search(cells: list[list[int]]) -> dict[int, int] | None:
        target = next((i for i, c in enumerate(cells) if len(c) > 2), None)
        if target is None:
            mapping = {}
            for c in cells:
                a, b = sorted(c)
                mapping[a] = b - n
            return mapping if is_isomorphism(g1, g2, mapping) else None
        cell = cells[target]
        v = min(cell)
        for w in (x for x in cell if x >= n):
            rest = [x for x in cell if x not in (v, w)]
            refined = _refine(union, cells[:target] + [[v, w], rest] + cells[target + 1:])
            if balanced(refined):
                found = search(refined)
                if found is not None:
                    return found
        return None

    return search(cells)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None


def is_isomorphism(g1: Graph, g2: Graph, mapping: dict[int, int]) -> bool:
    if g1.n != g2.n or sorted(mapping) != list(range(g1.n)) or sorted(mapping.values()) != list(range(g2.n)):
        return False
    return all(g2.has_edge(mapping[u], mapping[v]) for u, v in g1.edges()) and g1.m == g2.m
