"""Definition-level brute force used as ground truth. Deliberately naive:
plain Python sets and itertools, no code shared with the package."""

from itertools import combinations, permutations


def adjacency(n, edges):
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def subsets(vs):
    vs = list(vs)
    for r in range(len(vs) + 1):
        yield from combinations(vs, r)


def is_independent(adj, s):
    return all(b not in adj[a] for a, b in combinations(s, 2))


def is_clique(adj, s):
    return all(b in adj[a] for a, b in combinations(s, 2))


def maximal_independent_sets(n, edges):
    adj = adjacency(n, edges)
    out = []
    for s in subsets(range(n)):
        if is_independent(adj, s) and all(v in s or adj[v] & set(s) for v in range(n)):
            out.append(tuple(s))
    return sorted(out)


def maximal_cliques(n, edges):
    adj = adjacency(n, edges)
    out = []
    for s in subsets(range(n)):
        if s and is_clique(adj, s) and not any(all(w in adj[v] for v in s) for w in set(range(n)) - set(s)):
            out.append(tuple(s))
    return sorted(out)


def strong_cliques(n, edges):
    mis = maximal_independent_sets(n, edges)
    return [c for c in maximal_cliques(n, edges) if all(set(c) & set(m) for m in mis)]


def matchings(edges):
    """Every matching, by branching on the first remaining edge."""
    edges = list(edges)

    def rec(i, used):
        if i == len(edges):
            yield []
            return
        yield from rec(i + 1, used)
        u, v = edges[i]
        if u not in used and v not in used:
            for rest in rec(i + 1, used | {u, v}):
                yield [edges[i]] + rest

    return rec(0, frozenset())


def max_matching_weight(edges, weight):
    return max(sum(weight[e] for e in m) for m in matchings(edges))


def isomorphic(n, e1, e2):
    if len(e1) != len(e2):
        return False
    target = {frozenset(e) for e in e2}
    return any({frozenset((p[u], p[v])) for u, v in e1} == target for p in permutations(range(n)))


def induced_cycles(n, edges, length):
    adj = adjacency(n, edges)
    for s in combinations(range(n), length):
        if all(len(adj[v] & set(s)) == 2 for v in s):
            # 2-regular on s: a single cycle iff connected
            seen, stack = {s[0]}, [s[0]]
            while stack:
                v = stack.pop()
                for w in adj[v] & set(s):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) == length:
                yield s


def localizable(n, edges):
    """Some partition of the vertices into strong cliques exists."""
    blocks = [set(c) for c in strong_cliques(n, edges)]

    def cover(left):
        if not left:
            return True
        v = min(left)
        return any(b <= left and cover(left - b) for b in blocks if v in b)

    return cover(set(range(n)))


def cliques(n, edges):
    adj = adjacency(n, edges)
    return [s for s in subsets(range(n)) if is_clique(adj, s)]
