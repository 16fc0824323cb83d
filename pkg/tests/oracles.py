"""Brute-force reference implementations, deliberately naive.

Nothing here imports the algorithms under test except the Graph container.
"""

from __future__ import annotations

import random
from itertools import combinations

from oneplanar.graph import Graph


def all_matchings(g: Graph):
    """Every matching (as a sorted tuple of edge ids), including the empty one."""
    out = []

    def rec(i, used, cur):
        if i == g.m:
            out.append(tuple(cur))
            return
        rec(i + 1, used, cur)
        u, v = g.edges[i]
        if u not in used and v not in used:
            cur.append(i)
            rec(i + 1, used | {u, v}, cur)
            cur.pop()

    rec(0, frozenset(), [])
    return out


def brute_matching_number(g: Graph) -> int:
    return max(len(m) for m in all_matchings(g))


def brute_pm_count(g: Graph) -> int:
    return sum(1 for m in all_matchings(g) if 2 * len(m) == g.n)


def brute_has_pm_after(g: Graph, removed) -> bool:
    removed = set(removed)
    for m in all_matchings(g):
        covered = {x for i in m for x in g.edges[i]}
        if not covered & removed and len(covered) == g.n - len(removed):
            return True
    return g.n == len(removed)


def brute_connected(n, adj, alive) -> bool:
    alive = list(alive)
    if not alive:
        return True
    seen = {alive[0]}
    todo = [alive[0]]
    alive_set = set(alive)
    while todo:
        v = todo.pop()
        for w in adj[v]:
            if w in alive_set and w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == len(alive)


def brute_connectivity(g: Graph) -> int:
    """Smallest vertex set whose removal disconnects g (n - 1 if complete)."""
    adj = [set() for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    for k in range(g.n - 1):
        for cut in combinations(range(g.n), k):
            rest = [v for v in range(g.n) if v not in cut]
            if len(rest) >= 2 and not brute_connected(g.n, adj, rest):
                return k
    return g.n - 1


def brute_n_extendable(g: Graph, n: int):
    """(extendable, lexicographically first failing n-matching)."""
    ms = sorted(m for m in all_matchings(g) if len(m) == n)
    for m in ms:
        covered = {x for i in m for x in g.edges[i]}
        if not brute_has_pm_after(g, covered):
            return False, m
    return True, None


def double_factorial_odd(k: int) -> int:
    out = 1
    for j in range(1, 2 * k, 2):
        out *= j
    return out


def complete(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def cycle(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def cocktail_party(k: int) -> Graph:
    """K_{2,...,2} with k parts: vertex i is non-adjacent only to i ^ 1."""
    n = 2 * k
    return Graph(n, tuple((u, v) for u, v in combinations(range(n), 2) if u ^ 1 != v))


def wheel(rim: int) -> Graph:
    """Hub 0 and rim 1..rim."""
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Graph(rim + 1, tuple(edges))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    """G(n, p) conditioned on connectivity by adding a random spanning tree."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {frozenset((order[i], order[rng.randrange(i)])) for i in range(1, n)}
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            edges.add(frozenset((u, v)))
    return Graph(n, tuple(sorted(tuple(sorted(e)) for e in edges)))


def random_suite(count: int = 500, seed: int = 20240611, max_n: int = 12):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(2, max_n)
        out.append(random_connected_graph(rng, n, rng.uniform(0.15, 0.95)))
    return out
