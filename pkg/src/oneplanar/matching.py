"""Matchings, perfect-matching counting and the extendability deciders.

All sweeps are lexicographic so that reported witnesses are the first
failure in a fixed order, whatever the number of worker processes.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import (
    InvalidParameter,
    NoNMatching,
    NotConnected,
    ParityMismatch,
    ResourceLimit,
    TheoremViolation,
    TooFewVertices,
)
from .graph import Graph, Matching, VertexSet, induced_neighborhood

DEFAULT_MAX_NODES = 2_000_000


@dataclass(frozen=True)
class DeanCertificate:
    """Vertex of degree n + t whose neighbourhood contains a t-matching."""

    vertex: int
    t: int
    matching: Matching


@dataclass(frozen=True)
class ExtendabilityVerdict:
    extendable: bool
    witness: Matching | None
    checked_count: int
    certificate: DeanCertificate | None = None


@dataclass(frozen=True)
class CriticalityVerdict:
    critical: bool
    witness: VertexSet | None
    checked_count: int = 0


# -- maximum matching -------------------------------------------------------


def _blossom_mate(n: int, adj: list[list[int]]) -> list[int]:
    """Edmonds' blossom algorithm on adjacency lists; returns the mate array."""
    mate = [-1] * n
    for v in range(n):
        if mate[v] == -1:
            for w in adj[v]:
                if mate[w] == -1:
                    mate[v], mate[w] = w, v
                    break

    for root in range(n):
        if mate[root] != -1:
            continue
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = [root]
        head = 0
        found = -1

        def lca(a: int, b: int) -> int:
            marked = [False] * n
            while True:
                a = base[a]
                marked[a] = True
                if mate[a] == -1:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if marked[b]:
                    return b
                b = parent[mate[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while head < len(queue) and found == -1:
            v = queue[head]
            head += 1
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        found = to
                        break
                    used[mate[to]] = True
                    queue.append(mate[to])
        v = found
        while v != -1:
            pv = parent[v]
            nxt = mate[pv]
            mate[v], mate[pv] = pv, v
            v = nxt
    return mate


def _local_adjacency(g: Graph, alive: list[int]) -> list[list[int]]:
    local = {v: i for i, v in enumerate(alive)}
    return [sorted(local[w] for w in g.neighbors(v) if w in local) for v in alive]


def maximum_matching(g: Graph) -> Matching:
    """Maximum-cardinality matching as sorted edge ids."""
    mate = _blossom_mate(g.n, [sorted(g.neighbors(v)) for v in range(g.n)])
    return tuple(sorted(g.edge_id(v, w) for v, w in enumerate(mate) if v < w))


def matching_number(g: Graph, removed: frozenset[int] | set[int] = frozenset()) -> int:
    alive = [v for v in range(g.n) if v not in removed]
    mate = _blossom_mate(len(alive), _local_adjacency(g, alive))
    return sum(1 for w in mate if w != -1) // 2


def has_perfect_matching(g: Graph, removed: frozenset[int] | set[int] = frozenset()) -> bool:
    """Whether ``g - removed`` has a perfect matching."""
    size = g.n - len(removed)
    if size % 2:
        return False
    return 2 * matching_number(g, removed) == size


def count_perfect_matchings(g: Graph, max_nodes: int = DEFAULT_MAX_NODES) -> int:
    """Exact number of perfect matchings.

    Branches on a minimum-degree vertex of the residual graph and memoises on
    the residual vertex set. Raises ResourceLimit past ``max_nodes`` calls.
    """
    if g.n % 2:
        return 0
    nbr = [sum(1 << w for w in g.neighbors(v)) for v in range(g.n)]
    memo: dict[int, int] = {0: 1}
    nodes = 0

    def count(mask: int) -> int:
        nonlocal nodes
        if mask in memo:
            return memo[mask]
        nodes += 1
        if nodes > max_nodes:
            raise ResourceLimit(f"perfect-matching count exceeded {max_nodes} nodes")
        best, best_deg = -1, None
        rest = mask
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            d = bin(nbr[v] & mask).count("1")
            if best_deg is None or d < best_deg:
                best, best_deg = v, d
                if d == 0:
                    break
        total = 0
        if best_deg:
            without = mask & ~(1 << best)
            choices = nbr[best] & mask
            while choices:
                low = choices & -choices
                choices ^= low
                total += count(without & ~low)
        memo[mask] = total
        return total

    return count((1 << g.n) - 1)


# -- n-matchings and extendability -------------------------------------------


def _matchings_from(g: Graph, n: int, start: int, used: int, prefix: list[int]) -> Iterator[Matching]:
    if len(prefix) == n:
        yield tuple(prefix)
        return
    need = n - len(prefix)
    for i in range(start, g.m - need + 1):
        u, v = g.edges[i]
        bits = (1 << u) | (1 << v)
        if used & bits:
            continue
        prefix.append(i)
        yield from _matchings_from(g, n, i + 1, used | bits, prefix)
        prefix.pop()


def enumerate_n_matchings(g: Graph, n: int) -> Iterator[Matching]:
    """Every n-matching exactly once, lexicographic in sorted edge ids."""
    if n < 0:
        raise InvalidParameter(f"n must be >= 0, got {n}")
    return _matchings_from(g, n, 0, 0, [])


def _sweep_first_edge(g: Graph, n: int, first: int) -> tuple[int, Matching | None]:
    """Check all n-matchings whose smallest edge id is ``first``."""
    cache: dict[int, bool] = {}
    checked = 0
    u, v = g.edges[first]
    for rest in _matchings_from(g, n, first + 1, (1 << u) | (1 << v), [first]):
        checked += 1
        covered = frozenset(g.matching_vertices(rest))
        key = sum(1 << x for x in covered)
        ok = cache.get(key)
        if ok is None:
            ok = cache[key] = has_perfect_matching(g, covered)
        if not ok:
            return checked, rest
    return checked, None


def _sweep(g: Graph, n: int, jobs: int) -> tuple[int, Matching | None]:
    if n == 0:
        return 1, (None if has_perfect_matching(g) else ())
    firsts = range(g.m)
    checked = 0
    if jobs <= 1:
        results = (_sweep_first_edge(g, n, i) for i in firsts)
        for count, witness in results:
            checked += count
            if witness is not None:
                return checked, witness
        return checked, None
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_sweep_first_edge, g, n, i) for i in firsts]
        try:
            for fut in futures:
                count, witness = fut.result()
                checked += count
                if witness is not None:
                    return checked, witness
        finally:
            for fut in futures:
                fut.cancel()
    return checked, None


def is_n_extendable(g: Graph, n: int, jobs: int = 1) -> ExtendabilityVerdict:
    """Decide n-extendability by sweeping every n-matching.

    Each residual graph ``g - V(M)`` is tested for a perfect matching, cached
    on the covered vertex set. The witness on failure is the
    lexicographically first non-extendable n-matching. A neighbourhood
    certificate (see :func:`dean_certificate`), when one exists, is attached
    as a fast negative.
    """
    if n < 0:
        raise InvalidParameter(f"n must be >= 0, got {n}")
    if not g.is_connected():
        raise NotConnected("n-extendability is defined for connected graphs")
    if g.n < 2 * n + 2:
        raise TooFewVertices(f"{g.n} vertices < 2n+2 = {2 * n + 2}")
    if matching_number(g) < n:
        raise NoNMatching(f"graph has no {n}-matching")
    cert = dean_certificate(g, n)
    checked, witness = _sweep(g, n, jobs)
    if cert is not None and witness is None:
        raise TheoremViolation(f"certificate {cert} contradicts exhaustive sweep")
    return ExtendabilityVerdict(witness is None, witness, checked, cert)


# -- factor-criticality -------------------------------------------------------


def _critical_first_vertex(g: Graph, k: int, first: int) -> tuple[int, VertexSet | None]:
    checked = 0
    for rest in combinations(range(first + 1, g.n), k - 1):
        checked += 1
        s = (first, *rest)
        if not has_perfect_matching(g, frozenset(s)):
            return checked, s
    return checked, None


def is_k_factor_critical(g: Graph, k: int, jobs: int = 1) -> CriticalityVerdict:
    """Decide whether deleting any k vertices leaves a perfectly matchable graph."""
    if not 0 <= k < g.n:
        raise InvalidParameter(f"k must satisfy 0 <= k < {g.n}, got {k}")
    if (g.n + k) % 2:
        raise ParityMismatch(f"|V| + k = {g.n + k} is odd")
    if k == 0:
        ok = has_perfect_matching(g)
        return CriticalityVerdict(ok, None if ok else (), 1)
    checked = 0
    if jobs <= 1:
        for first in range(g.n):
            count, witness = _critical_first_vertex(g, k, first)
            checked += count
            if witness is not None:
                return CriticalityVerdict(False, witness, checked)
        return CriticalityVerdict(True, None, checked)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_critical_first_vertex, g, k, v) for v in range(g.n)]
        try:
            for fut in futures:
                count, witness = fut.result()
                checked += count
                if witness is not None:
                    return CriticalityVerdict(False, witness, checked)
        finally:
            for fut in futures:
                fut.cancel()
    return CriticalityVerdict(True, None, checked)


# -- certificates and bounds --------------------------------------------------


def dean_certificate(g: Graph, n: int) -> DeanCertificate | None:
    """First vertex v with a (d(v) - n)-matching inside G[N(v)], if any.

    Such a vertex certifies that ``g`` is not n-extendable. ``None`` proves
    nothing.
    """
    if n < 0:
        raise InvalidParameter(f"n must be >= 0, got {n}")
    for v in range(g.n):
        d = g.degree(v)
        if d < n:
            continue
        t = d - n
        if t > d // 2:
            continue
        nb = induced_neighborhood(g, v)
        local = maximum_matching(nb)
        if len(local) >= t:
            ids = sorted(
                g.edge_id(nb.labels[a], nb.labels[b])
                for a, b in (nb.edges[i] for i in local)
            )
            return DeanCertificate(v, t, tuple(ids[:t]))
    return None


def criticality_bound(min_degree: int, order: int, degrees_even: bool = False) -> int:
    """Largest k a graph with these parameters could be k-factor-critical for.

    Uses k-factor-critical => (k+1)-edge-connected => min degree >= k+1, and
    when all degrees are even and k+1 is odd, min degree >= k+2.
    """
    for k in range(min(min_degree - 1, order - 1), -1, -1):
        if (k - order) % 2:
            continue
        if degrees_even and (k + 1) % 2 and min_degree < k + 2:
            continue
        return k
    return 0


def criticality_upper_bound(g: Graph, degrees_even: bool | None = None) -> int:
    """:func:`criticality_bound` for ``g``; ``degrees_even`` defaults to the truth."""
    if degrees_even is None:
        degrees_even = all(d % 2 == 0 for d in g.degrees())
    return criticality_bound(g.min_degree(), g.n, degrees_even)
