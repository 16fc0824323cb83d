"""Simple undirected graphs and the connectivity primitives built on them.

Vertices are dense 0-based integers and edge ``i`` is the ``i``-th pair in
input order, so edge ids can be cross-referenced from drawing files.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DegenerateGraph, InvalidGraph, InvalidVertex, MultiEdge, SelfLoop

Edge = tuple[int, int]
VertexSet = tuple[int, ...]
Matching = tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    ``labels`` is set on derived graphs (induced subgraphs, neighbourhoods)
    and maps each local vertex id back to the id in the parent graph.
    """

    n: int
    edges: tuple[Edge, ...] = ()
    labels: tuple[int, ...] | None = field(default=None, compare=False)
    _adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)
    _index: dict[frozenset[int], int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise InvalidGraph(f"negative vertex count {self.n}")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        adj: list[set[int]] = [set() for _ in range(self.n)]
        index: dict[frozenset[int], int] = {}
        for i, (u, v) in enumerate(edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidVertex(f"edge {i} = ({u}, {v}) out of range 0..{self.n - 1}")
            if u == v:
                raise SelfLoop(f"edge {i} is a loop at {u}")
            key = frozenset((u, v))
            if key in index:
                raise MultiEdge(f"edge {i} = ({u}, {v}) duplicates edge {index[key]}")
            index[key] = i
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))
        object.__setattr__(self, "_index", index)
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        self.check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self._index

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self._index[frozenset((u, v))]
        except KeyError:
            raise InvalidGraph(f"no edge between {u} and {v}") from None

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise InvalidVertex(f"vertex {v!r} not in 0..{self.n - 1}")

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(_reach(self._adj, 0, set())) == self.n

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph on ``vertices`` (relabelled in sorted order)."""
        vs = vertex_set(self, vertices)
        local = {v: i for i, v in enumerate(vs)}
        edges = [
            (local[u], local[v])
            for u, v in self.edges
            if u in local and v in local
        ]
        return Graph(len(vs), tuple(edges), labels=vs)

    def without_edges(self, edge_ids: Iterable[int]) -> Graph:
        drop = set(edge_ids)
        return Graph(self.n, tuple(e for i, e in enumerate(self.edges) if i not in drop))

    def matching_vertices(self, matching: Iterable[int]) -> VertexSet:
        return tuple(sorted(v for i in matching for v in self.edges[i]))


def vertex_set(g: Graph, vertices: Iterable[int]) -> VertexSet:
    """Validate ``vertices`` against ``g`` and return them sorted, deduplicated."""
    vs = sorted(set(vertices))
    for v in vs:
        g.check_vertex(v)
    return tuple(vs)


def is_matching(g: Graph, edge_ids: Sequence[int]) -> bool:
    seen: set[int] = set()
    for i in edge_ids:
        if not 0 <= i < g.m:
            return False
        u, v = g.edges[i]
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def _reach(adj, start: int, blocked: set[int]) -> set[int]:
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for w in adj[v]:
            if w not in seen and w not in blocked:
                seen.add(w)
                todo.append(w)
    return seen


def components_with_parity(
    g: Graph, removed: Iterable[int] = ()
) -> list[tuple[VertexSet, bool]]:
    """Components of ``g - removed``, each flagged odd iff its order is odd.

    Components are ordered by their smallest vertex.
    """
    blocked = set(vertex_set(g, removed))
    seen: set[int] = set(blocked)
    out = []
    for v in range(g.n):
        if v in seen:
            continue
        comp = _reach(g._adj, v, blocked)
        seen |= comp
        out.append((tuple(sorted(comp)), len(comp) % 2 == 1))
    return out


def induced_neighborhood(g: Graph, v: int) -> Graph:
    """G[N(v)], with ``labels`` mapping back to ids of ``g``."""
    return g.induced(g.neighbors(v))


def local_connectivity(g: Graph, s: int, t: int, cutoff: int | None = None) -> int:
    """Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent).

    Unit-capacity max flow on the vertex-split digraph; stops once the flow
    reaches ``cutoff``.
    """
    if g.has_edge(s, t):
        raise InvalidGraph(f"{s} and {t} are adjacent")
    # node 2v is v_in, 2v+1 is v_out
    res: dict[int, dict[int, int]] = {x: {} for x in range(2 * g.n)}
    for v in range(g.n):
        if v not in (s, t):
            res[2 * v][2 * v + 1] = 1
            res[2 * v + 1].setdefault(2 * v, 0)
    for u, v in g.edges:
        for a, b in ((u, v), (v, u)):
            res[2 * a + 1][2 * b] = 1
            res[2 * b].setdefault(2 * a + 1, 0)
    source, sink = 2 * s + 1, 2 * t
    limit = cutoff if cutoff is not None else g.n
    flow = 0
    while flow < limit:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            x = queue.popleft()
            for y, cap in res[x].items():
                if cap > 0 and y not in parent:
                    parent[y] = x
                    queue.append(y)
        if sink not in parent:
            break
        y = sink
        while y != source:
            x = parent[y]
            res[x][y] -= 1
            res[y][x] += 1
            y = x
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """Vertex connectivity (Esfahanian-Hakimi pair selection + max flow).

    Complete graphs return ``n - 1``; disconnected graphs return 0.
    """
    if g.n < 2:
        raise DegenerateGraph("vertex connectivity needs at least 2 vertices")
    if g.is_complete():
        return g.n - 1
    degs = g.degrees()
    v = min(range(g.n), key=degs.__getitem__)
    best = degs[v]
    nbrs = g.neighbors(v)
    for w in range(g.n):
        if w != v and w not in nbrs:
            best = min(best, local_connectivity(g, v, w, cutoff=best))
            if best == 0:
                return 0
    for x, y in combinations(sorted(nbrs), 2):
        if not g.has_edge(x, y):
            best = min(best, local_connectivity(g, x, y, cutoff=best))
    return best
