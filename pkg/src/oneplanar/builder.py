"""Optimal 1-planar graphs from quadrangulations, and what to do with them.

Adding both diagonals to every face of a 3-connected quadrangulation of the
sphere gives an optimal 1-planar drawing; the diagonals of each face are its
crossing pair. This module also holds the fixture generators, the barrier
cycle search and the non-extendable 3-matching extractor.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Literal, Sequence

import networkx as nx

from .drawing import (
    AssociatedPlaneGraph,
    Face,
    OnePlanarDrawing,
    build_associated,
    edge_rotation,
    q_of,
    trace_faces,
)
from .errors import (
    InvalidGraph,
    InvalidParameter,
    ModelInconsistency,
    NoDegreeSixVertex,
    NotOptimal,
    NotPlanarizable,
    NotThreeConnected,
    PreconditionFailed,
    ResourceLimit,
    TheoremViolation,
)
from .graph import Graph, Matching, VertexSet, components_with_parity, is_matching, vertex_connectivity
from .matching import has_perfect_matching

DEFAULT_MAX_CYCLES = 200_000


@dataclass(frozen=True)
class Quadrangulation:
    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    faces: tuple[Face, ...]


def embed(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Some planar rotation system of ``g`` (unique up to mirror if 3-connected)."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    planar, emb = nx.check_planarity(h)
    if not planar:
        raise NotPlanarizable("graph is not planar")
    return tuple(tuple(emb.neighbors_cw_order(v)) for v in range(g.n))


def make_quadrangulation(g: Graph, rotation: Sequence[Sequence[int]] | None = None) -> Quadrangulation:
    """Wrap a plane graph, checking that every face is a 4-cycle."""
    if rotation is None:
        rotation = embed(g)
    rotation = tuple(tuple(r) for r in rotation)
    faces = trace_faces(g, rotation)
    for f in faces:
        if f.degree != 4 or len(set(f.boundary)) != 4:
            raise InvalidGraph(f"face {f.boundary} is not bounded by a 4-cycle")
    return Quadrangulation(g, rotation, tuple(faces))


def cube() -> Graph:
    return Graph(8, tuple((u, u | b) for u in range(8) for b in (1, 2, 4) if not u & b))


def pseudo_double_wheel(n: int) -> Graph:
    """Cycle x_0..x_{2n-1} with pole 2n on even and pole 2n+1 on odd indices."""
    if n < 3:
        raise InvalidParameter(f"pseudo double wheel needs n >= 3, got {n}")
    k = 2 * n
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k, i) for i in range(0, k, 2)]
    edges += [(k + 1, i) for i in range(1, k, 2)]
    return Graph(k + 2, tuple(edges))


def generate_quadrangulation(family: str, n: int | None = None) -> Quadrangulation:
    """Fixture quadrangulation: ``"cube"`` or ``"pseudo_double_wheel"`` (needs n)."""
    if family == "cube":
        g = cube()
    elif family in ("pseudo_double_wheel", "pdw"):
        if n is None:
            raise InvalidParameter("pseudo_double_wheel needs n")
        g = pseudo_double_wheel(n)
    else:
        raise InvalidParameter(f"unknown quadrangulation family {family!r}")
    return make_quadrangulation(g)


def optimal_from_quadrangulation(h: Quadrangulation, check_connectivity: bool = True) -> OnePlanarDrawing:
    """Add both diagonals inside every face; each face's pair crosses.

    The quadrangulation's edges keep their ids, diagonals follow face by
    face. Raises NotThreeConnected up front, or MultiEdge from the graph
    constructor if the check is skipped and a diagonal repeats.
    """
    g = h.graph
    if check_connectivity and vertex_connectivity(g) < 3:
        raise NotThreeConnected("quadrangulation is not 3-connected")
    edges = list(g.edges)
    crossings = []
    for f in h.faces:
        c = f.boundary
        crossings.append((len(edges), len(edges) + 1))
        edges += [(c[0], c[2]), (c[1], c[3])]
    graph = Graph(g.n, tuple(edges))

    face_at = {}
    for fi, f in enumerate(h.faces):
        for dart in f.darts():
            face_at[dart] = g.n + fi
    rotation = []
    for v in range(g.n):
        rot = []
        for u in h.rotation[v]:
            rot += [u, face_at[(u, v)]]
        rotation.append(tuple(rot))
    rotation += [f.boundary[::-1] for f in h.faces]
    return OnePlanarDrawing(graph, tuple(crossings), tuple(rotation))


def optimal_fixture(family: str, n: int | None = None) -> OnePlanarDrawing:
    return optimal_from_quadrangulation(generate_quadrangulation(family, n))


# -- barrier cycles ---------------------------------------------------------


@dataclass(frozen=True)
class BarrierCycle:
    """Non-crossing cycle separating two odd components.

    ``inside`` is the component on the side swept by the rotation at each
    cycle vertex from its successor round to its predecessor.
    """

    cycle: tuple[int, ...]
    inside: VertexSet
    outside: VertexSet


def _cycles(adj: dict[int, list[int]], max_len: int) -> Iterator[tuple[int, ...]]:
    """Simple cycles of length 3..max_len, each once (min vertex first, then
    the smaller of its two neighbours on the cycle)."""
    for s in sorted(adj):
        path = [s]
        on = {s}

        def dfs(v: int) -> Iterator[tuple[int, ...]]:
            for w in adj[v]:
                if w == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        yield tuple(path)
                elif w > s and w not in on and len(path) < max_len:
                    path.append(w)
                    on.add(w)
                    yield from dfs(w)
                    on.discard(w)
                    path.pop()

        yield from dfs(s)


def _sides(a: AssociatedPlaneGraph, cycle: Sequence[int]) -> dict[int, int]:
    """Map every plane vertex off the cycle to side 0 or 1 of it."""
    on = set(cycle)
    seeds = []
    k = len(cycle)
    for i, c in enumerate(cycle):
        prev, nxt = cycle[i - 1], cycle[(i + 1) % k]
        rot = a.rotation[c]
        j = rot.index(nxt)
        side = 0
        for step in range(1, len(rot)):
            w = rot[(j + step) % len(rot)]
            if w == prev:
                side = 1
            elif w not in on:
                seeds.append((w, side))
    side_of: dict[int, int] = {}
    for w, side in seeds:
        if w in side_of:
            if side_of[w] != side:
                raise ModelInconsistency(f"vertex {w} lies on both sides of cycle {tuple(cycle)}")
            continue
        side_of[w] = side
        todo = [w]
        while todo:
            x = todo.pop()
            for y in a.plane.neighbors(x):
                if y in on:
                    continue
                if y in side_of:
                    if side_of[y] != side:
                        raise ModelInconsistency(f"cycle {tuple(cycle)} does not separate the sphere")
                    continue
                side_of[y] = side
                todo.append(y)
    return side_of


def _barrier(d: OnePlanarDrawing, a: AssociatedPlaneGraph, cycle: tuple[int, ...]) -> BarrierCycle | None:
    comps = components_with_parity(d.graph, cycle)
    if len(comps) != 2 or not (comps[0][1] and comps[1][1]):
        return None
    side_of = _sides(a, cycle)
    sides = [side_of[comp[0]] for comp, _ in comps]
    if sides[0] == sides[1]:
        return None
    inside, outside = (comps[0][0], comps[1][0]) if sides[0] == 0 else (comps[1][0], comps[0][0])
    return BarrierCycle(cycle, inside, outside)


def _noncrossing_adjacency(d: OnePlanarDrawing, vertices: set[int] | None = None) -> dict[int, list[int]]:
    q = q_of(d)
    keep = set(range(d.n)) if vertices is None else vertices
    return {v: sorted(w for w in q.neighbors(v) if w in keep) for v in sorted(keep)}


def barrier_cycle_search(
    d: OnePlanarDrawing,
    max_len: int,
    max_cycles: int = DEFAULT_MAX_CYCLES,
    a: AssociatedPlaneGraph | None = None,
) -> list[BarrierCycle]:
    """All barrier cycles of length at most ``max_len``, by (length, cycle)."""
    if max_len < 3:
        raise InvalidParameter(f"max_len must be >= 3, got {max_len}")
    if a is None:
        a = build_associated(d)
    found = []
    for count, cycle in enumerate(_cycles(_noncrossing_adjacency(d), max_len), 1):
        if count > max_cycles:
            raise ResourceLimit(f"more than {max_cycles} cycles enumerated")
        barrier = _barrier(d, a, cycle)
        if barrier is not None:
            found.append(barrier)
    return sorted(found, key=lambda b: (len(b.cycle), b.cycle))


# -- 3-matchings --------------------------------------------------------------


def three_matching_witness(d: OnePlanarDrawing, a: AssociatedPlaneGraph | None = None) -> Matching:
    """A 3-matching covering all neighbours of a degree-6 vertex.

    Around a 6-vertex of an optimal drawing the edges alternate crossing and
    non-crossing, so consecutive neighbours (starting after a non-crossing
    edge) span the three quadrangle edges ``v1v2, v3v4, v5v6``.
    """
    g = d.graph
    if not d.is_optimal():
        raise NotOptimal(f"|E| = {g.m} but 4|V| - 8 = {4 * g.n - 8}")
    v = next((x for x in range(g.n) if g.degree(x) == 6), None)
    if v is None:
        raise NoDegreeSixVertex("optimal drawing without a degree-6 vertex")
    rot = edge_rotation(d, a)[v]
    crossing = d.crossing_edges()
    flags = [e in crossing for e in rot]
    if any(flags[i] == flags[(i + 1) % 6] for i in range(6)):
        raise ModelInconsistency(f"edges around {v} do not alternate")
    start = flags.index(False)
    nbrs = [next(x for x in g.edges[rot[(start + i) % 6]] if x != v) for i in range(6)]
    try:
        return tuple(sorted(g.edge_id(nbrs[i], nbrs[i + 1]) for i in (0, 2, 4)))
    except InvalidGraph as exc:
        raise ModelInconsistency(f"neighbours of {v} miss a quadrangle edge: {exc}") from None


@dataclass(frozen=True)
class Classification:
    kind: Literal["extendable", "blocked_by_barrier"]
    barrier: BarrierCycle | None = None


def classify_3matching(d: OnePlanarDrawing, m: Sequence[int], a: AssociatedPlaneGraph | None = None) -> Classification:
    """Extendable, or blocked by a barrier 6-cycle through exactly V(m).

    Applies to 5-connected optimal drawings of even order; raises
    TheoremViolation if a blocked matching has no such barrier cycle.
    """
    g = d.graph
    m = tuple(sorted(m))
    if len(m) != 3 or not is_matching(g, m):
        raise PreconditionFailed(f"{m} is not a 3-matching")
    if not d.is_optimal():
        raise PreconditionFailed("drawing is not optimal")
    if g.n % 2:
        raise PreconditionFailed("odd order")
    if vertex_connectivity(g) < 5:
        raise PreconditionFailed("graph is not 5-connected")
    covered = g.matching_vertices(m)
    if has_perfect_matching(g, frozenset(covered)):
        return Classification("extendable")
    if a is None:
        a = build_associated(d)
    for cycle in _cycles(_noncrossing_adjacency(d, set(covered)), 6):
        if len(cycle) == 6:
            barrier = _barrier(d, a, cycle)
            if barrier is not None:
                return Classification("blocked_by_barrier", barrier)
    raise TheoremViolation(f"3-matching {m} is blocked but no barrier 6-cycle spans its vertices")


# -- random drawings --------------------------------------------------------


def random_drawing(
    rng: random.Random,
    n: int,
    extra_steps: int = 0,
    crossing_weight: float = 0.4,
) -> OnePlanarDrawing:
    """Random connected 1-planar drawing with an explicit rotation system.

    Grows a plane graph from a triangle by inserting vertices into faces and
    adding chords. A face with at least four distinct true corners may
    instead receive a crossing: a false vertex joined to four of its corners,
    i.e. two chords crossing once. ``extra_steps`` further chord or crossing
    moves run after the last vertex is placed.
    """
    if n < 3:
        raise InvalidParameter(f"random drawings need n >= 3, got {n}")
    rot: dict[int, list[int]] = {0: [1, 2], 1: [2, 0], 2: [0, 1]}
    gedges: list[tuple[int, int]] = [(0, 1), (1, 2), (2, 0)]
    gset = {frozenset(e) for e in gedges}
    crossings: list[tuple[int, int]] = []
    next_true = 3
    next_false = -1  # false vertices get negative keys until relabelling

    def faces() -> list[list[int]]:
        seen, out = set(), []
        for v, nbrs in rot.items():
            for u in nbrs:
                if (u, v) in seen:
                    continue
                walk, (a, b) = [], (u, v)
                while (a, b) not in seen:
                    seen.add((a, b))
                    walk.append(a)
                    r = rot[b]
                    a, b = b, r[(r.index(a) + 1) % len(r)]
                out.append(walk)
        return out

    def insert_after(c: int, pred: int, new: int) -> None:
        r = rot[c]
        r.insert(r.index(pred) + 1, new)

    def corners(walk: list[int]) -> list[tuple[int, int]]:
        # (walk position, vertex) for true vertices, first occurrence only
        out, seen = [], set()
        for i, v in enumerate(walk):
            if v >= 0 and v not in seen:
                seen.add(v)
                out.append((i, v))
        return out

    def add_vertex(walk: list[int]) -> bool:
        nonlocal next_true
        cs = corners(walk)
        k = min(len(cs), rng.choice((1, 1, 2, 2, 3)))
        chosen = sorted(rng.sample(cs, k))
        z = next_true
        next_true += 1
        for i, c in chosen:
            insert_after(c, walk[i - 1], z)
            gedges.append((c, z))
            gset.add(frozenset((c, z)))
        rot[z] = [c for _, c in reversed(chosen)]
        return True

    def add_chord(walk: list[int]) -> bool:
        cs = corners(walk)
        options = [
            (p, q) for p in cs for q in cs
            if p[0] < q[0] and frozenset((p[1], q[1])) not in gset
        ]
        if not options:
            return False
        (i, ci), (j, cj) = rng.choice(options)
        insert_after(ci, walk[i - 1], cj)
        insert_after(cj, walk[j - 1], ci)
        gedges.append((ci, cj))
        gset.add(frozenset((ci, cj)))
        return True

    def add_crossing(walk: list[int]) -> bool:
        nonlocal next_false
        cs = corners(walk)
        if len(cs) < 4:
            return False
        chosen = sorted(rng.sample(cs, 4))
        c = [v for _, v in chosen]
        d1, d2 = frozenset((c[0], c[2])), frozenset((c[1], c[3]))
        if d1 in gset or d2 in gset:
            return False
        x = next_false
        next_false -= 1
        for i, v in chosen:
            insert_after(v, walk[i - 1], x)
        rot[x] = c[::-1]
        crossings.append((len(gedges), len(gedges) + 1))
        gedges.extend([(c[0], c[2]), (c[1], c[3])])
        gset.update((d1, d2))
        return True

    def step(allow_vertex: bool) -> None:
        fs = faces()
        wide = [w for w in fs if len(corners(w)) >= 4]
        if wide and rng.random() < crossing_weight and add_crossing(rng.choice(wide)):
            return
        walk = rng.choice(fs)
        if allow_vertex:
            add_vertex(walk)
        else:
            add_chord(walk)

    while next_true < n:
        step(allow_vertex=rng.random() < 0.7)
    for _ in range(extra_steps):
        step(allow_vertex=False)
    true_n = next_true
    relabel = {v: v for v in range(true_n)}
    for c in range(len(crossings)):
        relabel[-1 - c] = true_n + c
    rotation = [tuple(relabel[w] for w in rot[v]) for v in range(true_n)]
    rotation += [tuple(relabel[w] for w in rot[-1 - c]) for c in range(len(crossings))]
    return OnePlanarDrawing(Graph(true_n, tuple(gedges)), tuple(crossings), tuple(rotation))
