"""1-planar drawings and their associated plane graphs.

A drawing is a simple graph together with the list of crossing edge pairs.
Turning every crossing into a degree-4 *false* vertex gives the associated
plane graph; the original vertices are *true*. False vertex ids follow the
true ones: crossing ``c`` becomes vertex ``graph.n + c``.

Rotations are cyclic neighbour lists. Faces are traced by following the
dart ``(u, v)`` with ``(v, w)`` where ``w`` succeeds ``u`` in the rotation
at ``v``; corner ``i`` of a vertex ``v`` is therefore the face of the dart
``(rot[v][i], v)``, lying between ``rot[v][i]`` and ``rot[v][i + 1]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Sequence

import networkx as nx

from .errors import (
    InvalidDrawing,
    MalformedRotation,
    ModelInconsistency,
    NotOptimal,
    NotPlanarizable,
    ParityViolation,
)
from .graph import Graph, components_with_parity

Rotation = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class OnePlanarDrawing:
    """Combinatorial 1-planar drawing.

    ``crossings`` holds pairs of edge ids, normalised so the smaller id comes
    first. ``rotation``, when given, is the rotation system of the associated
    plane graph indexed by its vertex ids.
    """

    graph: Graph
    crossings: tuple[tuple[int, int], ...] = ()
    rotation: Rotation | None = None

    def __post_init__(self):
        object.__setattr__(
            self, "crossings", tuple((min(i, j), max(i, j)) for i, j in self.crossings)
        )
        if self.rotation is not None:
            object.__setattr__(self, "rotation", tuple(tuple(r) for r in self.rotation))

    @property
    def n(self) -> int:
        return self.graph.n

    def partner(self) -> dict[int, int]:
        """Edge id -> id of the edge crossing it."""
        out = {}
        for i, j in self.crossings:
            out[i] = j
            out[j] = i
        return out

    def crossing_edges(self) -> set[int]:
        return {e for pair in self.crossings for e in pair}

    def is_optimal(self) -> bool:
        return self.graph.m == 4 * self.graph.n - 8


@dataclass(frozen=True)
class Face:
    """Face of a plane graph given by its boundary walk (vertex sequence).

    The walk uses darts ``(boundary[i], boundary[i + 1])`` cyclically and is
    stored in its lexicographically least rotation.
    """

    boundary: tuple[int, ...]
    false: bool = False

    @property
    def degree(self) -> int:
        return len(self.boundary)

    @property
    def kind(self) -> Literal["true", "false"]:
        return "false" if self.false else "true"

    def darts(self) -> list[tuple[int, int]]:
        b = self.boundary
        return [(b[i], b[(i + 1) % len(b)]) for i in range(len(b))]


@dataclass(frozen=True)
class AssociatedPlaneGraph:
    plane: Graph
    n_true: int
    rotation: Rotation
    faces: tuple[Face, ...]
    origin: tuple[tuple[int, int], ...]
    mode: Literal["given", "computed"] = "given"
    _dart_face: dict[tuple[int, int], int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        dart_face = {}
        for fi, f in enumerate(self.faces):
            for dart in f.darts():
                dart_face[dart] = fi
        object.__setattr__(self, "_dart_face", dart_face)

    def is_false(self, v: int) -> bool:
        return v >= self.n_true

    @property
    def false_vertices(self) -> range:
        return range(self.n_true, self.plane.n)

    def face_of(self, u: int, v: int) -> int:
        return self._dart_face[(u, v)]

    def corner_faces(self, v: int) -> list[int]:
        """Faces around ``v`` in rotation order, one per corner."""
        return [self._dart_face[(u, v)] for u in self.rotation[v]]

    def original_edge(self, u: int, v: int) -> int:
        return self.origin[self.plane.edge_id(u, v)][0]


# -- face tracing -----------------------------------------------------------


def _check_rotation(plane: Graph, rotation: Sequence[Sequence[int]]) -> None:
    if len(rotation) != plane.n:
        raise MalformedRotation(
            f"rotation covers {len(rotation)} vertices, plane graph has {plane.n}"
        )
    for v, rot in enumerate(rotation):
        if len(rot) != len(set(rot)) or set(rot) != plane.neighbors(v):
            raise MalformedRotation(f"rotation at {v} is not a cyclic order of its neighbours")


def _canonical(walk: list[int]) -> tuple[int, ...]:
    return min(tuple(walk[i:] + walk[:i]) for i in range(len(walk)))


def trace_faces(plane: Graph, rotation: Sequence[Sequence[int]], n_true: int | None = None) -> list[Face]:
    """Trace all faces of the rotation system, checking Euler's formula.

    Vertices with id ``>= n_true`` count as false. Faces are returned sorted
    by canonical boundary.
    """
    _check_rotation(plane, rotation)
    if n_true is None:
        n_true = plane.n
    pos = [{u: i for i, u in enumerate(rot)} for rot in rotation]
    seen: set[tuple[int, int]] = set()
    walks = []
    for u, v in plane.edges:
        for start in ((u, v), (v, u)):
            if start in seen:
                continue
            walk = []
            a, b = start
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                rot = rotation[b]
                a, b = b, rot[(pos[b][a] + 1) % len(rot)]
            if (a, b) != start:
                raise MalformedRotation(f"face walk from {start} re-entered dart {(a, b)}")
            walks.append(walk)
    faces = sorted(
        (Face(_canonical(w), any(x >= n_true for x in w)) for w in walks),
        key=lambda f: f.boundary,
    )
    _check_euler(plane, faces)
    return faces


def _check_euler(plane: Graph, faces: list[Face]) -> None:
    comp_of = {}
    for ci, (comp, _) in enumerate(components_with_parity(plane)):
        for v in comp:
            comp_of[v] = ci
    counts: dict[int, list[int]] = {}
    for v in range(plane.n):
        counts.setdefault(comp_of[v], [0, 0, 0])[0] += 1
    for u, _ in plane.edges:
        counts[comp_of[u]][1] += 1
    for f in faces:
        counts[comp_of[f.boundary[0]]][2] += 1
    for ci, (nv, ne, nf) in counts.items():
        if ne and nv - ne + nf != 2:
            raise NotPlanarizable(
                f"rotation is not planar: V - E + F = {nv - ne + nf} on a component"
            )


# -- associated plane graph -------------------------------------------------


def _structural_violations(d: OnePlanarDrawing) -> list[tuple[str, str]]:
    g = d.graph
    out = []
    seen: dict[int, int] = {}
    for c, (i, j) in enumerate(d.crossings):
        if not (0 <= i < g.m and 0 <= j < g.m):
            out.append(("BadEdgeId", f"crossing {c} = ({i}, {j}) names a missing edge"))
            continue
        if i == j:
            out.append(("SelfCrossing", f"crossing {c} pairs edge {i} with itself"))
            continue
        for e in (i, j):
            if e in seen:
                out.append(("DoubleCrossed", f"edge {e} is in crossings {seen[e]} and {c}"))
            else:
                seen[e] = c
        if set(g.edges[i]) & set(g.edges[j]):
            out.append(("AdjacentCrossing", f"crossing {c}: edges {i} and {j} share an endpoint"))
    return out


def plane_skeleton(d: OnePlanarDrawing) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """Plane graph of the drawing (no rotation yet) and its origin map."""
    g = d.graph
    cross_of = {}
    for c, (i, j) in enumerate(d.crossings):
        cross_of[i] = c
        cross_of[j] = c
    edges, origin = [], []
    for i, (u, v) in enumerate(g.edges):
        if i in cross_of:
            x = g.n + cross_of[i]
            edges += [(u, x), (x, v)]
            origin += [(i, 0), (i, 1)]
        else:
            edges.append((u, v))
            origin.append((i, 0))
    return Graph(g.n + len(d.crossings), tuple(edges)), tuple(origin)


def _computed_rotation(d: OnePlanarDrawing, plane: Graph) -> Rotation:
    # Each crossing is replaced by a wheel whose rim order forces the two
    # crossing edges to alternate around the false vertex.
    g = d.graph
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    crossing = d.crossing_edges()
    for i, (u, v) in enumerate(g.edges):
        if i not in crossing:
            h.add_edge(u, v)
    for c, (i, j) in enumerate(d.crossings):
        (a1, b1), (a2, b2) = g.edges[i], g.edges[j]
        attach = (a1, a2, b1, b2)
        hub = ("hub", c)
        for k in range(4):
            rim = ("rim", c, k)
            h.add_edge(hub, rim)
            h.add_edge(rim, ("rim", c, (k + 1) % 4))
            h.add_edge(rim, attach[k])
    planar, emb = nx.check_planarity(h)
    if not planar:
        raise NotPlanarizable("associated plane graph has no planar embedding")

    def name(x):
        return g.n + x[1] if isinstance(x, tuple) else x

    rot = [tuple(name(w) for w in emb.neighbors_cw_order(v)) for v in range(g.n)]
    for c, (i, j) in enumerate(d.crossings):
        (a1, b1), (a2, b2) = g.edges[i], g.edges[j]
        attach = (a1, a2, b1, b2)
        rot.append(tuple(attach[k] for _, _, k in emb.neighbors_cw_order(("hub", c))))
    return tuple(rot)


def build_associated(d: OnePlanarDrawing) -> AssociatedPlaneGraph:
    """Associated plane graph with faces traced.

    Uses the drawing's rotation when present, otherwise any planar embedding
    in which both edges of every crossing alternate at the false vertex.
    """
    problems = _structural_violations(d)
    if problems:
        raise InvalidDrawing("; ".join(msg for _, msg in problems))
    plane, origin = plane_skeleton(d)
    if d.rotation is not None:
        rotation, mode = d.rotation, "given"
    else:
        rotation, mode = _computed_rotation(d, plane), "computed"
    _check_rotation(plane, rotation)
    for c, (i, j) in enumerate(d.crossings):
        x = d.n + c
        ends_i = set(d.graph.edges[i])
        marks = [w in ends_i for w in rotation[x]]
        if marks not in ([True, False, True, False], [False, True, False, True]):
            raise NotPlanarizable(f"edges {i} and {j} touch at false vertex {x} without crossing")
    faces = trace_faces(plane, rotation, d.n)
    return AssociatedPlaneGraph(plane, d.n, tuple(rotation), tuple(faces), origin, mode)


def contract_associated(a: AssociatedPlaneGraph) -> OnePlanarDrawing:
    """Turn false vertices back into crossings (inverse of build_associated)."""
    ends: dict[int, list[int]] = {}
    for (u, v), (e, _) in zip(a.plane.edges, a.origin):
        ends.setdefault(e, []).extend(x for x in (u, v) if x < a.n_true)
    edges = tuple(tuple(ends[e]) for e in sorted(ends))
    crossings = []
    for x in a.false_vertices:
        through = sorted({a.original_edge(x, w) for w in a.plane.neighbors(x)})
        crossings.append(tuple(through))
    return OnePlanarDrawing(Graph(a.n_true, edges), tuple(crossings))


def edge_rotation(d: OnePlanarDrawing, a: AssociatedPlaneGraph | None = None) -> tuple[tuple[int, ...], ...]:
    """Cyclic order of incident edge ids at every vertex of the drawing."""
    if a is None:
        a = build_associated(d)
    return tuple(
        tuple(a.original_edge(v, w) for w in a.rotation[v]) for v in range(d.n)
    )


# -- audits -----------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    violations: tuple[Violation, ...]
    mode: str | None = None


def validate_drawing(d: OnePlanarDrawing) -> ValidityReport:
    """Collect every violation of the 1-planar drawing model.

    Checks crossing-pair sanity, realisability of the associated plane graph
    (with the supplied rotation, or any embedding), and that some vertex has
    degree at most 7.
    """
    violations = [Violation(k, msg) for k, msg in _structural_violations(d)]
    mode = None
    if not violations:
        try:
            mode = build_associated(d).mode
        except MalformedRotation as exc:
            violations.append(Violation("MalformedRotation", str(exc)))
        except NotPlanarizable as exc:
            violations.append(Violation("NotPlanar", str(exc)))
    if d.n and d.graph.min_degree() > 7:
        violations.append(
            Violation("MinDegreeAbove7", f"minimum degree {d.graph.min_degree()} > 7")
        )
    return ValidityReport(not violations, tuple(violations), mode)


@dataclass(frozen=True)
class AlternationReport:
    passed: bool
    vertex: int | None = None
    reason: str = ""


def alternation_check(
    d: OnePlanarDrawing, rotation: Sequence[Sequence[int]] | None = None
) -> AlternationReport:
    """Check crossing and non-crossing edges alternate around every vertex.

    ``rotation`` is an optional per-vertex cyclic order of edge ids; by
    default it comes from the associated plane graph.
    """
    if not d.is_optimal():
        raise NotOptimal(f"|E| = {d.graph.m} but 4|V| - 8 = {4 * d.n - 8}")
    if rotation is None:
        rotation = edge_rotation(d)
    crossing = d.crossing_edges()
    for v in range(d.n):
        rot = rotation[v]
        if len(rot) % 2:
            return AlternationReport(False, v, f"odd degree {len(rot)}")
        flags = [e in crossing for e in rot]
        for i in range(len(flags)):
            if flags[i] == flags[(i + 1) % len(flags)]:
                return AlternationReport(
                    False, v, f"edges {rot[i]} and {rot[(i + 1) % len(rot)]} are consecutive of the same kind"
                )
    return AlternationReport(True)


@dataclass(frozen=True)
class FaceProfile:
    vertex: int
    true3: int
    false3: int
    max_false_run: int


def _false3_flags(a: AssociatedPlaneGraph, v: int) -> list[bool]:
    return [
        a.faces[f].degree == 3 and a.faces[f].false for f in a.corner_faces(v)
    ]


def _longest_cyclic_run(flags: list[bool]) -> int:
    if flags and all(flags):
        return len(flags)
    best = run = 0
    for flag in flags + flags:
        run = run + 1 if flag else 0
        best = max(best, run)
    return best


def face_profile(a: AssociatedPlaneGraph) -> list[FaceProfile]:
    """Per-vertex counts of incident true and false 3-faces.

    Raises ParityViolation for a true 7-vertex on seven false 3-faces: true
    and false neighbours would have to alternate around an odd cycle.
    """
    out = []
    for v in range(a.plane.n):
        corners = [a.faces[f] for f in a.corner_faces(v)]
        true3 = sum(1 for f in corners if f.degree == 3 and not f.false)
        flags = _false3_flags(a, v)
        false3 = sum(flags)
        if not a.is_false(v) and len(corners) == 7 and false3 == 7:
            raise ParityViolation(f"7-vertex {v} is incident with seven false 3-faces")
        out.append(FaceProfile(v, true3, false3, _longest_cyclic_run(flags)))
    return out


def _edge_through(a: AssociatedPlaneGraph, g: Graph, v: int, left: int, x: int, right: int) -> int:
    """The edge of G[N(v)] passing through false vertex ``x`` from ``left`` to ``right``."""
    e = a.original_edge(left, x)
    if a.original_edge(x, right) != e or set(g.edges[e]) != {left, right}:
        raise ModelInconsistency(
            f"at {v}: no single edge passes through false vertex {x} from {left} to {right}"
        )
    if not (g.has_edge(v, left) and g.has_edge(v, right)):
        raise ModelInconsistency(f"at {v}: {left} or {right} is not a neighbour in G")
    return e


def neighborhood_edges(a: AssociatedPlaneGraph, g: Graph, v: int) -> list[int]:
    """Edges of G[N(v)] visible from the faces around true vertex ``v``.

    Every true 3-face ``v a b`` contributes ``ab``; every false neighbour
    flanked by two false 3-faces contributes the edge passing through it.
    """
    rot = a.rotation[v]
    k = len(rot)
    corners = [a.faces[f] for f in a.corner_faces(v)]
    found = set()
    for i, f in enumerate(corners):
        if f.degree == 3 and not f.false:
            found.add(g.edge_id(rot[i], rot[(i + 1) % k]))
    for i in range(k):
        prev, cur = corners[i - 1], corners[i]
        x = rot[i]
        if (
            a.is_false(x)
            and prev.degree == 3 and prev.false
            and cur.degree == 3 and cur.false
        ):
            found.add(_edge_through(a, g, v, rot[i - 1], x, rot[(i + 1) % k]))
    return sorted(found)


def false_run_scan(a: AssociatedPlaneGraph, g: Graph) -> list[tuple[int, int]]:
    """For each true vertex on three consecutive false 3-faces, an edge of G[N(v)].

    The window's first neighbour decides which crossing edge is used: if it
    is false the edge joins the 2nd and 4th neighbours, otherwise the 1st
    and 3rd. Raises ModelInconsistency if that edge is not there.
    """
    out = []
    for v in range(a.n_true):
        flags = _false3_flags(a, v)
        k = len(flags)
        if _longest_cyclic_run(flags) < 3:
            continue
        start = next(i for i in range(k) if flags[i] and flags[(i + 1) % k] and flags[(i + 2) % k])
        rot = a.rotation[v]
        w = [rot[(start + j) % k] for j in range(4)]
        if a.is_false(w[0]):
            if a.is_false(w[1]) or not a.is_false(w[2]) or a.is_false(w[3]):
                raise ModelInconsistency(f"at {v}: true and false neighbours do not alternate")
            edge = _edge_through(a, g, v, w[1], w[2], w[3])
        else:
            if not a.is_false(w[1]) or a.is_false(w[2]):
                raise ModelInconsistency(f"at {v}: true and false neighbours do not alternate")
            edge = _edge_through(a, g, v, w[0], w[1], w[2])
        out.append((v, edge))
    return out


def q_of(d: OnePlanarDrawing) -> Graph:
    """The drawing's graph with every crossing edge removed."""
    return d.graph.without_edges(d.crossing_edges())
