"""Line-oriented drawing files.

::

    # comment
    graph 4          vertex count, once, before anything else
    e 0 1            edge; the k-th ``e`` line is edge k
    x 4 5            crossing pair of edge ids
    rot 0 1 4 3      rotation of the associated plane graph at vertex 0

False vertices of the associated plane graph are numbered after the true
ones in crossing order, so ``rot`` lines may name ids up to
``n + (#crossings) - 1``. Either every such vertex gets a ``rot`` line or
none does.
"""

from __future__ import annotations

from pathlib import Path

from .drawing import OnePlanarDrawing
from .errors import InvalidGraph, ParseError
from .graph import Graph


def _ints(tokens: list[str], cols: list[int], lineno: int) -> list[int]:
    out = []
    for tok, col in zip(tokens, cols):
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(f"expected an integer, got {tok!r}", lineno, col) from None
        if out[-1] < 0:
            raise ParseError(f"negative id {tok}", lineno, col)
    return out


def _split(line: str) -> tuple[list[str], list[int]]:
    tokens, cols = [], []
    i = 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        tokens.append(line[i:j])
        cols.append(i + 1)
        i = j
    return tokens, cols


def parse_drawing(text: str) -> OnePlanarDrawing:
    """Parse a drawing file; errors carry line and column."""
    n = None
    edges: list[tuple[int, int]] = []
    edge_lines: list[int] = []
    crossings: list[tuple[int, int]] = []
    rot: dict[int, tuple[int, ...]] = {}
    first_rot_line = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        tokens, cols = _split(line)
        if not tokens:
            continue
        key, args, argcols = tokens[0], tokens[1:], cols[1:]
        if key == "graph":
            if n is not None:
                raise ParseError("duplicate graph header", lineno, cols[0])
            if len(args) != 1:
                raise ParseError("graph header takes one vertex count", lineno, cols[0])
            (n,) = _ints(args, argcols, lineno)
            continue
        if n is None:
            raise ParseError(f"{key!r} before the graph header", lineno, cols[0])
        if key == "e":
            if len(args) != 2:
                raise ParseError("edge line takes two vertices", lineno, cols[0])
            u, v = _ints(args, argcols, lineno)
            for x, col in ((u, argcols[0]), (v, argcols[1])):
                if x >= n:
                    raise ParseError(f"vertex {x} out of range 0..{n - 1}", lineno, col)
            edges.append((u, v))
            edge_lines.append(lineno)
        elif key == "x":
            if len(args) != 2:
                raise ParseError("crossing line takes two edge ids", lineno, cols[0])
            crossings.append(tuple(_ints(args, argcols, lineno)))
        elif key == "rot":
            if not args:
                raise ParseError("rotation line needs a vertex", lineno, cols[0])
            v, *order = _ints(args, argcols, lineno)
            if v in rot:
                raise ParseError(f"duplicate rotation for vertex {v}", lineno, argcols[0])
            rot[v] = tuple(order)
            first_rot_line = first_rot_line or lineno
        else:
            raise ParseError(f"unknown record {key!r}", lineno, cols[0])
    if n is None:
        raise ParseError("missing graph header", 1)
    try:
        graph = Graph(n, tuple(edges))
    except InvalidGraph as exc:
        # locate the offending edge line for the message
        seen = {}
        for k, (u, v) in enumerate(edges):
            key = frozenset((u, v))
            if u == v or key in seen:
                raise ParseError(str(exc), edge_lines[k]) from None
            seen[key] = k
        raise ParseError(str(exc), edge_lines[-1] if edge_lines else 1) from None
    rotation = None
    if rot:
        total = n + len(crossings)
        missing = [v for v in range(total) if v not in rot]
        extra = [v for v in rot if v >= total]
        if missing or extra:
            raise ParseError(
                f"rotation must cover vertices 0..{total - 1} exactly"
                f" (missing {missing[:5]}, unexpected {extra[:5]})",
                first_rot_line,
            )
        rotation = tuple(rot[v] for v in range(total))
    return OnePlanarDrawing(graph, tuple(crossings), rotation)


def serialize_drawing(d: OnePlanarDrawing) -> str:
    """Canonical text form; ``parse_drawing`` inverts it exactly."""
    lines = [f"graph {d.n}"]
    lines += [f"e {u} {v}" for u, v in d.graph.edges]
    lines += [f"x {i} {j}" for i, j in d.crossings]
    if d.rotation is not None:
        lines += [f"rot {v} " + " ".join(map(str, r)) if r else f"rot {v}" for v, r in enumerate(d.rotation)]
    return "\n".join(lines) + "\n"


def read_drawing(path: str | Path) -> OnePlanarDrawing:
    return parse_drawing(Path(path).read_text())


def write_drawing(d: OnePlanarDrawing, path: str | Path) -> None:
    Path(path).write_text(serialize_drawing(d))
