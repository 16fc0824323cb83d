"""Command-line entry point: ``oneplanar <subcommand> ...``.

Exit status: 0 the property holds or the construction succeeded, 1 the
property fails (the witness is in the report), 2 usage or input error,
3 a resource limit was hit.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import __version__
from .builder import (
    DEFAULT_MAX_CYCLES,
    barrier_cycle_search,
    classify_3matching,
    generate_quadrangulation,
    make_quadrangulation,
    optimal_from_quadrangulation,
    three_matching_witness,
)
from .discharge import TOTAL, charge_ledger, non5ext_certificate
from .drawing import OnePlanarDrawing, build_associated, validate_drawing
from .errors import OnePlanarError, ResourceLimit
from .fileformat import parse_drawing, serialize_drawing
from .graph import vertex_connectivity
from .matching import (
    DEFAULT_MAX_NODES,
    count_perfect_matchings,
    has_perfect_matching,
    is_k_factor_critical,
    is_n_extendable,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class _Input:
    def __init__(self, path: str):
        self.path = path
        self.raw = Path(path).read_bytes()
        self.digest = hashlib.sha256(self.raw).hexdigest()
        self.drawing = parse_drawing(self.raw.decode())


def _cmd_validate(args, inp: _Input) -> tuple[int, dict]:
    rep = validate_drawing(inp.drawing)
    result = {
        "valid": rep.valid,
        "embedding": rep.mode,
        "violations": [{"kind": v.kind, "detail": v.detail} for v in rep.violations],
    }
    return (EXIT_OK if rep.valid else EXIT_FAIL), result


def _cmd_stats(args, inp: _Input) -> tuple[int, dict]:
    d = inp.drawing
    g = d.graph
    degs = g.degrees()
    result = {
        "vertices": g.n,
        "edges": g.m,
        "crossings": len(d.crossings),
        "min_degree": min(degs, default=0),
        "max_degree": max(degs, default=0),
        "optimal": d.is_optimal(),
        "connected": g.is_connected(),
    }
    if g.n >= 2:
        result["vertex_connectivity"] = vertex_connectivity(g)
    a = build_associated(d)
    hist: dict[str, int] = {}
    for f in a.faces:
        key = f"{f.kind}-{f.degree}"
        hist[key] = hist.get(key, 0) + 1
    result["associated"] = {
        "vertices": a.plane.n,
        "edges": a.plane.m,
        "faces": len(a.faces),
        "face_kinds": dict(sorted(hist.items())),
        "embedding": a.mode,
    }
    return EXIT_OK, result


def _cmd_check_extendable(args, inp: _Input) -> tuple[int, dict]:
    v = is_n_extendable(inp.drawing.graph, args.n, jobs=args.jobs)
    result = {
        "n": args.n,
        "extendable": v.extendable,
        "witness": list(v.witness) if v.witness is not None else None,
        "witness_edges": [list(inp.drawing.graph.edges[i]) for i in v.witness] if v.witness else None,
        "checked": v.checked_count,
    }
    if v.certificate is not None:
        result["neighbourhood_certificate"] = {
            "vertex": v.certificate.vertex,
            "t": v.certificate.t,
            "matching": list(v.certificate.matching),
        }
    return (EXIT_OK if v.extendable else EXIT_FAIL), result


def _cmd_check_critical(args, inp: _Input) -> tuple[int, dict]:
    v = is_k_factor_critical(inp.drawing.graph, args.k, jobs=args.jobs)
    result = {
        "k": args.k,
        "critical": v.critical,
        "witness": list(v.witness) if v.witness is not None else None,
        "checked": v.checked_count,
    }
    return (EXIT_OK if v.critical else EXIT_FAIL), result


def _cmd_count_pm(args, inp: _Input) -> tuple[int, dict]:
    return EXIT_OK, {"perfect_matchings": count_perfect_matchings(inp.drawing.graph, args.max_nodes)}


def _cmd_build_optimal(args, inp: _Input | None) -> tuple[int, dict]:
    if inp is not None:
        q = inp.drawing
        if q.crossings:
            raise OnePlanarError("--from expects a crossing-free quadrangulation")
        h = make_quadrangulation(q.graph, q.rotation)
    elif args.generator == "cube":
        h = generate_quadrangulation("cube")
    elif args.generator.startswith("pdw:"):
        try:
            k = int(args.generator[4:])
        except ValueError:
            raise OnePlanarError(f"bad generator {args.generator!r}") from None
        h = generate_quadrangulation("pseudo_double_wheel", k)
    else:
        raise OnePlanarError(f"unknown generator {args.generator!r}")
    d = optimal_from_quadrangulation(h)
    text = serialize_drawing(d)
    result = {"vertices": d.n, "edges": d.graph.m, "crossings": len(d.crossings)}
    if args.output:
        Path(args.output).write_text(text)
        result["output"] = args.output
    else:
        result["drawing"] = text
    return EXIT_OK, result


def _cmd_find_barrier_cycles(args, inp: _Input) -> tuple[int, dict]:
    found = barrier_cycle_search(inp.drawing, args.max_len, max_cycles=args.max_cycles)
    result = {
        "max_len": args.max_len,
        "count": len(found),
        "cycles": [
            {"cycle": list(b.cycle), "inside": list(b.inside), "outside": list(b.outside)}
            for b in found
        ],
    }
    return (EXIT_OK if found else EXIT_FAIL), result


def _cmd_witness_3ext(args, inp: _Input) -> tuple[int, dict]:
    d = inp.drawing
    m = three_matching_witness(d)
    covered = d.graph.matching_vertices(m)
    result = {
        "matching": list(m),
        "edges": [list(d.graph.edges[i]) for i in m],
        "residual_has_perfect_matching": has_perfect_matching(d.graph, frozenset(covered)),
    }
    return EXIT_OK, result


def _cmd_classify(args, inp: _Input) -> tuple[int, dict]:
    c = classify_3matching(inp.drawing, args.edges)
    result = {"matching": sorted(args.edges), "classification": c.kind}
    if c.barrier is not None:
        result["barrier"] = {
            "cycle": list(c.barrier.cycle),
            "inside": list(c.barrier.inside),
            "outside": list(c.barrier.outside),
        }
    return (EXIT_OK if c.kind == "extendable" else EXIT_FAIL), result


def _cmd_audit_discharge(args, inp: _Input) -> tuple[int, dict]:
    ledger = charge_ledger(build_associated(inp.drawing))
    result = ledger.as_dict()
    result["text"] = ledger.as_text()
    ok = ledger.initial.total() == TOTAL and ledger.final.total() == TOTAL
    return (EXIT_OK if ok else EXIT_FAIL), result


def _cmd_certify(args, inp: _Input) -> tuple[int, dict]:
    cert = non5ext_certificate(inp.drawing, use_bounds=not args.no_bounds)
    result = {"kind": cert.kind, "detail": cert.detail}
    if cert.dean is not None:
        result["vertex"] = cert.dean.vertex
        result["t"] = cert.dean.t
        result["matching"] = list(cert.dean.matching)
    return (EXIT_OK if cert.found else EXIT_FAIL), result


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    common.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES,
                        help=f"perfect-matching count budget (default {DEFAULT_MAX_NODES})")
    common.add_argument("--max-cycles", type=int, default=DEFAULT_MAX_CYCLES,
                        help=f"cycle enumeration budget (default {DEFAULT_MAX_CYCLES})")

    p = argparse.ArgumentParser(prog="oneplanar", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, needs_file=True, **kw):
        sp = sub.add_parser(name, parents=[common], **kw)
        if needs_file:
            sp.add_argument("file")
        sp.set_defaults(func=func)
        return sp

    add("validate", _cmd_validate)
    add("stats", _cmd_stats)
    add("check-extendable", _cmd_check_extendable).add_argument("--n", type=int, required=True)
    add("check-critical", _cmd_check_critical).add_argument("--k", type=int, required=True)
    add("count-pm", _cmd_count_pm)
    sp = add("build-optimal", _cmd_build_optimal, needs_file=False)
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--generator", help="cube or pdw:N")
    src.add_argument("--from", dest="file", help="quadrangulation drawing file")
    sp.add_argument("--output", "-o")
    add("find-barrier-cycles", _cmd_find_barrier_cycles).add_argument("--max-len", type=int, required=True)
    add("witness-3ext", _cmd_witness_3ext)
    add("classify-3matching", _cmd_classify).add_argument("--edges", type=int, nargs=3, required=True)
    add("audit-discharge", _cmd_audit_discharge)
    add("certify-non5ext", _cmd_certify).add_argument(
        "--no-bounds", action="store_true", help="skip the order and connectivity shortcuts")
    return p


def _render_text(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if key == "result":
            for rk, rv in value.items():
                if isinstance(rv, str) and "\n" in rv:
                    lines.append(f"{rk}:")
                    lines.append(rv.rstrip("\n"))
                elif rk not in ("vertices", "faces", "transfers") or not isinstance(rv, (dict, list)):
                    lines.append(f"{rk}: {json.dumps(rv) if not isinstance(rv, str) else rv}")
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def run(argv: list[str] | None = None, out=None) -> int:
    """Execute one subcommand; returns the exit status."""
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    report = {"command": args.command, "argv": argv, "tool_version": __version__}
    start = time.perf_counter()
    try:
        inp = _Input(args.file) if args.file else None
        report["input_digest"] = inp.digest if inp else None
        status, result = args.func(args, inp)
    except ResourceLimit as exc:
        status, result = EXIT_LIMIT, {"error": type(exc).__name__, "message": str(exc)}
    except (OnePlanarError, OSError, UnicodeDecodeError) as exc:
        status, result = EXIT_USAGE, {"error": type(exc).__name__, "message": str(exc)}
    report["status"] = status
    report["result"] = result
    report["timing_seconds"] = round(time.perf_counter() - start, 6)
    if args.format == "structured":
        out.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        out.write(_render_text(report) + "\n")
    return status


def main() -> None:
    sys.exit(run())
