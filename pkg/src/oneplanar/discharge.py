"""Discharging bookkeeping on associated plane graphs, with exact rationals.

Initial charges are ``3d - 10`` on vertices and ``2d - 10`` on faces, which
sum to -20 on any connected plane graph. Two rules move charge:

* R1: every false vertex gives 1/2 to each incident face of degree <= 4;
* R2: every vertex of degree >= 6 gives 4/3 to each incident true 3-face,
  7/4 to each incident false 3-face and 1/2 to each incident 4-face.

A face met several times around a vertex receives once per corner.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .drawing import AssociatedPlaneGraph, OnePlanarDrawing, build_associated, neighborhood_edges
from .errors import Disconnected, ModelInconsistency, ParityViolation
from .graph import Graph, components_with_parity, vertex_connectivity
from .matching import DeanCertificate, dean_certificate, maximum_matching

TOTAL = Fraction(-20)

R1_GIFT = Fraction(1, 2)
R2_TRUE3 = Fraction(4, 3)
R2_FALSE3 = Fraction(7, 4)
R2_FACE4 = Fraction(1, 2)

Element = tuple[Literal["vertex", "face"], int]


@dataclass(frozen=True)
class Transfer:
    vertex: int
    face: int
    amount: Fraction
    rule: str


@dataclass(frozen=True)
class ChargeAssignment:
    vertex_charge: dict[int, Fraction]
    face_charge: dict[int, Fraction]
    stage: Literal["initial", "final"] = "initial"
    transfers: tuple[Transfer, ...] = field(default=(), compare=False)

    def total(self) -> Fraction:
        return sum(self.vertex_charge.values(), Fraction(0)) + sum(self.face_charge.values(), Fraction(0))

    def vertex_total(self) -> Fraction:
        return sum(self.vertex_charge.values(), Fraction(0))

    def face_total(self) -> Fraction:
        return sum(self.face_charge.values(), Fraction(0))


def initial_charge(a: AssociatedPlaneGraph) -> ChargeAssignment:
    if len(components_with_parity(a.plane)) != 1:
        raise Disconnected("associated plane graph is disconnected")
    vc = {v: Fraction(3 * a.plane.degree(v) - 10) for v in range(a.plane.n)}
    fc = {i: Fraction(2 * f.degree - 10) for i, f in enumerate(a.faces)}
    c = ChargeAssignment(vc, fc, "initial")
    if c.total() != TOTAL:
        raise ModelInconsistency(f"initial charges sum to {c.total()}, not -20")
    return c


def _gifts(a: AssociatedPlaneGraph) -> list[Transfer]:
    out = []
    for v in range(a.plane.n):
        deg = a.plane.degree(v)
        for fi in a.corner_faces(v):
            f = a.faces[fi]
            if a.is_false(v):
                if f.degree <= 4:
                    out.append(Transfer(v, fi, R1_GIFT, "R1"))
            elif deg >= 6:
                if f.degree == 3:
                    out.append(Transfer(v, fi, R2_FALSE3 if f.false else R2_TRUE3, "R2"))
                elif f.degree == 4:
                    out.append(Transfer(v, fi, R2_FACE4, "R2"))
    return out


def apply_rules(a: AssociatedPlaneGraph, c: ChargeAssignment) -> ChargeAssignment:
    """Run R1 and R2 once over every corner; returns the final assignment."""
    if c.stage != "initial":
        raise ValueError("rules apply to an initial charge assignment")
    vc, fc = dict(c.vertex_charge), dict(c.face_charge)
    transfers = _gifts(a)
    for t in transfers:
        vc[t.vertex] -= t.amount
        fc[t.face] += t.amount
    return ChargeAssignment(vc, fc, "final", tuple(transfers))


def negative_report(c: ChargeAssignment) -> list[tuple[Element, Fraction]]:
    """Elements with strictly negative charge: vertices first, then faces."""
    out: list[tuple[Element, Fraction]] = []
    out += [(("vertex", v), q) for v, q in sorted(c.vertex_charge.items()) if q < 0]
    out += [(("face", f), q) for f, q in sorted(c.face_charge.items()) if q < 0]
    return out


@dataclass(frozen=True)
class ChargeLedger:
    """Everything a reader needs to re-check a discharging run by hand."""

    initial: ChargeAssignment
    final: ChargeAssignment
    negative: list[tuple[Element, Fraction]]

    def as_dict(self) -> dict:
        def q(x: Fraction) -> str:
            return str(x)

        return {
            "initial_total": q(self.initial.total()),
            "final_total": q(self.final.total()),
            "vertices": {
                str(v): {"initial": q(self.initial.vertex_charge[v]), "final": q(self.final.vertex_charge[v])}
                for v in sorted(self.initial.vertex_charge)
            },
            "faces": {
                str(f): {"initial": q(self.initial.face_charge[f]), "final": q(self.final.face_charge[f])}
                for f in sorted(self.initial.face_charge)
            },
            "transfers": [
                {"from": t.vertex, "to": t.face, "amount": q(t.amount), "rule": t.rule}
                for t in self.final.transfers
            ],
            "negative": [[kind, idx, q(val)] for (kind, idx), val in self.negative],
        }

    def as_text(self) -> str:
        lines = [
            f"initial total {self.initial.total()}  "
            f"(vertices {self.initial.vertex_total()}, faces {self.initial.face_total()})",
            f"final total   {self.final.total()}  "
            f"(vertices {self.final.vertex_total()}, faces {self.final.face_total()})",
        ]
        for t in self.final.transfers:
            lines.append(f"  {t.rule}: vertex {t.vertex} -> face {t.face}  {t.amount}")
        for v in sorted(self.final.vertex_charge):
            lines.append(
                f"vertex {v}: {self.initial.vertex_charge[v]} -> {self.final.vertex_charge[v]}"
            )
        for f in sorted(self.final.face_charge):
            lines.append(f"face {f}: {self.initial.face_charge[f]} -> {self.final.face_charge[f]}")
        lines.append(f"negative elements: {len(self.negative)}")
        return "\n".join(lines)


def charge_ledger(a: AssociatedPlaneGraph) -> ChargeLedger:
    initial = initial_charge(a)
    final = apply_rules(a, initial)
    return ChargeLedger(initial, final, negative_report(final))


# -- claims -----------------------------------------------------------------


@dataclass(frozen=True)
class ClaimCheck:
    vertex: int
    degree: int
    claim: str
    holds: bool
    certificate: DeanCertificate | None = None


def _derived_certificate(a: AssociatedPlaneGraph, g: Graph, v: int, t: int, claim: str) -> DeanCertificate:
    """A t-matching in G[N(v)] built only from edges the face structure exposes."""
    edges = neighborhood_edges(a, g, v)
    sub = Graph(g.n, tuple(g.edges[e] for e in edges))
    local = maximum_matching(sub)
    if len(local) < t:
        raise ModelInconsistency(
            f"{claim} fails at vertex {v} but the faces only expose a {len(local)}-matching in G[N(v)]"
        )
    ids = sorted(edges[i] for i in local)[:t]
    return DeanCertificate(v, t, tuple(ids))


def claims_audit(a: AssociatedPlaneGraph, g: Graph) -> list[ClaimCheck]:
    """Evaluate the local face constraints at every true 6- and 7-vertex.

    The constraints are those a 5-extendable graph would force:

    * ``six_faces``: a 6-vertex has no true 3-face and at most four false
      3-faces;
    * ``seven_false_faces``: a 7-vertex has at most six false 3-faces, and
      if six, its remaining face has degree >= 4;
    * ``seven_true_faces``: at most two true 3-faces, adjacent if two;
    * ``seven_mixed_faces``: one true 3-face allows at most four false
      3-faces, two allow at most three.

    A failed constraint is not an error: it comes with a (d - 5)-matching in
    G[N(v)] assembled from face-visible edges, certifying that the graph is
    not 5-extendable. Raises
    ModelInconsistency when no such matching can be read off the faces, and
    ParityViolation for a 7-vertex on seven false 3-faces.
    """
    out = []
    for v in range(a.n_true):
        deg = a.plane.degree(v)
        if deg not in (6, 7):
            continue
        corners = [a.faces[f] for f in a.corner_faces(v)]
        true3 = [i for i, f in enumerate(corners) if f.degree == 3 and not f.false]
        false3 = sum(1 for f in corners if f.degree == 3 and f.false)
        t = deg - 5

        def record(claim: str, holds: bool) -> None:
            cert = None if holds else _derived_certificate(a, g, v, t, claim)
            out.append(ClaimCheck(v, deg, claim, holds, cert))

        if deg == 6:
            record("six_faces", not true3 and false3 <= 4)
            continue
        if false3 == 7:
            raise ParityViolation(f"7-vertex {v} is incident with seven false 3-faces")
        if false3 == 6:
            other = next(f for f in corners if not (f.degree == 3 and f.false))
            record("seven_false_faces", other.degree >= 4)
        else:
            record("seven_false_faces", True)
        adjacent = len(true3) == 2 and (true3[1] - true3[0]) % 7 in (1, 6)
        record("seven_true_faces", len(true3) <= 1 or adjacent)
        if len(true3) == 1:
            record("seven_mixed_faces", false3 <= 4)
        elif len(true3) == 2:
            record("seven_mixed_faces", false3 <= 3)
        else:
            record("seven_mixed_faces", True)
    return out


# -- non-5-extendability ------------------------------------------------------


@dataclass(frozen=True)
class Non5ExtCertificate:
    kind: Literal["order_bound", "connectivity_bound", "dean", "none_found"]
    detail: dict
    dean: DeanCertificate | None = None

    @property
    def found(self) -> bool:
        return self.kind != "none_found"


def non5ext_certificate(d: OnePlanarDrawing, use_bounds: bool = True) -> Non5ExtCertificate:
    """Cheapest available reason why the drawing's graph is not 5-extendable.

    Tries, in order: fewer than 12 vertices; connectivity below 6; a vertex
    of degree 5 + t whose neighbourhood holds a t-matching, first from the
    claims audit and then by direct search.
    """
    g = d.graph
    if use_bounds:
        if g.n < 12:
            return Non5ExtCertificate("order_bound", {"order": g.n, "required": 12})
        kappa = vertex_connectivity(g) if g.n >= 2 else 0
        if kappa < 6:
            return Non5ExtCertificate("connectivity_bound", {"connectivity": kappa, "required": 6})
    a = build_associated(d)
    for check in claims_audit(a, g):
        if check.certificate is not None:
            return Non5ExtCertificate(
                "dean", {"source": check.claim, "vertex": check.vertex}, check.certificate
            )
    cert = dean_certificate(g, 5)
    if cert is not None:
        return Non5ExtCertificate("dean", {"source": "neighbourhood search", "vertex": cert.vertex}, cert)
    return Non5ExtCertificate("none_found", {})
