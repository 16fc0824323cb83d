"""Charges on the associated plane graph before and after the two rules."""

from oneplanar import (
    Graph,
    OnePlanarDrawing,
    build_associated,
    charge_ledger,
    claims_audit,
    optimal_fixture,
)

# K4 as a square with crossed diagonals
k4 = OnePlanarDrawing(Graph(4, ((0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3))), ((4, 5),))
ledger = charge_ledger(build_associated(k4))
print(ledger.as_text())
print()

# the cube-derived drawing: every true vertex ends at -5/2, everything else at 0
d = optimal_fixture("cube")
a = build_associated(d)
ledger = charge_ledger(a)
print(ledger.as_text().splitlines()[0])
print(ledger.as_text().splitlines()[1])
print("negative:", [(kind, idx, str(q)) for (kind, idx), q in ledger.negative])

# a 6-vertex on six false triangles breaks the local face constraint,
# and the faces already show an edge inside its neighbourhood
for check in claims_audit(a, d.graph)[:3]:
    e = d.graph.edges[check.certificate.matching[0]]
    print(f"vertex {check.vertex}: {check.claim} holds={check.holds}, neighbourhood edge {e}")
