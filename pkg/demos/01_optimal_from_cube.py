"""Build an optimal 1-planar drawing from the cube and look around."""

from oneplanar import (
    alternation_check,
    build_associated,
    face_profile,
    generate_quadrangulation,
    optimal_from_quadrangulation,
    q_of,
    validate_drawing,
    vertex_connectivity,
)

# the cube is a 3-connected quadrangulation: 8 vertices, 6 square faces
h = generate_quadrangulation("cube")
print("quadrangulation:", h.graph.n, "vertices,", h.graph.m, "edges,", len(h.faces), "faces")

# both diagonals go into every face and cross each other
d = optimal_from_quadrangulation(h)
g = d.graph
print("optimal drawing:", g.n, "vertices,", g.m, "edges, 4|V| - 8 =", 4 * g.n - 8)
print("crossing pairs:", d.crossings)

# each vertex misses only its antipode, so this is the cocktail-party graph
missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
print("non-edges:", missing)
print("vertex connectivity:", vertex_connectivity(g))

# dropping the crossing edges gives the cube back
assert q_of(d) == h.graph

print("valid:", validate_drawing(d).valid)
print("crossing and plain edges alternate:", alternation_check(d).passed)

# crossings become degree-4 false vertices; every face is a false triangle
a = build_associated(d)
print("associated plane graph:", a.plane.n, "vertices,", a.plane.m, "edges,", len(a.faces), "faces")
print("face kinds:", {(f.degree, f.kind) for f in a.faces})
for p in face_profile(a)[:3] + face_profile(a)[-2:]:
    print(f"  vertex {p.vertex:>2}: true3={p.true3} false3={p.false3} run={p.max_false_run}")
