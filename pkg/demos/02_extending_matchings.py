"""Which matchings of the cube-derived graph extend to perfect matchings?"""

from oneplanar import (
    barrier_cycle_search,
    classify_3matching,
    count_perfect_matchings,
    dean_certificate,
    has_perfect_matching,
    is_k_factor_critical,
    is_n_extendable,
    optimal_fixture,
    three_matching_witness,
)

d = optimal_fixture("cube")
g = d.graph

print("perfect matchings:", count_perfect_matchings(g))

for n in (1, 2, 3):
    v = is_n_extendable(g, n)
    line = f"{n}-extendable: {v.extendable} after {v.checked_count} matchings"
    if v.witness:
        line += f", first failure {[g.edges[i] for i in v.witness]}"
    print(line)

# the neighbourhood of any vertex is an octahedron, which holds a 3-matching
cert = dean_certificate(g, 3)
print("neighbourhood certificate:", cert)

# a degree-6 vertex is left alone once its neighbours are matched in pairs
m = three_matching_witness(d)
print("witness:", [g.edges[i] for i in m])
print("residual has a perfect matching:", has_perfect_matching(g, frozenset(g.matching_vertices(m))))

# the blocking structure is a 6-cycle of quadrangle edges with one vertex on each side
c = classify_3matching(d, m)
print("classification:", c.kind, c.barrier)
print("barrier cycles up to length 4:", barrier_cycle_search(d, 4))
print("barrier cycles up to length 6:", len(barrier_cycle_search(d, 6)))

# deleting any four vertices still leaves a perfect matching
print("4-factor-critical:", is_k_factor_critical(g, 4).critical)
print("6-factor-critical:", is_k_factor_critical(g, 6).critical)
