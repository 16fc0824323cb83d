"""Random 1-planar drawings: audits and non-5-extendability certificates."""

import random
from collections import Counter

from oneplanar import (
    build_associated,
    charge_ledger,
    false_run_scan,
    non5ext_certificate,
    random_drawing,
    validate_drawing,
)

rng = random.Random(11)
kinds = Counter()
bare_kinds = Counter()
crossings = Counter()

for _ in range(100):
    d = random_drawing(
        rng, rng.randint(4, 16), extra_steps=rng.randint(0, 12), crossing_weight=0.8
    )
    assert validate_drawing(d).valid
    a = build_associated(d)
    assert charge_ledger(a).final.total() == -20
    false_run_scan(a, d.graph)
    crossings[len(d.crossings)] += 1
    kinds[non5ext_certificate(d).kind] += 1
    # without the order and connectivity shortcuts only local structure is left
    bare_kinds[non5ext_certificate(d, use_bounds=False).kind] += 1

print("crossings per drawing:", dict(sorted(crossings.items())))
print("certificates:", dict(kinds))
print("certificates without bounds:", dict(bare_kinds))
