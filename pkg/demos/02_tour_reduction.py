"""
Packing with 1-unions through a maximum tour
============================================

Restricting neighbours to share at most one cell turns packing into a
maximum-weight Hamiltonian cycle on a 0/1 digraph: arc (i, j) has weight 1
when the right bar of i and the left bar of j fit in one cell. Cutting the
tour at a zero arc gives the packing.
"""

import numpy as np

from twobar import (
    algorithm_a1,
    build_g1,
    count_unions,
    oracle_bcpp1,
    oracle_bcpp1_bruteforce,
    packing_of_cycle,
    solve_cycle_cover,
    solve_exact,
)
from twobar.io import generate

inst = generate(9, "monotone-nonincreasing", seed=3)
g = build_g1(inst)
print("arc weights:\n", g.weight)

exact = solve_exact(g)
patched = solve_cycle_cover(g)
print("exact tour", exact.tour, "weight", exact.weight(g))
print("cycle-cover tour", patched.tour, "weight", patched.weight(g))

p = packing_of_cycle(exact, g, inst)
print("packing from exact tour:", p.order, p.overlaps, "length", p.length)

# Odd n: the algorithm adds a full-height dummy chart, then removes it.
for engine in ("exact", "cycle-cover", "cycle-cover+ls"):
    q = algorithm_a1(inst, engine)
    print(f"{engine:>15}: length {q.length}, unions {count_unions(q)}")
print("1-union optimum:", oracle_bcpp1(inst).optimum_length)

# Ratio of the cycle-cover engine on a batch of random instances
ratios = np.array([
    algorithm_a1(i, "cycle-cover").length / oracle_bcpp1_bruteforce(i).optimum_length
    for i in (generate(8, "arbitrary", s) for s in range(200))
])
print(f"cycle-cover ratio: mean {ratios.mean():.4f}, max {ratios.max():.4f}")
