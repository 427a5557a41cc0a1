"""
Big charts: matching versus 1-unions
====================================

When every chart has a bar of at least half the strip height, pairs that
share both cells form a matching. The algorithm returns the shorter of the
matching packing and the 1-union packing.
"""

import numpy as np

from twobar import (
    algorithm_a1,
    algorithm_a2,
    build_g2,
    gamma_transform,
    matching_packing,
    max_cardinality_matching,
    oracle_sequence,
)
from twobar.io import generate
from twobar.render import render_ascii

inst = generate(10, "non-strictly-big", seed=11, denominator=20)
print([(c.a, c.b) for c in inst.charts])

m = max_cardinality_matching(build_g2(inst))
print("2-union pairs:", sorted(m))
print("matching packing length:", matching_packing(inst).length)
print("1-union packing length: ", algorithm_a1(inst).length)

p = algorithm_a2(inst)
opt = oracle_sequence(inst)
print("chosen length", p.length, "optimum", opt.optimum_length)
print(render_ascii(inst, p))

# Rewriting each 2-union of the optimum as a 1-union costs one cell per pair.
g = gamma_transform(opt.optimum_packing, inst)
print("optimum", opt.optimum_length, "-> rewritten", g.length, "k2 =", opt.k2)

ratios = []
for seed in range(300):
    i = generate(12, "non-strictly-big", seed, denominator=20)
    ratios.append(algorithm_a2(i).length / oracle_sequence(i).optimum_length)
ratios = np.array(ratios)
print(f"ratio over 300 instances: mean {ratios.mean():.4f}, max {ratios.max():.4f}, "
      f"bound {4 / 3:.4f}")
