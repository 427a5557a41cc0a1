"""
Two-bar charts, unions and packing length
=========================================

A chart is two unit-width bars. Heights are integers over a denominator
(1000 by default), so "fits in a cell" is an exact integer test.
"""

from twobar import (
    CellPacking,
    Instance,
    SequencePacking,
    count_unions,
    normalize,
    packing_length,
    union_level,
    validate,
)
from twobar.render import render_ascii

inst = Instance.from_pairs([(600, 300), (400, 700), (300, 900), (1000, 250)], name="demo")
a, b, c, d = inst.charts

# How many cells can each ordered pair share?
print("level(a, b) =", union_level(a, b))   # 600+400 and 300+700 both fit: 2
print("level(b, c) =", union_level(b, c))   # only 700+300 fits: 1
print("level(c, d) =", union_level(c, d))   # 900+1000 does not fit: 0

# A sequence packing lists charts left to right with the overlap between
# neighbours; its length is 2n minus the total overlap.
p = SequencePacking(order=(0, 1, 2, 3), overlaps=(2, 0, 0))
print("length:", p.length, "unions (k0, k1, k2):", count_unions(p))
print("valid:", validate(inst, p).ok)
print(render_ascii(inst, p))

# The same packing as cell positions, with a gap that normalization closes.
gappy = CellPacking((1, 1, 5, 8))
print("gappy length", packing_length(gappy), "->", normalize(gappy))

# Pairwise levels are necessary but not sufficient: three bars in one cell.
bad = SequencePacking(order=(3, 0, 1), overlaps=(0, 2))
print("another packing valid:", validate(inst, bad).ok)
