import itertools
import random

import numpy as np
import pytest

from twobar import (
    Chart,
    HamCycle,
    Instance,
    SequencePacking,
    build_g1,
    build_g2,
    count_unions,
    cycle_of_packing,
    packing_of_cycle,
    validate,
)
from twobar.graphs import UnionDigraph

from conftest import enumerate_sequence_packings, random_instance


def test_build_g1_examples():
    g = build_g1(Instance.from_pairs([(600, 500), (500, 600)]))
    assert g.weight[0, 1] == 1 and g.weight[1, 0] == 0
    g = build_g1(Instance.from_pairs([(1000, 1000)] * 4))
    assert not g.weight.any()
    g = build_g1(Instance.from_pairs([(700, 600), (400, 500)]))
    assert (g.weight[0, 1], g.weight[1, 0]) == (1, 0)


def test_build_g2_examples(ex4):
    assert build_g2(Instance.from_pairs([(500, 500)] * 2)).edges == {(0, 1)}
    assert build_g2(Instance.from_pairs([(600, 600), (500, 500)])).edges == frozenset()
    # all six pairs checked by hand against both inequalities
    assert build_g2(ex4).edges == {(0, 1), (0, 3), (1, 3), (2, 3)}


def test_graphs_reject_single_chart():
    with pytest.raises(ValueError):
        build_g1(Instance.from_pairs([(1, 1)]))
    with pytest.raises(ValueError):
        build_g2(Instance.from_pairs([(1, 1)]))


def test_g2_edge_implies_g1_arc():
    rng = random.Random(3)
    for _ in range(200):
        inst = random_instance(rng, rng.randint(2, 9))
        w = build_g1(inst).weight
        for i, j in build_g2(inst).edges:
            assert w[i, j] or w[j, i]


def test_cycle_of_packing():
    inst = Instance.from_pairs([(600, 500), (500, 600), (900, 900)])
    g = build_g1(inst)
    h = cycle_of_packing(SequencePacking((0, 1, 2), (1, 0)), g)
    assert h.tour == (0, 1, 2)
    assert h.weight(g) >= 1
    with pytest.raises(ValueError):
        cycle_of_packing(SequencePacking((0, 1, 2), (2, 0)), g)


def test_packing_of_cycle_example(ex3):
    g = build_g1(ex3)
    p = packing_of_cycle(HamCycle((0, 1, 2)), g, ex3)
    assert p == SequencePacking((0, 1, 2), (1, 0))
    assert p.length == 5
    # the other cyclic order has weight 0
    assert HamCycle((0, 2, 1)).weight(g) == 0


def test_packing_of_cycle_extremes():
    zero = Instance.from_pairs([(1000, 1000)] * 5)
    p = packing_of_cycle(HamCycle((3, 1, 4, 0, 2)), build_g1(zero), zero)
    assert p.length == 10
    ones = Instance.from_pairs([(500, 500)] * 5)
    g = build_g1(ones)
    p = packing_of_cycle(HamCycle((3, 1, 4, 0, 2)), g, ones)
    assert count_unions(p)[1] == 4
    assert p.order[0] == 0  # every arc has weight 1: start at vertex 0


def test_hamcycle_rejects_non_permutation():
    with pytest.raises(ValueError):
        HamCycle((0, 0, 1))


def test_eq2_all_digraphs_small():
    """Every 0/1 digraph on 3 and 4 vertices, every Hamiltonian cycle."""
    for n in (3, 4):
        arcs = [(i, j) for i in range(n) for j in range(n) if i != j]
        instances = Instance.from_pairs([(1, 1)] * n)
        cycles = [(0,) + p for p in itertools.permutations(range(1, n))]
        for bits in range(1 << len(arcs)):
            w = np.zeros((n, n), dtype=np.int8)
            for k, (i, j) in enumerate(arcs):
                w[i, j] = bits >> k & 1
            g = UnionDigraph(w)
            for c in cycles:
                h = HamCycle(c)
                p = packing_of_cycle(h, g, instances)
                assert count_unions(p)[1] == min(h.weight(g), n - 1)


def test_round_trip_never_loses_unions():
    rng = random.Random(11)
    for _ in range(60):
        inst = random_instance(rng, rng.randint(2, 5))
        g = build_g1(inst)
        for order, overlaps in enumerate_sequence_packings(inst, max_level=1):
            p = SequencePacking(order, overlaps)
            back = packing_of_cycle(cycle_of_packing(p, g), g, inst)
            assert validate(inst, back).ok
            assert count_unions(back)[1] >= count_unions(p)[1]
