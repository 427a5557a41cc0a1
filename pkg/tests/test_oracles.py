import random

import pytest

from twobar import (
    ChartClass,
    Instance,
    SequencePacking,
    SizeLimitError,
    classify,
    count_unions,
    oracle_bcpp1,
    oracle_bcpp1_bruteforce,
    oracle_general,
    oracle_sequence,
    packing_length,
    validate,
)
from twobar.oracles import valid_stacks

from conftest import enumerate_sequence_packings, random_instance


def test_bcpp1_examples(ex3):
    assert oracle_bcpp1(ex3).optimum_length == 5
    assert oracle_bcpp1_bruteforce(ex3).optimum_length == 5
    assert oracle_bcpp1(Instance.from_pairs([(1000, 1000)] * 4)).optimum_length == 8
    mutual = Instance.from_pairs([(500, 500), (500, 500)])
    assert oracle_bcpp1(mutual).optimum_length == 3


def test_bruteforce_examples():
    assert oracle_bcpp1_bruteforce(Instance.from_pairs([(7, 7)])).optimum_length == 2
    blocked = Instance.from_pairs([(800, 800), (700, 700)])
    assert oracle_bcpp1_bruteforce(blocked).optimum_length == 4


def test_size_limits():
    with pytest.raises(SizeLimitError):
        oracle_bcpp1_bruteforce(Instance.from_pairs([(1, 1)] * 9))
    with pytest.raises(SizeLimitError):
        oracle_general(Instance.from_pairs([(1, 1)] * 6))
    with pytest.raises(SizeLimitError):
        oracle_sequence(Instance.from_pairs([(1000, 1000)] * 19))
    with pytest.raises(SizeLimitError):
        oracle_bcpp1(Instance.from_pairs([(1000, 1000)] * 19))


def test_sequence_examples(ex4):
    assert oracle_sequence(ex4).optimum_length == 4
    assert oracle_sequence(Instance.from_pairs([(3, 3)])).optimum_length == 2
    assert oracle_sequence(Instance.from_pairs([(500, 500)] * 4)).optimum_length == 4


def test_sequence_respects_cell_totals():
    # pairwise-feasible levels 1 then 2 would overfill the shared cell
    inst = Instance.from_pairs([(900, 100), (500, 500), (500, 500)])
    res = oracle_sequence(inst)
    assert res.optimum_length == 4
    assert validate(inst, res.optimum_packing).ok


def test_sequence_allows_large_stacks():
    inst = Instance.from_pairs([(300, 300)] * 3)
    res = oracle_sequence(inst)
    assert res.optimum_length == 2
    assert res.k2 == 2


def test_valid_stacks():
    inst = Instance.from_pairs([(300, 300), (600, 600), (300, 400)])
    assert valid_stacks(inst) == [(0,), (0, 1), (0, 2), (1,), (1, 2), (2,)]


def test_general_examples():
    assert oracle_general(Instance.from_pairs([(5, 5)])).optimum_length == 2
    assert oracle_general(Instance.from_pairs([(500, 500)] * 2)).optimum_length == 2


def test_oracles_agree_with_enumeration():
    """Every oracle against exhaustive enumeration of valid sequence packings."""
    rng = random.Random(8)
    for _ in range(150):
        inst = random_instance(rng, rng.randint(1, 5))
        best_seq = best_p1 = 2 * inst.n
        for order, overlaps in enumerate_sequence_packings(inst):
            length = 2 * inst.n - sum(overlaps)
            best_seq = min(best_seq, length)
            if 2 not in overlaps:
                best_p1 = min(best_p1, length)
        seq = oracle_sequence(inst)
        assert seq.optimum_length == best_seq
        assert oracle_bcpp1(inst).optimum_length == best_p1
        assert oracle_bcpp1_bruteforce(inst).optimum_length == best_p1
        gen = oracle_general(inst)
        assert gen.optimum_length == best_seq
        assert validate(inst, gen.optimum_packing).ok


def test_results_are_consistent():
    rng = random.Random(12)
    for _ in range(200):
        inst = random_instance(rng, rng.randint(1, 8))
        for res in (oracle_bcpp1(inst), oracle_bcpp1_bruteforce(inst), oracle_sequence(inst)):
            p = res.optimum_packing
            assert validate(inst, p).ok
            assert packing_length(p) == res.optimum_length
            _, k1, k2 = count_unions(p)
            assert (k1, k2) == (res.k1, res.k2)
        assert oracle_bcpp1(inst).optimum_length == oracle_bcpp1_bruteforce(inst).optimum_length
        assert oracle_sequence(inst).optimum_length <= oracle_bcpp1(inst).optimum_length


def test_bruteforce_lexicographic():
    inst = Instance.from_pairs([(500, 500)] * 3)
    assert oracle_bcpp1_bruteforce(inst).optimum_packing == SequencePacking((0, 1, 2), (1, 1))


def test_sequence_lower_bound_on_big_charts():
    rng = random.Random(13)
    for _ in range(200):
        inst = random_instance(rng, rng.randint(1, 10), cls="non-strictly-big")
        assert ChartClass.NON_STRICTLY_BIG in classify(inst)
        assert oracle_sequence(inst).optimum_length >= inst.n
