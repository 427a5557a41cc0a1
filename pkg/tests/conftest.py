"""Brute-force reference helpers shared by the test modules.

Nothing here calls into the dynamic programs or the matching engine under
test; every helper is plain enumeration.
"""

from __future__ import annotations

import itertools
import random

import numpy as np
import pytest

from twobar import Chart, Instance
from twobar.io import generate

CLASSES = ["arbitrary", "big", "non-strictly-big",
           "monotone-nonincreasing", "monotone-nondecreasing"]


def brute_max_tour(w: np.ndarray) -> int:
    """Heaviest Hamiltonian cycle by enumerating all (n-1)! tours from vertex 0."""
    n = w.shape[0]
    perms = np.array(list(itertools.permutations(range(1, n))), dtype=np.int64)
    tours = np.hstack([np.zeros((len(perms), 1), dtype=np.int64), perms])
    return int(w[tours, np.roll(tours, -1, axis=1)].sum(axis=1).max())


def brute_max_matching(n: int, edges) -> int:
    adj = {v: set() for v in range(n)}
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)

    def go(free: frozenset) -> int:
        if not free:
            return 0
        v = min(free)
        rest = free - {v}
        best = go(rest)
        for u in adj[v] & rest:
            best = max(best, 1 + go(rest - {u}))
        return best

    return go(frozenset(range(n)))


def enumerate_sequence_packings(instance: Instance, max_level: int = 2):
    """Every valid (order, overlaps) pair, by depth-first search with cell loads.

    A chart at cell ``c`` adds its left bar to ``c`` and right bar to ``c+1``;
    overlap ``t`` with the previous chart places it at ``prev + 2 - t``.
    """
    n = instance.n
    d = instance.denominator
    ch = instance.charts
    loads: dict[int, int] = {}
    order: list[int] = []
    overlaps: list[int] = []

    def put(v, c, sign):
        loads[c] = loads.get(c, 0) + sign * ch[v].a
        loads[c + 1] = loads.get(c + 1, 0) + sign * ch[v].b

    def rec(pos, used):
        if len(order) == n:
            yield tuple(order), tuple(overlaps)
            return
        for v in range(n):
            if used >> v & 1:
                continue
            levels = [0] if not order else range(max_level + 1)
            for t in levels:
                c = 1 if not order else pos + 2 - t
                if loads.get(c, 0) + ch[v].a > d or loads.get(c + 1, 0) + ch[v].b > d:
                    continue
                put(v, c, 1)
                order.append(v)
                if len(order) > 1:
                    overlaps.append(t)
                yield from rec(c, used | 1 << v)
                if len(order) > 1:
                    overlaps.pop()
                order.pop()
                put(v, c, -1)

    yield from rec(0, 0)


def random_instance(rng: random.Random, n: int, cls: str | None = None,
                    denominator: int | None = None) -> Instance:
    cls = cls or rng.choice(CLASSES)
    d = denominator or rng.choice([10, 20, 1000])
    return generate(n, cls, rng.randrange(1 << 30), d)


@pytest.fixture
def ex3() -> Instance:
    return Instance((Chart(600, 500), Chart(500, 600), Chart(900, 900)), "ex3")


@pytest.fixture
def ex4() -> Instance:
    return Instance((Chart(500, 500), Chart(500, 500), Chart(600, 600), Chart(400, 400)),
                    "ex4")
