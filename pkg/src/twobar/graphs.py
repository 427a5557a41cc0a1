"""Auxiliary graphs over a chart set and the tour <-> packing conversions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .model import Instance, SequencePacking


@dataclass(frozen=True, eq=False)
class UnionDigraph:
    """Complete digraph with ``weight[i, j] = 1`` iff ``(i, j)`` admits a 1-union.

    The diagonal is zero and carries no meaning.
    """

    weight: np.ndarray

    @property
    def n(self) -> int:
        return self.weight.shape[0]

    def tour_weight(self, tour: Sequence[int]) -> int:
        t = np.asarray(tour)
        return int(self.weight[t, np.roll(t, -1)].sum())


@dataclass(frozen=True)
class UnionGraph:
    """Undirected graph with an edge for every pair admitting a 2-union."""

    n: int
    edges: frozenset[tuple[int, int]]

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in sorted(self.edges):
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges


@dataclass(frozen=True)
class HamCycle:
    """A Hamiltonian cycle listed from an arbitrary start vertex."""

    tour: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "tour", tuple(int(v) for v in self.tour))
        if sorted(self.tour) != list(range(len(self.tour))):
            raise ValueError(f"not a Hamiltonian cycle: {self.tour}")

    @property
    def n(self) -> int:
        return len(self.tour)

    def arcs(self) -> list[tuple[int, int]]:
        t = self.tour
        return [(t[k], t[(k + 1) % len(t)]) for k in range(len(t))]

    def weight(self, g: UnionDigraph) -> int:
        return g.tour_weight(self.tour)


def _heights(instance: Instance) -> tuple[np.ndarray, np.ndarray]:
    a = np.array([c.a for c in instance.charts], dtype=np.int64)
    b = np.array([c.b for c in instance.charts], dtype=np.int64)
    return a, b


def build_g1(instance: Instance) -> UnionDigraph:
    if instance.n < 2:
        raise ValueError("G1 needs at least two charts")
    a, b = _heights(instance)
    w = (b[:, None] + a[None, :] <= instance.denominator).astype(np.int8)
    np.fill_diagonal(w, 0)
    w.setflags(write=False)
    return UnionDigraph(w)


def build_g2(instance: Instance) -> UnionGraph:
    if instance.n < 2:
        raise ValueError("G2 needs at least two charts")
    a, b = _heights(instance)
    d = instance.denominator
    ok = (a[:, None] + a[None, :] <= d) & (b[:, None] + b[None, :] <= d)
    iu, ju = np.nonzero(np.triu(ok, k=1))
    return UnionGraph(instance.n, frozenset(zip(iu.tolist(), ju.tolist())))


def cycle_of_packing(p: SequencePacking, g: UnionDigraph) -> HamCycle:
    """The cycle visiting charts in the packing's left-to-right order."""
    if any(t == 2 for t in p.overlaps):
        raise ValueError("packing contains a 2-union; only 0/1-unions map to a cycle")
    return HamCycle(p.order)


def packing_of_cycle(h: HamCycle, g: UnionDigraph, instance: Instance) -> SequencePacking:
    """Cut the cycle at a zero-weight arc and pack greedily with 1-unions.

    The cut is placed before the lowest-indexed vertex whose incoming arc has
    weight 0; if every arc has weight 1 the sequence starts at vertex 0.
    The resulting number of 1-unions is ``min(w(h), n - 1)``.
    """
    n = h.n
    if n != g.n or n != instance.n:
        raise ValueError("cycle, digraph and instance sizes differ")
    t = h.tour
    pred = {t[k]: t[k - 1] for k in range(n)}
    zero_in = [v for v in range(n) if g.weight[pred[v], v] == 0]
    start = min(zero_in) if zero_in else 0
    k0 = t.index(start)
    order = t[k0:] + t[:k0]
    overlaps = tuple(int(g.weight[u, v]) for u, v in zip(order, order[1:]))
    return SequencePacking(order, overlaps)
