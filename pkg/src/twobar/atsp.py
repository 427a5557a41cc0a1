"""Solvers for MaxATSP(0,1): heaviest Hamiltonian cycle in a 0/1-weighted digraph.

Every engine is wrapped in an :class:`AtspSolver` that carries the
approximation factor it guarantees, so downstream bounds can be stated
in terms of that factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

import numpy as np
from scipy.optimize import linear_sum_assignment

from .graphs import HamCycle, UnionDigraph

EXACT_SIZE_LIMIT = 20


class SizeLimitError(ValueError):
    """Input exceeds what a solver or oracle is willing to handle."""


@dataclass(frozen=True)
class AtspSolver:
    name: str
    guarantee: Fraction
    solve: Callable[[UnionDigraph], HamCycle]
    size_limit: Optional[int] = None

    def __call__(self, g: UnionDigraph) -> HamCycle:
        if self.size_limit is not None and g.n > self.size_limit:
            raise SizeLimitError(
                f"engine {self.name!r} handles n <= {self.size_limit}, got {g.n}")
        return self.solve(g)


def _popcount_layers(m: int) -> list[np.ndarray]:
    masks = np.arange(1 << m, dtype=np.int64)
    counts = np.zeros(1 << m, dtype=np.int64)
    for k in range(m):
        counts += (masks >> k) & 1
    order = np.argsort(counts, kind="stable")
    bounds = np.searchsorted(counts[order], np.arange(m + 2))
    return [order[bounds[p]:bounds[p + 1]] for p in range(m + 1)]


def solve_exact(g: UnionDigraph) -> HamCycle:
    """Held-Karp over subsets; returns the lexicographically smallest optimal
    tour starting at vertex 0.

    ``best[mask, j]`` is the largest weight of a path that starts at ``j``
    (already visited together with ``mask`` and vertex 0), visits every
    vertex outside ``mask`` and returns to 0. Masks range over vertices
    ``1..n-1``. Filling the table backwards lets the tour be rebuilt by
    taking the smallest feasible successor at every step.
    """
    n = g.n
    if n < 2:
        raise ValueError("a tour needs at least two vertices")
    if n > EXACT_SIZE_LIMIT:
        raise SizeLimitError(f"exact solver handles n <= {EXACT_SIZE_LIMIT}, got {n}")
    w = g.weight.astype(np.int32)
    m = n - 1
    inner = w[1:, 1:]
    full = (1 << m) - 1
    best = np.full((1 << m, m), -(n + 1), dtype=np.int32)
    best[full, :] = w[1:, 0]
    layers = _popcount_layers(m)
    for p in range(m - 1, 0, -1):
        masks = layers[p]
        for k in range(m):
            bit = 1 << k
            sel = masks[(masks & bit) == 0]
            if sel.size == 0:
                continue
            gain = best[sel | bit, k]
            cand = gain[:, None] + inner[:, k][None, :]
            np.maximum(best[sel], cand, out=cand)
            best[sel] = cand

    tour = [0]
    mask = 0
    cur = 0
    remaining = max(int(w[0, k + 1]) + int(best[1 << k, k]) for k in range(m))
    while mask != full:
        for k in range(m):
            bit = 1 << k
            if mask & bit:
                continue
            step = int(w[cur, k + 1])
            if step + int(best[mask | bit, k]) == remaining:
                remaining -= step
                mask |= bit
                cur = k + 1
                tour.append(cur)
                break
        else:  # pragma: no cover - table inconsistency
            raise RuntimeError("Held-Karp reconstruction failed")
    return HamCycle(tuple(tour))


def max_cycle_cover(g: UnionDigraph) -> list[list[int]]:
    """Maximum-weight cycle cover as a list of cycles.

    Solved as an assignment problem with the diagonal forbidden. Cycles are
    listed from their smallest vertex, in ascending order of that vertex.
    """
    n = g.n
    cost = -g.weight.astype(np.int64)
    np.fill_diagonal(cost, n + 1)
    _, succ = linear_sum_assignment(cost)
    seen = [False] * n
    cycles = []
    for s in range(n):
        if seen[s]:
            continue
        cyc = []
        v = s
        while not seen[v]:
            seen[v] = True
            cyc.append(v)
            v = int(succ[v])
        cycles.append(cyc)
    return cycles


def solve_cycle_cover(g: UnionDigraph) -> HamCycle:
    """Patch a maximum-weight cycle cover into one tour.

    Each cycle drops its lightest arc (smallest tail on ties) and the
    resulting paths are chained in ascending order of their smallest vertex.
    Every cycle has at least two arcs, so at least half of the cover's weight
    survives.
    """
    if g.n < 2:
        raise ValueError("a tour needs at least two vertices")
    cycles = max_cycle_cover(g)
    if len(cycles) == 1:
        return HamCycle(tuple(cycles[0]))
    w = g.weight
    tour: list[int] = []
    for cyc in cycles:
        L = len(cyc)
        arcs = [(int(w[cyc[k], cyc[(k + 1) % L]]), cyc[k], k) for k in range(L)]
        _, _, cut = min(arcs)
        # path starts at the head of the removed arc and ends at its tail
        tour.extend(cyc[cut + 1:] + cyc[:cut + 1])
    return HamCycle(tuple(tour))


def _best_move(w: np.ndarray, t: list[int]) -> Optional[list[int]]:
    n = len(t)
    cur = sum(int(w[t[k], t[(k + 1) % n]]) for k in range(n))

    # single-vertex reinsertion
    for k in range(n):
        v = t[k]
        p, s = t[k - 1], t[(k + 1) % n]
        removed = int(w[p, s]) - int(w[p, v]) - int(w[v, s])
        rest = t[k + 1:] + t[:k]
        for q in range(len(rest) - 1):
            x, y = rest[q], rest[q + 1]
            if (x, y) == (p, s):
                continue
            delta = removed - int(w[x, y]) + int(w[x, v]) + int(w[v, y])
            if delta > 0:
                return rest[:q + 1] + [v] + rest[q + 1:]

    # 2-arc exchange: drop arcs (t[i], t[i+1]) and (t[j], t[j+1]), reverse between
    arr = np.asarray(t)
    for i in range(n - 1):
        for j in range(i + 2, n if i > 0 else n - 1):
            cand = np.concatenate([arr[:i + 1], arr[i + 1:j + 1][::-1], arr[j + 1:]])
            if int(w[cand, np.roll(cand, -1)].sum()) > cur:
                return cand.tolist()
    return None


def improve_local_search(g: UnionDigraph, h: HamCycle, budget: int = 1000) -> HamCycle:
    """First-improvement hill climbing; ``budget`` caps the number of moves."""
    w = g.weight
    t = list(h.tour)
    for _ in range(budget):
        nxt = _best_move(w, t)
        if nxt is None:
            break
        t = nxt
    return HamCycle(tuple(t))


def _cycle_cover_ls(g: UnionDigraph) -> HamCycle:
    return improve_local_search(g, solve_cycle_cover(g))


ENGINES: dict[str, AtspSolver] = {
    "exact": AtspSolver("exact", Fraction(1), solve_exact, EXACT_SIZE_LIMIT),
    "cycle-cover": AtspSolver("cycle-cover", Fraction(1, 2), solve_cycle_cover),
    "cycle-cover+ls": AtspSolver("cycle-cover+ls", Fraction(1, 2), _cycle_cover_ls),
}


def get_engine(name: str) -> AtspSolver:
    try:
        return ENGINES[name]
    except KeyError:
        raise ValueError(f"unknown engine {name!r}; choose from {sorted(ENGINES)}") from None
