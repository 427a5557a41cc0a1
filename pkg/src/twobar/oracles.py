"""Exact reference solvers.

Four optima of increasing generality:

* ``oracle_bcpp1`` / ``oracle_bcpp1_bruteforce``: best packing that uses only
  0- and 1-unions, once through an exact tour and once by enumerating orders.
* ``oracle_sequence``: best packing where charts are laid left to right and
  neighbours share 0, 1 or 2 cells.
* ``oracle_general``: best packing of any shape, by exhaustive placement.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

import numpy as np

from .atsp import ENGINES, SizeLimitError
from .algorithms import algorithm_a1
from .model import (
    CellPacking,
    Instance,
    SequencePacking,
    count_unions,
    normalize,
    packing_length,
    sequence_from_order,
)

BCPP1_LIMIT = 18
BRUTEFORCE_LIMIT = 8
SEQUENCE_LIMIT = 18
GENERAL_LIMIT = 5


@dataclass(frozen=True)
class OracleResult:
    optimum_length: int
    optimum_packing: Union[SequencePacking, CellPacking]
    k1: Optional[int]
    k2: Optional[int]
    explored: int


def _limit(instance: Instance, limit: int, what: str) -> None:
    if instance.n > limit:
        raise SizeLimitError(f"{what} handles n <= {limit}, got {instance.n}")


def oracle_bcpp1(instance: Instance) -> OracleResult:
    _limit(instance, BCPP1_LIMIT, "oracle_bcpp1")
    p = algorithm_a1(instance, ENGINES["exact"])
    _, k1, _ = count_unions(p)
    m = instance.n + instance.n % 2
    return OracleResult(p.length, p, k1, 0, (1 << max(m - 1, 0)) * max(m - 1, 1))


@lru_cache(maxsize=None)
def _permutations(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)


def oracle_bcpp1_bruteforce(instance: Instance) -> OracleResult:
    """Try every order, joining neighbours with a 1-union whenever it fits."""
    _limit(instance, BRUTEFORCE_LIMIT, "oracle_bcpp1_bruteforce")
    n = instance.n
    a = np.array([c.a for c in instance.charts])
    b = np.array([c.b for c in instance.charts])
    perms = _permutations(n)
    fits = (b[perms[:, :-1]] + a[perms[:, 1:]]) <= instance.denominator
    k1 = fits.sum(axis=1)
    best = int(np.argmax(k1))  # first maximum = lexicographically smallest order
    p = sequence_from_order(instance, perms[best].tolist())
    return OracleResult(p.length, p, int(k1[best]), 0, len(perms))


def valid_stacks(instance: Instance) -> list[tuple[int, ...]]:
    """Every non-empty set of charts that fits in the same two cells, sorted."""
    d = instance.denominator
    ch = instance.charts
    out: list[tuple[int, ...]] = []

    def grow(stack: tuple[int, ...], sa: int, sb: int, start: int) -> None:
        out.append(stack)
        for v in range(start, instance.n):
            if sa + ch[v].a <= d and sb + ch[v].b <= d:
                grow(stack + (v,), sa + ch[v].a, sb + ch[v].b, v + 1)

    for v in range(instance.n):
        grow((v,), ch[v].a, ch[v].b, v + 1)
    out.sort()
    return out


def oracle_sequence(instance: Instance) -> OracleResult:
    """Shortest packing in which each chart shares cells only with its neighbours
    in a left-to-right order.

    Charts joined by 2-unions occupy the same two cells, so a packing is a
    sequence of *stacks*. Consecutive stacks share a cell (a 1-union) when the
    right bars of one plus the left bars of the next fit. The search runs over
    subsets of placed charts and the last stack placed, maximising the total
    overlap ``k1 + 2*k2``.
    """
    _limit(instance, SEQUENCE_LIMIT, "oracle_sequence")
    n = instance.n
    d = instance.denominator
    stacks = valid_stacks(instance)
    K = len(stacks)
    smask = np.array([sum(1 << v for v in s) for s in stacks], dtype=np.int64)
    sa = np.array([sum(instance.charts[v].a for v in s) for s in stacks], dtype=np.int64)
    sb = np.array([sum(instance.charts[v].b for v in s) for s in stacks], dtype=np.int64)
    inner = np.array([2 * (len(s) - 1) for s in stacks], dtype=np.int32)
    link = (sb[:, None] + sa[None, :] <= d).astype(np.int32)  # link[last, next]

    full = (1 << n) - 1
    neg = -(2 * n + 1)
    # best[mask, L]: most overlap still obtainable after placing mask with L last
    best = np.full((1 << n, K), neg, dtype=np.int32)
    best[full, :] = 0
    masks = np.arange(1 << n, dtype=np.int64)
    pop = np.zeros(1 << n, dtype=np.int64)
    for k in range(n):
        pop += (masks >> k) & 1
    explored = 0
    for p in range(n - 1, 0, -1):
        layer = masks[pop == p]
        for s in range(K):
            sel = layer[(layer & smask[s]) == 0]
            if sel.size == 0:
                continue
            gain = best[sel | smask[s], s] + inner[s]
            cand = gain[:, None] + link[:, s][None, :]
            np.maximum(best[sel], cand, out=cand)
            best[sel] = cand
            explored += sel.size

    def value_after(mask: int, s: int) -> int:
        return int(best[mask | int(smask[s]), s]) + int(inner[s])

    total = max(value_after(0, s) for s in range(K))
    order: list[int] = []
    overlaps: list[int] = []
    mask, last, remaining = 0, None, total
    while mask != full:
        for s in range(K):
            if mask & int(smask[s]):
                continue
            step = 0 if last is None else int(link[last, s])
            if step + value_after(mask, s) == remaining:
                break
        else:  # pragma: no cover
            raise RuntimeError("sequence oracle reconstruction failed")
        if last is not None:
            overlaps.append(step)
        order.extend(stacks[s])
        overlaps.extend([2] * (len(stacks[s]) - 1))
        remaining -= step + int(inner[s])
        mask |= int(smask[s])
        last = s
    packing = SequencePacking(tuple(order), tuple(overlaps))
    _, k1, k2 = count_unions(packing)
    return OracleResult(packing.length, packing, k1, k2, explored)


def oracle_general(instance: Instance) -> OracleResult:
    """Exhaustive placement of every chart in cells ``1..2n-1``.

    Charts are placed in index order with running per-cell loads; a branch is
    cut as soon as a cell overflows or its occupied-cell count reaches the
    best length found so far.
    """
    _limit(instance, GENERAL_LIMIT, "oracle_general")
    n = instance.n
    d = instance.denominator
    ch = instance.charts
    ncells = 2 * n + 1
    loads = [0] * (ncells + 1)
    pos = [0] * n
    best = [2 * n + 1, None]
    explored = 0

    def place(i: int, used: int) -> None:
        nonlocal explored
        explored += 1
        if used >= best[0]:
            return
        if i == n:
            best[0], best[1] = used, tuple(pos)
            return
        for c in range(1, 2 * n):
            if loads[c] + ch[i].a > d or loads[c + 1] + ch[i].b > d:
                continue
            new = (loads[c] == 0) + (loads[c + 1] == 0)
            loads[c] += ch[i].a
            loads[c + 1] += ch[i].b
            pos[i] = c
            place(i + 1, used + new)
            loads[c] -= ch[i].a
            loads[c + 1] -= ch[i].b

    place(0, 0)
    packing = normalize(CellPacking(best[1]))
    assert packing_length(packing) == best[0]
    return OracleResult(best[0], packing, None, None, explored)


ORACLES = {
    "bcpp1": oracle_bcpp1,
    "bcpp1-bf": oracle_bcpp1_bruteforce,
    "sequence": oracle_sequence,
    "general": oracle_general,
}
