"""Maximum-cardinality matching in general graphs and the packing it induces."""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .graphs import UnionGraph
from .model import Instance, SequencePacking, union_level

Matching = frozenset  # of (i, j) pairs with i < j


def _mate_to_pairs(mate: list[int]) -> frozenset[tuple[int, int]]:
    return frozenset((v, m) for v, m in enumerate(mate) if m > v)


def max_cardinality_matching(g: UnionGraph) -> frozenset[tuple[int, int]]:
    """Edmonds' blossom algorithm, one BFS per free vertex.

    Runs in O(n^3). Returns the matching as pairs ``(i, j)`` with ``i < j``.
    """
    n = g.n
    adj = g.adjacency()
    mate = [-1] * n

    # greedy start: cuts the number of augmenting searches roughly in half
    for v in range(n):
        if mate[v] == -1:
            for u in adj[v]:
                if mate[u] == -1:
                    mate[v], mate[u] = u, v
                    break

    for root in range(n):
        if mate[root] == -1:
            _augment_from(root, adj, mate)
    return _mate_to_pairs(mate)


def _augment_from(root: int, adj: list[list[int]], mate: list[int]) -> bool:
    n = len(adj)
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])

    def lca(x: int, y: int) -> int:
        seen = [False] * n
        while True:
            x = base[x]
            seen[x] = True
            if mate[x] == -1:
                break
            x = parent[mate[x]]
        while True:
            y = base[y]
            if seen[y]:
                return y
            y = parent[mate[y]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if base[v] == base[u] or mate[v] == u:
                continue
            if u == root or (mate[u] != -1 and parent[mate[u]] != -1):
                # odd cycle: contract the blossom
                b = lca(v, u)
                in_blossom = [False] * n
                mark_path(v, b, u, in_blossom)
                mark_path(u, b, v, in_blossom)
                for w in range(n):
                    if in_blossom[base[w]]:
                        base[w] = b
                        if not used[w]:
                            used[w] = True
                            queue.append(w)
            elif parent[u] == -1:
                parent[u] = v
                if mate[u] == -1:
                    # augmenting path found: flip it back to the root
                    while u != -1:
                        pv = parent[u]
                        nxt = mate[pv]
                        mate[u], mate[pv] = pv, u
                        u = nxt
                    return True
                used[mate[u]] = True
                queue.append(mate[u])
    return False


def is_matching(g: UnionGraph, pairs: Iterable[tuple[int, int]]) -> bool:
    seen: set[int] = set()
    for i, j in pairs:
        if i == j or i in seen or j in seen or not g.has_edge(i, j):
            return False
        seen.update((i, j))
    return True


def packing_of_matching(m: Iterable[tuple[int, int]], instance: Instance) -> SequencePacking:
    """Matched pairs as 2-unions, everything else alone, joined by 0-unions.

    Units (pairs and singletons) appear in ascending order of their smallest
    chart; inside a pair the lower index goes first.
    """
    units: list[tuple[int, ...]] = []
    matched: set[int] = set()
    for i, j in m:
        i, j = min(i, j), max(i, j)
        if i in matched or j in matched or i == j:
            raise ValueError(f"pairs are not vertex-disjoint at ({i}, {j})")
        if union_level(instance.charts[i], instance.charts[j], instance.denominator) != 2:
            raise ValueError(f"charts {i} and {j} do not admit a 2-union")
        matched.update((i, j))
        units.append((i, j))
    units += [(v,) for v in range(instance.n) if v not in matched]
    units.sort()

    order: list[int] = []
    overlaps: list[int] = []
    for unit in units:
        if order:
            overlaps.append(0)
        order.extend(unit)
        if len(unit) == 2:
            overlaps.append(2)
    return SequencePacking(tuple(order), tuple(overlaps))
