"""Approximation algorithms for two-bar chart packing.

``algorithm_a1`` packs with 0/1-unions by way of a MaxATSP(0,1) tour;
``algorithm_a2`` takes the better of that packing and the one induced by a
maximum matching of 2-union-compatible pairs.
"""

from __future__ import annotations

from .atsp import AtspSolver, get_engine
from .graphs import build_g1, build_g2, packing_of_cycle
from .matching import max_cardinality_matching, packing_of_matching
from .model import (
    Chart,
    ChartClass,
    Instance,
    SequencePacking,
    classify,
    stacks_of,
)


def dummy_chart(denominator: int) -> Chart:
    """Full-height chart that can never share a cell with anything."""
    return Chart(denominator, denominator)


def _with_dummy(instance: Instance) -> Instance:
    return Instance(instance.charts + (dummy_chart(instance.denominator),),
                    instance.name, instance.denominator)


def _drop_chart(p: SequencePacking, instance: Instance, victim: int) -> SequencePacking:
    """Remove ``victim`` and rejoin its neighbours with a 1-union when possible."""
    k = p.order.index(victim)
    order = p.order[:k] + p.order[k + 1:]
    ov = list(p.overlaps)
    if 0 < k < len(p.order) - 1:
        left, right = p.order[k - 1], p.order[k + 1]
        fits = instance.charts[left].b + instance.charts[right].a <= instance.denominator
        ov[k - 1:k + 1] = [1 if fits else 0]
    elif k == 0:
        ov = ov[1:]
    else:
        ov = ov[:-1]
    return SequencePacking(order, tuple(ov))


def algorithm_a1(instance: Instance, engine: AtspSolver | str = "exact") -> SequencePacking:
    """Packing with 0- and 1-unions only.

    For odd ``n`` a dummy chart is added so the tour problem has even size,
    and removed from the resulting packing afterwards.
    """
    if isinstance(engine, str):
        engine = get_engine(engine)
    n = instance.n
    if n == 1:
        return SequencePacking((0,), ())
    work = instance if n % 2 == 0 else _with_dummy(instance)
    g = build_g1(work)
    tour = engine(g)
    p = packing_of_cycle(tour, g, work)
    if work is not instance:
        p = _drop_chart(p, instance, n)
    return p


def gamma_transform(p: SequencePacking, instance: Instance) -> SequencePacking:
    """Rewrite every 2-union as a 1-union.

    Of the two orientations the one with the smaller shared cell is used;
    by averaging, that cell holds at most the full height. The original
    order is kept on ties. Runs of three or more stacked charts are rejected.
    """
    ch = instance.charts
    order: list[int] = []
    overlaps: list[int] = []
    prev_link = None
    for stack, nxt in _stacks_with_links(p):
        if len(stack) > 2:
            raise ValueError(f"charts {stack} share two cells; cannot rewrite as 1-unions")
        if len(stack) == 2:
            i, j = stack
            if ch[i].a + ch[j].b < ch[j].a + ch[i].b:
                i, j = j, i
            unit, inner = [i, j], [1]
        else:
            unit, inner = list(stack), []
        if prev_link is not None:
            overlaps.append(prev_link)
        order.extend(unit)
        overlaps.extend(inner)
        prev_link = nxt
    return SequencePacking(tuple(order), tuple(overlaps))


def _stacks_with_links(p: SequencePacking):
    stacks = stacks_of(p)
    links = [t for t in p.overlaps if t != 2]
    for s, stack in enumerate(stacks):
        yield stack, links[s] if s < len(links) else None


def algorithm_a2(instance: Instance, engine: AtspSolver | str = "exact",
                 allow_nonbig: bool = False) -> SequencePacking:
    """Shorter of the matching packing and ``algorithm_a1``; ties favour the matching."""
    if not allow_nonbig and ChartClass.NON_STRICTLY_BIG not in classify(instance):
        raise ValueError("algorithm_a2 expects non-strictly big charts "
                         "(every chart has a bar of at least half the strip); "
                         "pass allow_nonbig=True to run it anyway")
    matched = matching_packing(instance)
    p1 = algorithm_a1(instance, engine)
    return matched if matched.length <= p1.length else p1


def matching_packing(instance: Instance) -> SequencePacking:
    if instance.n == 1:
        return SequencePacking((0,), ())
    m = max_cardinality_matching(build_g2(instance))
    return packing_of_matching(m, instance)


def baseline_no_union(instance: Instance) -> SequencePacking:
    return SequencePacking(tuple(range(instance.n)), (0,) * (instance.n - 1))


ALGORITHMS = ("a1", "a2", "matching", "baseline")


def run_algorithm(name: str, instance: Instance, engine: AtspSolver | str = "exact",
                  allow_nonbig: bool = False) -> SequencePacking:
    if name == "a1":
        return algorithm_a1(instance, engine)
    if name == "a2":
        return algorithm_a2(instance, engine, allow_nonbig=allow_nonbig)
    if name == "matching":
        return matching_packing(instance)
    if name == "baseline":
        return baseline_no_union(instance)
    raise ValueError(f"unknown algorithm {name!r}; choose from {ALGORITHMS}")

