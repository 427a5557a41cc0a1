"""Two-bar chart domain model.

Heights are stored as integers in units of ``1/denominator`` of the strip
height, so every feasibility test is an exact integer comparison.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

DEFAULT_DENOMINATOR = 1000


class ChartClass(str, enum.Enum):
    ARBITRARY = "arbitrary"
    BIG = "big"
    NON_STRICTLY_BIG = "non-strictly-big"
    NONINCREASING = "monotone-nonincreasing"
    NONDECREASING = "monotone-nondecreasing"


@dataclass(frozen=True)
class Chart:
    """A two-bar chart: left bar height ``a``, right bar height ``b``."""

    a: int
    b: int


@dataclass(frozen=True)
class Instance:
    charts: tuple[Chart, ...]
    name: str = "instance"
    denominator: int = DEFAULT_DENOMINATOR

    def __post_init__(self):
        object.__setattr__(self, "charts", tuple(self.charts))
        if not self.charts:
            raise ValueError("an instance needs at least one chart")
        if self.denominator < 1:
            raise ValueError(f"denominator must be positive, got {self.denominator}")
        for i, c in enumerate(self.charts):
            for h in (c.a, c.b):
                if not isinstance(h, int) or isinstance(h, bool):
                    raise TypeError(f"chart {i}: heights must be int, got {h!r}")
                if not 0 < h <= self.denominator:
                    raise ValueError(
                        f"chart {i}: height {h} outside (0, {self.denominator}]")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], name: str = "instance",
                   denominator: int = DEFAULT_DENOMINATOR) -> "Instance":
        return cls(tuple(Chart(a, b) for a, b in pairs), name, denominator)

    @property
    def n(self) -> int:
        return len(self.charts)

    def __len__(self) -> int:
        return len(self.charts)

    def __getitem__(self, i: int) -> Chart:
        return self.charts[i]


@dataclass(frozen=True)
class CellPacking:
    """Left-bar cell of every chart, indexed by chart; cells start at 1."""

    positions: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple(self.positions))

    @property
    def n(self) -> int:
        return len(self.positions)


@dataclass(frozen=True)
class SequencePacking:
    """Charts laid left to right with a union level between each neighbour pair.

    ``overlaps[k]`` is the number of cells shared by ``order[k]`` and
    ``order[k + 1]``: 0 (disjoint), 1 (right bar over left bar) or 2 (same
    two cells).
    """

    order: tuple[int, ...]
    overlaps: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        object.__setattr__(self, "overlaps", tuple(self.overlaps))
        if len(self.overlaps) != max(len(self.order) - 1, 0):
            raise ValueError(
                f"{len(self.order)} charts need {max(len(self.order) - 1, 0)} "
                f"overlaps, got {len(self.overlaps)}")
        if any(t not in (0, 1, 2) for t in self.overlaps):
            raise ValueError(f"overlap levels must be 0, 1 or 2: {self.overlaps}")

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def length(self) -> int:
        return 2 * self.n - sum(self.overlaps)

    def to_cells(self) -> CellPacking:
        if not self.order:
            return CellPacking(())
        pos = [0] * self.n
        cell = 1
        pos[self.order[0]] = cell
        for chart, t in zip(self.order[1:], self.overlaps):
            cell += 2 - t
            pos[chart] = cell
        return CellPacking(tuple(pos))


Packing = Union[CellPacking, SequencePacking]


@dataclass(frozen=True)
class ValidationResult:
    overfull: tuple[tuple[int, int], ...] = ()   # (cell, total height)
    bad_positions: tuple[int, ...] = ()          # charts placed below cell 1
    problems: tuple[str, ...] = ()               # structural and union-level issues

    @property
    def ok(self) -> bool:
        return not (self.overfull or self.bad_positions or self.problems)

    def __bool__(self) -> bool:
        return self.ok


class InvalidPackingError(ValueError):
    pass


def union_level(i: Chart, j: Chart, denominator: int = DEFAULT_DENOMINATOR) -> int:
    """Maximum number of cells the ordered pair ``(i, j)`` can share."""
    if i.a + j.a <= denominator and i.b + j.b <= denominator:
        return 2
    if i.b + j.a <= denominator:
        return 1
    return 0


def cells_of(p: Packing) -> CellPacking:
    return p.to_cells() if isinstance(p, SequencePacking) else p


def cell_loads(instance: Instance, p: Packing) -> dict[int, int]:
    """Total bar height in each occupied cell."""
    cp = cells_of(p)
    loads: dict[int, int] = defaultdict(int)
    for i, cell in enumerate(cp.positions):
        loads[cell] += instance.charts[i].a
        loads[cell + 1] += instance.charts[i].b
    return dict(loads)


def packing_length(p: Packing) -> int:
    """Number of cells holding at least one bar."""
    if isinstance(p, SequencePacking):
        return p.length
    occupied = set(p.positions)
    occupied.update(c + 1 for c in p.positions)
    return len(occupied)


def validate(instance: Instance, p: Packing) -> ValidationResult:
    problems: list[str] = []
    if isinstance(p, SequencePacking):
        if sorted(p.order) != list(range(instance.n)):
            return ValidationResult(problems=(
                f"order {p.order} is not a permutation of 0..{instance.n - 1}",))
        for k, t in enumerate(p.overlaps):
            i, j = p.order[k], p.order[k + 1]
            level = union_level(instance.charts[i], instance.charts[j],
                                instance.denominator)
            if t > level:
                problems.append(
                    f"pair ({i}, {j}) declares a {t}-union but admits at most {level}")
    cp = cells_of(p)
    if cp.n != instance.n:
        problems.append(f"packing places {cp.n} charts, instance has {instance.n}")
        return ValidationResult(problems=tuple(problems))
    bad = tuple(i for i, c in enumerate(cp.positions) if c < 1)
    overfull = tuple(sorted((c, h) for c, h in cell_loads(instance, cp).items()
                            if h > instance.denominator))
    return ValidationResult(overfull, bad, tuple(problems))


def check(instance: Instance, p: Packing) -> None:
    """Raise :class:`InvalidPackingError` unless ``p`` is a valid packing."""
    res = validate(instance, p)
    if not res.ok:
        parts = list(res.problems)
        parts += [f"cell {c} holds {h} > {instance.denominator}" for c, h in res.overfull]
        parts += [f"chart {i} placed before cell 1" for i in res.bad_positions]
        raise InvalidPackingError("; ".join(parts))


def normalize(p: CellPacking) -> CellPacking:
    """Close every empty cell below the last occupied one.

    A chart spans two adjacent cells, so no chart straddles an empty cell and
    each gap can be closed by shifting everything to its right.
    """
    occupied = sorted(set(p.positions) | {c + 1 for c in p.positions})
    rank = {c: k + 1 for k, c in enumerate(occupied)}
    return CellPacking(tuple(rank[c] for c in p.positions))


def count_unions(p: SequencePacking) -> tuple[int, int, int]:
    k = [0, 0, 0]
    for t in p.overlaps:
        k[t] += 1
    return k[0], k[1], k[2]


def classify(instance: Instance) -> frozenset[ChartClass]:
    d = instance.denominator
    charts = instance.charts
    # compare 2*h against d so odd denominators stay exact
    tags = set()
    if all(2 * max(c.a, c.b) > d for c in charts):
        tags.add(ChartClass.BIG)
    if all(2 * max(c.a, c.b) >= d for c in charts):
        tags.add(ChartClass.NON_STRICTLY_BIG)
    if all(c.a >= c.b for c in charts):
        tags.add(ChartClass.NONINCREASING)
    if all(c.a <= c.b for c in charts):
        tags.add(ChartClass.NONDECREASING)
    if not tags:
        tags.add(ChartClass.ARBITRARY)
    return frozenset(tags)


def stacks_of(p: SequencePacking) -> list[tuple[int, ...]]:
    """Split a sequence packing into runs of charts joined by 2-unions."""
    if not p.order:
        return []
    runs = [[p.order[0]]]
    for chart, t in zip(p.order[1:], p.overlaps):
        if t == 2:
            runs[-1].append(chart)
        else:
            runs.append([chart])
    return [tuple(r) for r in runs]


def sequence_from_order(instance: Instance, order: Sequence[int],
                        max_level: int = 1) -> SequencePacking:
    """Greedy packing of ``order`` using the highest level up to ``max_level``.

    With ``max_level=1`` this is always valid: cells only ever hold one right
    bar and one left bar.
    """
    if max_level not in (0, 1):
        raise ValueError("greedy packing from an order supports max_level 0 or 1")
    d = instance.denominator
    ch = instance.charts
    overlaps = tuple(
        1 if max_level == 1 and ch[i].b + ch[j].a <= d else 0
        for i, j in zip(order, order[1:]))
    return SequencePacking(tuple(order), overlaps)
