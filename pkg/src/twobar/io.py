"""Instance generation and JSON persistence for instances and packings.

Files hold integer heights with an explicit denominator, never floats.
Output is written with sorted keys and a trailing newline so identical
inputs give byte-identical files.
"""

from __future__ import annotations

import json
import random
from pathlib import Path
from typing import Iterable, Union

from .model import (
    DEFAULT_DENOMINATOR,
    CellPacking,
    Chart,
    ChartClass,
    Instance,
    SequencePacking,
    check,
    count_unions,
    packing_length,
)

PathLike = Union[str, Path]

_MONOTONE = {ChartClass.NONINCREASING, ChartClass.NONDECREASING}


def _parse_classes(cls) -> frozenset[ChartClass]:
    if isinstance(cls, (str, ChartClass)):
        cls = [cls]
    tags = frozenset(ChartClass(c) for c in cls)
    if not tags:
        raise ValueError("at least one chart class is required")
    if ChartClass.ARBITRARY in tags and len(tags) > 1:
        raise ValueError("'arbitrary' cannot be combined with other classes")
    if _MONOTONE <= tags:
        raise ValueError("cannot be both monotone-nonincreasing and monotone-nondecreasing")
    return tags


def generate(n: int, cls: Union[str, ChartClass, Iterable[str]] = "arbitrary",
             seed: int = 0, denominator: int = DEFAULT_DENOMINATOR,
             name: str | None = None) -> Instance:
    """Sample ``n`` charts of the given class(es) from a seeded generator.

    For the big classes one bar, chosen at random unless a monotone class
    fixes the side, is drawn above (or at) half height; the other bar is
    drawn from the whole range. Monotone classes then sort the two bars.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    tags = _parse_classes(cls)
    rng = random.Random(seed)
    d = denominator
    if ChartClass.BIG in tags:
        lo = d // 2 + 1
    elif ChartClass.NON_STRICTLY_BIG in tags:
        lo = (d + 1) // 2
    else:
        lo = None
    charts = []
    for _ in range(n):
        if lo is None:
            a, b = rng.randint(1, d), rng.randint(1, d)
        else:
            big, other = rng.randint(lo, d), rng.randint(1, d)
            a, b = (big, other) if rng.random() < 0.5 else (other, big)
        if ChartClass.NONINCREASING in tags:
            a, b = max(a, b), min(a, b)
        elif ChartClass.NONDECREASING in tags:
            a, b = min(a, b), max(a, b)
        charts.append(Chart(a, b))
    if name is None:
        label = "+".join(sorted(t.value for t in tags))
        name = f"{label}-n{n}-s{seed}"
    return Instance(tuple(charts), name, denominator)


def instance_to_dict(instance: Instance) -> dict:
    return {
        "name": instance.name,
        "denominator": instance.denominator,
        "charts": [{"a": c.a, "b": c.b} for c in instance.charts],
    }


def instance_from_dict(data: dict) -> Instance:
    try:
        charts = tuple(Chart(int(c["a"]), int(c["b"])) for c in data["charts"])
        return Instance(charts, str(data.get("name", "instance")),
                        int(data.get("denominator", DEFAULT_DENOMINATOR)))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed instance data: {exc}") from exc


def _dump(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def dumps_instance(instance: Instance) -> str:
    return _dump(instance_to_dict(instance))


def save_instance(instance: Instance, path: PathLike) -> None:
    Path(path).write_text(dumps_instance(instance))


def load_instance(path: PathLike) -> Instance:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: not valid JSON ({exc})") from exc
    return instance_from_dict(data)


def packing_to_dict(instance: Instance, p: Union[SequencePacking, CellPacking],
                    **meta) -> dict:
    out = {
        "instance": instance.name,
        "denominator": instance.denominator,
        "positions": list((p.to_cells() if isinstance(p, SequencePacking) else p).positions),
        "length": packing_length(p),
    }
    if isinstance(p, SequencePacking):
        out["order"] = list(p.order)
        out["overlaps"] = list(p.overlaps)
        out["unions"] = list(count_unions(p))
    out.update(meta)
    return out


def dumps_packing(instance: Instance, p, **meta) -> str:
    return _dump(packing_to_dict(instance, p, **meta))


def save_packing(instance: Instance, p, path: PathLike, **meta) -> None:
    Path(path).write_text(dumps_packing(instance, p, **meta))


def load_packing(instance: Instance, path: PathLike) -> Union[SequencePacking, CellPacking]:
    """Read a packing file and re-validate it against ``instance``."""
    data = json.loads(Path(path).read_text())
    if "order" in data:
        p: Union[SequencePacking, CellPacking] = SequencePacking(
            tuple(data["order"]), tuple(data["overlaps"]))
    else:
        p = CellPacking(tuple(data["positions"]))
    check(instance, p)
    if packing_length(p) != data.get("length", packing_length(p)):
        raise ValueError(f"{path}: stored length {data['length']} does not match packing")
    return p
