"""Solve runs and ratio benchmarks against the exact oracles."""

from __future__ import annotations

import csv
import io as _io
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .algorithms import ALGORITHMS, run_algorithm
from .atsp import ENGINES, get_engine
from .io import generate
from .model import Instance, SequencePacking, count_unions, validate
from .oracles import ORACLES


class InternalValidationError(RuntimeError):
    """An algorithm produced an infeasible packing. Always a bug."""


@dataclass
class SolveReport:
    instance: str
    n: int
    algorithm: str
    engine: str
    alpha: Fraction
    length: int
    unions: tuple[int, int, int]
    oracle: Optional[str] = None
    oracle_length: Optional[int] = None
    wall_ms: float = 0.0
    seed: Optional[int] = None
    chart_class: str = ""

    @property
    def ratio(self) -> Optional[Fraction]:
        if self.oracle_length is None:
            return None
        return Fraction(self.length, self.oracle_length)


def run_solve(instance: Instance, algo: str, engine: str = "exact", *,
              allow_nonbig: bool = False, oracle: Optional[str] = None,
              seed: Optional[int] = None) -> tuple[SolveReport, SequencePacking]:
    if algo not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algo!r}; choose from {ALGORITHMS}")
    solver = get_engine(engine)
    t0 = time.perf_counter()
    p = run_algorithm(algo, instance, solver, allow_nonbig=allow_nonbig)
    wall = (time.perf_counter() - t0) * 1000.0
    res = validate(instance, p)
    if not res.ok:
        raise InternalValidationError(f"{algo}/{engine} produced an invalid packing: {res}")
    uses_engine = algo in ("a1", "a2")
    report = SolveReport(
        instance=instance.name, n=instance.n, algorithm=algo,
        engine=engine if uses_engine else "-",
        alpha=solver.guarantee if uses_engine else Fraction(1),
        length=p.length, unions=count_unions(p), wall_ms=wall, seed=seed)
    if oracle is not None:
        report.oracle = oracle
        report.oracle_length = ORACLES[oracle](instance).optimum_length
        if report.ratio < 1:
            raise InternalValidationError(
                f"{algo} beat the {oracle} oracle on {instance.name}: "
                f"{report.length} < {report.oracle_length}")
    return report, p


@dataclass
class BenchConfig:
    sizes: list[int]
    classes: list = field(default_factory=lambda: ["arbitrary"])
    trials: int = 1
    seed: int = 0
    denominator: int = 1000
    runs: list[tuple[str, str]] = field(default_factory=lambda: [("a1", "exact")])
    oracle: Optional[str] = None
    allow_nonbig: bool = False
    record_time: bool = False

    @classmethod
    def from_dict(cls, data: dict) -> "BenchConfig":
        sizes = data["sizes"]
        if isinstance(sizes, dict):
            sizes = list(range(int(sizes["min"]), int(sizes["max"]) + 1))
        runs = [(r["algo"], r.get("engine", "exact")) for r in data.get("runs", [])] \
            or [("a1", "exact")]
        for algo, engine in runs:
            if algo not in ALGORITHMS:
                raise ValueError(f"unknown algorithm {algo!r}")
            if engine not in ENGINES:
                raise ValueError(f"unknown engine {engine!r}")
        oracle = data.get("oracle")
        if oracle is not None and oracle not in ORACLES:
            raise ValueError(f"unknown oracle {oracle!r}; choose from {sorted(ORACLES)}")
        return cls(
            sizes=[int(s) for s in sizes],
            classes=list(data.get("classes", ["arbitrary"])),
            trials=int(data.get("trials", 1)),
            seed=int(data.get("seed", 0)),
            denominator=int(data.get("denominator", 1000)),
            runs=runs,
            oracle=oracle,
            allow_nonbig=bool(data.get("allow_nonbig", False)),
            record_time=bool(data.get("record_time", False)),
        )


def _class_label(cls) -> str:
    return cls if isinstance(cls, str) else "+".join(sorted(cls))


def run_bench(config: BenchConfig) -> list[SolveReport]:
    reports = []
    for ci, cls in enumerate(config.classes):
        for n in config.sizes:
            for t in range(config.trials):
                seed = ((config.seed * 1_000_003 + ci) * 1009 + n) * 10_007 + t
                inst = generate(n, cls, seed, config.denominator)
                oracle_len = None
                for algo, engine in config.runs:
                    rep, _ = run_solve(inst, algo, engine,
                                       allow_nonbig=config.allow_nonbig, seed=seed)
                    if config.oracle is not None:
                        if oracle_len is None:
                            oracle_len = ORACLES[config.oracle](inst).optimum_length
                        rep.oracle = config.oracle
                        rep.oracle_length = oracle_len
                    rep.chart_class = _class_label(cls)
                    reports.append(rep)
    reports.sort(key=lambda r: (r.instance, r.algorithm, r.engine))
    return reports


COLUMNS = ["row_type", "instance", "class", "n", "seed", "algorithm", "engine", "alpha",
           "length", "k0", "k1", "k2", "oracle", "oracle_length", "ratio", "max_ratio",
           "trials"]


def _fmt(x: Optional[Fraction]) -> str:
    return "" if x is None else f"{float(x):.6f}"


def bench_csv(reports: list[SolveReport], record_time: bool = False) -> str:
    """CSV with one row per trial, then one aggregate row per algorithm/engine.

    Wall times vary between runs, so they are only included on request.
    """
    cols = COLUMNS + (["wall_ms"] if record_time else [])
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    groups: dict[tuple[str, str], list[SolveReport]] = {}
    for r in reports:
        k0, k1, k2 = r.unions
        row = ["trial", r.instance, r.chart_class, r.n, r.seed, r.algorithm, r.engine,
               str(r.alpha), r.length, k0, k1, k2, r.oracle or "",
               "" if r.oracle_length is None else r.oracle_length,
               _fmt(r.ratio), "", 1]
        if record_time:
            row.append(f"{r.wall_ms:.3f}")
        w.writerow(row)
        groups.setdefault((r.algorithm, r.engine), []).append(r)
    for (algo, engine), rs in sorted(groups.items()):
        ratios = [r.ratio for r in rs if r.ratio is not None]
        mean = sum(ratios, Fraction(0)) / len(ratios) if ratios else None
        row = ["aggregate", "*", "", "", "", algo, engine, str(rs[0].alpha),
               "", "", "", "", rs[0].oracle or "", "", _fmt(mean),
               _fmt(max(ratios) if ratios else None), len(rs)]
        if record_time:
            row.append(f"{sum(r.wall_ms for r in rs):.3f}")
        w.writerow(row)
    return buf.getvalue()
