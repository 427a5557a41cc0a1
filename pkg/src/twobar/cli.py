"""Command-line entry point: ``gen``, ``solve``, ``oracle`` and ``bench``.

Exit codes: 0 success, 2 invalid input, 3 size limit exceeded,
4 internal validation failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .algorithms import ALGORITHMS
from .atsp import ENGINES, SizeLimitError
from .bench import BenchConfig, InternalValidationError, bench_csv, run_bench, run_solve
from .io import dumps_packing, generate, load_instance, save_instance
from .model import (
    ChartClass,
    InvalidPackingError,
    SequencePacking,
    cells_of,
    count_unions,
    validate,
)
from .oracles import ORACLES
from .render import render_ascii, render_svg

log = logging.getLogger("twobar")

EXIT_OK, EXIT_INPUT, EXIT_SIZE, EXIT_INTERNAL = 0, 2, 3, 4


def _cmd_gen(args) -> int:
    classes = args.cls.split("+")
    inst = generate(args.n, classes, args.seed, args.denominator)
    save_instance(inst, args.out)
    log.info("wrote %s (%d charts)", args.out, inst.n)
    return EXIT_OK


def _cmd_solve(args) -> int:
    inst = load_instance(args.input)
    report, p = run_solve(inst, args.algo, args.engine, allow_nonbig=args.allow_nonbig,
                          oracle=args.oracle)
    out = Path(args.out) if args.out else Path(args.input).with_suffix(".packing.json")
    out.write_text(dumps_packing(inst, p, algorithm=args.algo, engine=report.engine))
    summary = {
        "instance": report.instance, "algorithm": report.algorithm,
        "engine": report.engine, "alpha": str(report.alpha), "length": report.length,
        "unions": list(report.unions), "packing_file": str(out),
    }
    if report.oracle_length is not None:
        summary["oracle_length"] = report.oracle_length
        summary["ratio"] = str(report.ratio)
    print(json.dumps(summary, sort_keys=True))
    if args.render == "ascii":
        print(render_ascii(inst, p), end="")
    elif args.render == "svg":
        svg = out.with_suffix(".svg")
        svg.write_text(render_svg(inst, p))
        log.info("wrote %s", svg)
    return EXIT_OK


def _cmd_oracle(args) -> int:
    inst = load_instance(args.input)
    res = ORACLES[args.mode](inst)
    if not validate(inst, res.optimum_packing).ok:
        raise InternalValidationError(f"oracle {args.mode} returned an invalid packing")
    out = {"instance": inst.name, "mode": args.mode, "optimum_length": res.optimum_length,
           "k1": res.k1, "k2": res.k2, "explored": res.explored,
           "positions": list(cells_of(res.optimum_packing).positions)}
    if isinstance(res.optimum_packing, SequencePacking):
        out["order"] = list(res.optimum_packing.order)
        out["overlaps"] = list(res.optimum_packing.overlaps)
        out["unions"] = list(count_unions(res.optimum_packing))
    print(json.dumps(out, sort_keys=True))
    return EXIT_OK


def _cmd_bench(args) -> int:
    try:
        data = json.loads(Path(args.config).read_text())
    except json.JSONDecodeError as exc:
        raise ValueError(f"{args.config}: not valid JSON ({exc})") from exc
    config = BenchConfig.from_dict(data)
    reports = run_bench(config)
    Path(args.out).write_text(bench_csv(reports, config.record_time))
    log.info("wrote %d rows to %s", len(reports), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twobar", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a random instance file")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--class", dest="cls", default="arbitrary",
                   help="chart class; combine with '+', e.g. big+monotone-nonincreasing "
                        f"({', '.join(c.value for c in ChartClass)})")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--denominator", type=int, default=1000)
    g.add_argument("--out", required=True)
    g.set_defaults(func=_cmd_gen)

    s = sub.add_parser("solve", help="run an algorithm on an instance file")
    s.add_argument("--algo", choices=ALGORITHMS, required=True)
    s.add_argument("--engine", choices=sorted(ENGINES), default="exact")
    s.add_argument("--input", required=True)
    s.add_argument("--out", help="packing file (default: <input>.packing.json)")
    s.add_argument("--render", choices=("ascii", "svg"))
    s.add_argument("--oracle", choices=sorted(ORACLES))
    s.add_argument("--allow-nonbig", action="store_true")
    s.set_defaults(func=_cmd_solve)

    o = sub.add_parser("oracle", help="compute an exact optimum")
    o.add_argument("--mode", choices=sorted(ORACLES), required=True)
    o.add_argument("--input", required=True)
    o.set_defaults(func=_cmd_oracle)

    b = sub.add_parser("bench", help="run a benchmark sweep described by a JSON config")
    b.add_argument("--config", required=True)
    b.add_argument("--out", required=True)
    b.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except SizeLimitError as exc:
        log.error("%s", exc)
        return EXIT_SIZE
    except (InternalValidationError, InvalidPackingError) as exc:
        log.error("internal validation failure: %s", exc)
        return EXIT_INTERNAL
    except (ValueError, OSError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
