"""
Benchmark sweep to CSV
======================

``run_bench`` generates seeded instances, runs each algorithm/engine pair and
compares against an exact oracle. The same sweep is available from the
command line as ``twobar bench --config sweep.json --out report.csv``.
"""

import csv
import io

from twobar.bench import BenchConfig, bench_csv, run_bench

config = BenchConfig.from_dict({
    "sizes": {"min": 6, "max": 10},
    "classes": ["non-strictly-big", "big"],
    "trials": 5,
    "seed": 1,
    "runs": [{"algo": "a2", "engine": "exact"},
             {"algo": "a1", "engine": "cycle-cover"},
             {"algo": "matching"},
             {"algo": "baseline"}],
    "oracle": "sequence",
})
text = bench_csv(run_bench(config))
rows = list(csv.DictReader(io.StringIO(text)))
for r in rows:
    if r["row_type"] == "aggregate":
        print(f"{r['algorithm']:>9} {r['engine']:>12}: mean ratio {r['ratio']}, "
              f"max {r['max_ratio']} over {r['trials']} trials")
