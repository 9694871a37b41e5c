"""Run every property suite over a range of seeds and print a tally table.

    python scripts/run_fuzz.py --seeds 0 1 2 --count 200
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from initforms.fuzz import SUITES, run_suite


@dataclass
class FuzzConfig:
    seeds: list = field(default_factory=lambda: [0])
    count: int = 100
    suites: list = field(default_factory=lambda: sorted(SUITES))


def run(cfg: FuzzConfig):
    rows = []
    for name in cfg.suites:
        for seed in cfg.seeds:
            start = time.perf_counter()
            summary = run_suite(name, seed, cfg.count)
            summary["seconds"] = round(time.perf_counter() - start, 2)
            rows.append(summary)
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, nargs="+", default=[0])
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--suites", nargs="+", default=sorted(SUITES), choices=sorted(SUITES))
    ap.add_argument("--json", action="store_true", help="print raw JSON rows")
    args = ap.parse_args()
    cfg = FuzzConfig(seeds=args.seeds, count=args.count, suites=args.suites)
    rows = run(cfg)
    if args.json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=1))
        return 1 if any(r["failed_instances"] for r in rows) else 0
    print(f"{'suite':<12} {'seed':>5} {'verified':>9} {'hyp.fails':>9} {'failed':>7} {'secs':>6}")
    for r in rows:
        t = r["tally"]
        print(
            f"{r['suite']:<12} {r['seed']:>5} {t['verified']:>9} {t['hypothesis_fails']:>9} "
            f"{t['failed']:>7} {r['seconds']:>6}"
        )
    failures = [(r["suite"], r["seed"], r["failed_instances"]) for r in rows if r["failed_instances"]]
    for suite, seed, ks in failures:
        print(f"FAILED {suite} seed={seed} instances={ks}")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
