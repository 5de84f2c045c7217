#!/usr/bin/env python3
"""Measure how generation wall time responds to the worker count.

Runs the parallel engine at a fixed problem size for each requested worker
count and prints median wall time plus speedup against the 1-worker baseline.
The generated instances are deterministic in (seed, workers), so any row of
the table can be regenerated and revalidated later.

Example:
    python3 scripts/scaling_experiment.py --n 1000 --d 200 --workers 1,2,4,8
"""
import argparse
import sys

from randlp import GeneratorParams, run_benchmark


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=1000)
    ap.add_argument("--d", type=int, default=200)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--reps", type=int, default=3, help="runs per worker count")
    ap.add_argument("--workers", default="1,2,4,8", help="comma separated counts")
    args = ap.parse_args()

    counts = [int(tok) for tok in args.workers.split(",") if tok.strip()]
    params = GeneratorParams(n=args.n, d=args.d, seed=args.seed)
    print(f"n={args.n} d={args.d} seed={args.seed} reps={args.reps}")
    print(f"{'workers':>8} {'median_ms':>12} {'speedup':>8}")
    for r in run_benchmark(params, counts, repetitions=args.reps):
        print(f"{r.worker_count:>8} {r.wall_time_ms:>12.1f} {r.speedup:>8.2f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
