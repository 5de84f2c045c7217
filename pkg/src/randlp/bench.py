"""Worker-count scaling measurement."""
from __future__ import annotations

import statistics
from dataclasses import dataclass, replace

from .generator import generate_parallel
from .model import GeneratorParams


@dataclass(frozen=True)
class BenchResult:
    worker_count: int
    wall_time_ms: float     # median over the repetitions
    speedup: float          # baseline median / this median


def run_benchmark(
    params: GeneratorParams,
    worker_counts,
    repetitions: int = 3,
) -> list[BenchResult]:
    """Median wall time of generate_parallel per worker count.

    The baseline is the median of the 1-worker runs when 1 is among the
    counts, otherwise the first count's median.  The generated instances are
    the deterministic outputs for (seed, workers), so callers can revalidate
    any benchmark output by regenerating with the same parameters.
    """
    counts = [int(x) for x in worker_counts]
    if not counts:
        raise ValueError("worker_counts must be non-empty")
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    medians: dict[int, float] = {}
    for count in counts:
        p = replace(params, workers=count)
        samples = []
        for _ in range(repetitions):
            _, stats = generate_parallel(p)
            samples.append(stats.wall_time_ms)
        medians[count] = statistics.median(samples)
    base = medians[1] if 1 in medians else medians[counts[0]]
    out = []
    for count in counts:
        med = medians[count]
        speedup = base / med if med > 0 else float("inf")
        out.append(BenchResult(count, med, speedup))
    return out
