"""Plain-text instance format and stats reporting.

Layout, whitespace separated, one float per ``%.17g`` (binary64 round-trips
exactly):

    n m d seed
    <m constraint rows: n coefficients then the right-hand side>
    <n objective coefficients>

Bounding rows come first in canonical order, then the accepted random rows in
acceptance order.  The header is redundant on purpose: m must equal 2n+1+d.
"""
from __future__ import annotations

from pathlib import Path

import numpy as np

from .model import GenerationStats, GeneratorParams, Inequality, LPInstance


class ParseError(ValueError):
    """Malformed instance text; the message carries the offending line."""


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def instance_to_text(inst: LPInstance) -> str:
    lines = [f"{inst.n} {inst.m} {inst.d} {inst.params.seed}"]
    for q in inst.constraints:
        lines.append(" ".join([_fmt(v) for v in q.a] + [_fmt(q.b)]))
    lines.append(" ".join(_fmt(v) for v in inst.c))
    return "\n".join(lines) + "\n"


def write_instance(inst: LPInstance, dest) -> None:
    """Serialize to a path or a writable text file object."""
    text = instance_to_text(inst)
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        Path(dest).write_text(text)


def _floats(line: str, line_no: int, count: int) -> list[float]:
    toks = line.split()
    if len(toks) != count:
        raise ParseError(f"line {line_no}: expected {count} numbers, found {len(toks)}")
    try:
        return [float(t) for t in toks]
    except ValueError:
        raise ParseError(f"line {line_no}: not a number among: {line.strip()!r}") from None


def read_instance(source) -> LPInstance:
    """Parse a path or readable text file object back into an instance.

    The stored format does not carry every generation knob; alpha and theta
    are recovered from the first bounding row and the last objective
    coefficient, the remaining parameters stay at their defaults.
    """
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = Path(source).read_text()
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty input")

    head = lines[0].split()
    if len(head) != 4:
        raise ParseError(f"line 1: expected 'n m d seed', found {len(head)} fields")
    try:
        n, m, d, seed = (int(t) for t in head)
    except ValueError:
        raise ParseError("line 1: header fields must be integers") from None
    if n < 1:
        raise ParseError(f"line 1: n must be >= 1, got {n}")
    if d < 0:
        raise ParseError(f"line 1: d must be >= 0, got {d}")
    if m != 2 * n + 1 + d:
        raise ParseError(f"line 1: m = {m} inconsistent with 2n+1+d = {2 * n + 1 + d}")
    if not 0 <= seed < 2**64:
        raise ParseError("line 1: seed must be a 64-bit unsigned integer")

    expected_lines = 1 + m + 1
    if len(lines) != expected_lines:
        raise ParseError(
            f"expected {expected_lines} lines (header, {m} constraint rows, "
            f"objective), found {len(lines)}"
        )

    rows = []
    for i in range(m):
        vals = _floats(lines[1 + i], 2 + i, n + 1)
        rows.append(Inequality(np.array(vals[:n]), vals[n]))
    c = np.array(_floats(lines[1 + m], m + 2, n))

    support = tuple(rows[: 2 * n + 1])
    random = tuple(rows[2 * n + 1 :])
    params = GeneratorParams(
        n=n, d=d, seed=seed, alpha=float(support[0].b), theta=float(c[-1])
    )
    return LPInstance(n=n, support=support, random=random, c=c, params=params)


def stats_to_text(stats: GenerationStats) -> str:
    lines = [
        f"candidates_drawn = {stats.candidates_drawn}",
        f"rejected_distance = {stats.rejected_distance}",
        f"rejected_objective = {stats.rejected_objective}",
        f"rejected_similarity = {stats.rejected_similarity}",
        f"coordinator_rejected_similarity = {stats.coordinator_rejected_similarity}",
        f"discarded_surplus = {stats.discarded_surplus}",
        f"rounds = {stats.rounds}",
        f"wall_time_ms = {stats.wall_time_ms:.3f}",
    ]
    return "\n".join(lines) + "\n"


def write_stats(stats: GenerationStats, dest) -> None:
    text = stats_to_text(stats)
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        Path(dest).write_text(text)
