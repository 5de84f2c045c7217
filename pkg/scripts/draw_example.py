#!/usr/bin/env python3
"""Generate the standard 2-D demonstration instance and draw it.

Writes the instance text and an SVG next to each other, prints the run
counters, and revalidates the file that was written.

Example:
    python3 scripts/draw_example.py --seed 42 --out demo
"""
import argparse
import sys
from pathlib import Path

from randlp import (
    GeneratorParams,
    generate_sequential,
    read_instance,
    render_svg,
    stats_to_text,
    validate_instance,
    write_instance,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--d", type=int, default=5)
    ap.add_argument("--out", default="demo", help="output stem: <out>.txt and <out>.svg")
    args = ap.parse_args()

    params = GeneratorParams(n=2, d=args.d, seed=args.seed)
    instance, stats = generate_sequential(params)

    txt = Path(args.out).with_suffix(".txt")
    svg = Path(args.out).with_suffix(".svg")
    write_instance(instance, txt)
    svg.write_text(render_svg(instance))

    print(stats_to_text(stats), end="")
    report = validate_instance(read_instance(txt))
    print(f"wrote {txt} and {svg}; revalidation: {'ok' if report.ok else 'FAILED'}")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
