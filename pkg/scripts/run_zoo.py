#!/usr/bin/env python3
"""Analyze every zoo entry and print a summary table.

Usage: python scripts/run_zoo.py [--json DIR]

With --json DIR, one report file per entry is written into DIR.
"""

import argparse
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from raagdim import io_json  # noqa: E402
from raagdim.bounds import analyze  # noqa: E402
from raagdim.zoo import ZOO  # noqa: E402


def fmt(span):
    if span is None:
        return "-"
    lo, hi = span
    return str(lo) if lo == hi else f"[{lo},{hi}]"


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--json", help="directory for per-entry report files")
    args = parser.parse_args()
    if args.json:
        os.makedirs(args.json, exist_ok=True)

    header = f"{'entry':16s} {'V':>3s} {'dim':>3s} {'flag':>4s} {'gd':>3s} {'l2':>3s} " \
             f"{'vkdim':>7s} {'embdim':>7s} {'actdim':>7s} {'conjecture':>10s} {'secs':>6s}"
    print(header)
    print("-" * len(header))
    for entry in ZOO:
        L = entry.complex()
        t0 = time.perf_counter()
        r = analyze(L, allow_non_flag=not entry.flag)
        dt = time.perf_counter() - t0
        print(f"{entry.name:16s} {r.vertices:3d} {r.dim:3d} {str(r.flag):>4s} {r.gd:3d} "
              f"{str(r.l2dim if r.l2dim is not None else '-'):>3s} "
              f"{fmt(r.vkdim):>7s} {fmt(r.embdim):>7s} {fmt(r.actdim):>7s} "
              f"{str(r.conjecture_status or '-'):>10s} {dt:6.2f}")
        if args.json:
            path = os.path.join(args.json, f"{entry.name}.json")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(io_json.dumps(io_json.report_to_json(r)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
