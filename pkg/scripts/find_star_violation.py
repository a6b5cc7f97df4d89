#!/usr/bin/env python3
"""Search small 2-complexes for a pair-intersection failure whose covering
chain is not a cycle, and print the exhibit.

Usage: python scripts/find_star_violation.py [--seed N] [--budget N]
"""

import argparse
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from raagdim.violations import find_star_violation  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--budget", type=int, default=40)
    args = parser.parse_args()
    exhibit = find_star_violation(seed=args.seed, budget=args.budget)
    if exhibit is None:
        print("no violation with nonzero boundary found within the budget")
        return 1
    print("complex (maximal faces):")
    for f in exhibit.complex.maximal_faces():
        print(f"  {f}")
    print(f"cycle: {sorted(exhibit.cycle)}")
    print(f"doubled simplex: {exhibit.delta}")
    print(f"violating pair: {exhibit.violating_pair}")
    print(f"boundary of the covering chain is nonzero on {exhibit.boundary_size} cells")
    print(f"example cell: {exhibit.boundary_cell}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
