#!/usr/bin/env python3
"""Sweep the moment-curve intersection oracle against the meshing cocycle
over random flag complexes and report agreement counts.

Usage: python scripts/moment_oracle_sweep.py [--samples N] [--seed N]
"""

import argparse
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from raagdim.config_space import ConfigurationSpace  # noqa: E402
from raagdim.obstruction import mesh_number, moment_intersection  # noqa: E402
from raagdim.octa import octahedralize  # noqa: E402
from raagdim.zoo import random_flag  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--samples", type=int, default=25)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--doubled", action="store_true",
                        help="sweep the octahedralizations instead of the bases")
    args = parser.parse_args()

    total = nonzero = mismatches = 0
    t0 = time.perf_counter()
    produced = 0
    seed = args.seed
    while produced < args.samples:
        K = random_flag(7, 0.45, seed=seed)
        seed += 1
        if K.dim < 1 or K.dim > 2:
            continue
        produced += 1
        if args.doubled:
            K = octahedralize(K).complex
        space = ConfigurationSpace(K)
        k = K.dim
        for cell in space.cells_of_degree(2 * k):
            if len(cell[0]) != k + 1:
                continue
            a, b = cell
            geo = moment_intersection(a, b, K.rank)
            comb = mesh_number(a, b, K.rank)
            total += 1
            nonzero += bool(comb)
            mismatches += geo != comb
    dt = time.perf_counter() - t0
    print(f"complexes: {produced}  cells: {total}  meshed: {nonzero}  "
          f"mismatches: {mismatches}  ({dt:.1f}s)")
    return 0 if mismatches == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
