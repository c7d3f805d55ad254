#!/usr/bin/env python3
"""Sweep the alphabet-size exponent across the critical point.

Prints a table of E(LIS), E(LDS), their sample deviations, and the fraction
of full-staircase shapes for each alpha in the grid.  At alpha below one
half the mean LIS pins to q and the deviation collapses; above it the mean
approaches 2 sqrt(n).

Example:
    python scripts/phase_transition.py --n 20000 --trials 100
"""

import argparse
import math
import sys

from heckelis.asymptotics import SweepConfig, sweep

DEFAULT_GRID = [0.25, 0.40, 0.45, 0.50, 0.55, 0.60, 0.75, 1.00]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=10_000)
    parser.add_argument("--trials", type=int, default=50)
    parser.add_argument("--seed", type=int, default=2024)
    parser.add_argument("--alpha", type=float, nargs="*", default=DEFAULT_GRID)
    args = parser.parse_args(argv)

    scale = 2 * math.sqrt(args.n)
    print(f"n={args.n} trials={args.trials} seed={args.seed}")
    print(f"{'alpha':>6} {'q':>6} {'E(LIS)':>10} {'sigma':>8} {'E(LDS)':>10} "
          f"{'LIS/2sqrt(n)':>13} {'staircase':>10}")
    for alpha in args.alpha:
        res = sweep(SweepConfig(n=args.n, trials=args.trials, seed=args.seed, alpha=alpha))
        print(f"{alpha:6.2f} {res.q:6d} {res.mean_lis:10.2f} {res.sigma_lis:8.2f} "
              f"{res.mean_lds:10.2f} {res.mean_lis / scale:13.3f} "
              f"{res.staircase_fraction:10.3f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
