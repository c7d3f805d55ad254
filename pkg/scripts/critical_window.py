#!/usr/bin/env python3
"""Estimate the scaled LIS constant along q = k sqrt(n).

For each k the script reports the Monte Carlo estimate of
E(LIS) / (2 sqrt(n)) next to the predicted piecewise value
k/2 (k <= 1) and (2 - 1/k)/2 (k > 1).

Example:
    python scripts/critical_window.py --n 50000 --trials 40 --k 0.5 1 2 4 10
"""

import argparse
import math
import sys

from heckelis.asymptotics import SweepConfig, beta, sweep


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=10_000)
    parser.add_argument("--trials", type=int, default=50)
    parser.add_argument("--seed", type=int, default=31)
    parser.add_argument("--k", type=float, nargs="*", default=[0.5, 1.0, 2.0, 4.0, 10.0])
    args = parser.parse_args(argv)

    scale = 2 * math.sqrt(args.n)
    print(f"n={args.n} trials={args.trials} seed={args.seed}")
    print(f"{'k':>6} {'q':>6} {'estimate':>9} {'predicted':>10}")
    for k in args.k:
        res = sweep(SweepConfig(n=args.n, trials=args.trials, seed=args.seed, k=k))
        print(f"{k:6.2f} {res.q:6d} {res.mean_lis / scale:9.3f} {beta(k):10.3f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
