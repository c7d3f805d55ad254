#!/usr/bin/env python3
"""Compare the mean rescaled random shape with the two reference curves.

Writes a CSV of the mean shape profile next to the parametric curve and the
straight line, and prints the sup-norm distances to both.  Use alpha above
one half to watch the curved limit emerge, below it for the staircase line.

Example:
    python scripts/limit_shape.py --n 10000 --alpha 0.75 --trials 30 --out shape.csv
"""

import argparse
import sys

from heckelis.asymptotics import round_half_up
from heckelis.cli import cmd_curve, build_parser


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=10_000)
    parser.add_argument("--alpha", type=float, default=0.75)
    parser.add_argument("--trials", type=int, default=30)
    parser.add_argument("--seed", type=int, default=404)
    parser.add_argument("--out", default="limit_shape.csv")
    args = parser.parse_args(argv)

    q = round_half_up(args.n**args.alpha)
    cli = build_parser().parse_args(
        ["curve", "--n", str(args.n), "--q", str(q),
         "--trials", str(args.trials), "--seed", str(args.seed),
         "--threads", "1", "--out", args.out]
    )
    return cmd_curve(cli)


if __name__ == "__main__":
    sys.exit(main())
