"""Command-line front end.

Subcommands:

* ``verify [--level fast|full]``: run the exact invariant suites.
* ``exact --n N --q Q [--out FILE]``: exact distribution plus expected LIS, JSON.
* ``sample --n N --q Q --trials T --seed S --out FILE``: per-trial CSV.
* ``sweep --n N (--alpha-grid ... | --k-grid ...) --trials T --seed S --out FILE``.
* ``curve --n N --q Q --trials T --seed S --out FILE``: mean rescaled profile
  against the reference curves (sqrt regime when ``q*q >= n``, staircase
  regime otherwise).
* ``patience --ranks R --copies C --trials T --seed S --out PREFIX``.

Every output artifact is accompanied by a ``<name>.manifest.json`` recording
the subcommand, full parameter set, base seed, and code version; rerunning
with the same manifest parameters reproduces the data files byte for byte
(floats are printed with six fixed decimals, and all Monte Carlo
accumulation is integer counts merged commutatively).

Exit codes: 0 success, 1 verification failure, 2 usage or guard error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from datetime import datetime, timezone

from . import __version__
from .asymptotics import (
    SQRT_REGIME,
    STAIRCASE_REGIME,
    SweepConfig,
    line_curve,
    plancherel_curve,
    profile_function,
    sup_norm_distance,
    sweep,
    sweep_at,
)
from .measures import (
    ExactModeGuardError,
    exact_plancherel_hecke,
    expected_lis_exact,
    sample_plancherel_hecke,
)
from .patience import deck_simulation
from .rng import trial_stream
from .verification import FAST, FULL, run_suites

SEED_ENV = "HECKELIS_SEED"
USAGE_ERROR = 2


def _default_seed() -> int:
    return int(os.environ.get(SEED_ENV, "12345"))


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def write_manifest(path: str, subcommand: str, params: dict, seed) -> None:
    manifest = {
        "subcommand": subcommand,
        "params": params,
        "seed": seed,
        "version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }
    with open(path + ".manifest.json", "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _param_header(params: dict) -> str:
    return "# " + " ".join(f"{k}={v}" for k, v in sorted(params.items()))


def cmd_verify(args) -> int:
    failures = 0
    for report in run_suites(args.level):
        status = "PASS" if report.passed else "FAIL"
        print(f"[{status}] {report.name}: {report.detail}")
        failures += not report.passed
    print(f"verify level={args.level}: {'all suites passed' if not failures else f'{failures} suite(s) failed'}")
    return 0 if failures == 0 else 1


def cmd_exact(args) -> int:
    try:
        dist = exact_plancherel_hecke(args.n, args.q)
    except ExactModeGuardError as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_ERROR
    expected = expected_lis_exact(args.n, args.q)
    payload = {
        "n": args.n,
        "q": args.q,
        "distribution": dist.to_json(),
        "expected_lis": {"num": str(expected.numerator), "den": str(expected.denominator)},
    }
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        write_manifest(args.out, "exact", {"n": args.n, "q": args.q}, seed=None)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_sample(args) -> int:
    params = {"n": args.n, "q": args.q, "trials": args.trials}
    with open(args.out, "w", newline="") as fh:
        fh.write(_param_header({**params, "seed": args.seed}) + "\n")
        writer = csv.writer(fh)
        writer.writerow(["trial", "seed", "shape", "lis", "lds"])
        for t in range(args.trials):
            stream = trial_stream(args.seed, t)
            rec = sample_plancherel_hecke(args.n, args.q, stream, trial=t)
            writer.writerow(
                [t, stream.entropy, " ".join(map(str, rec.shape.parts)), rec.lis, rec.lds]
            )
    write_manifest(args.out, "sample", params, args.seed)
    print(f"wrote {args.out}")
    return 0


def _sweep_configs(args):
    configs = []
    for alpha in args.alpha_grid or []:
        configs.append(SweepConfig(n=args.n, trials=args.trials, seed=args.seed,
                                   alpha=alpha, snapshot_limit=args.snapshots))
    for k in args.k_grid or []:
        configs.append(SweepConfig(n=args.n, trials=args.trials, seed=args.seed,
                                   k=k, snapshot_limit=args.snapshots))
    return configs


def cmd_sweep(args) -> int:
    configs = _sweep_configs(args)
    if not configs:
        print("error: provide --alpha-grid and/or --k-grid", file=sys.stderr)
        return USAGE_ERROR
    params = {
        "n": args.n,
        "trials": args.trials,
        "alpha_grid": args.alpha_grid or [],
        "k_grid": args.k_grid or [],
        "snapshots": args.snapshots,
    }
    with open(args.out, "w", newline="") as fh:
        fh.write(_param_header({**params, "seed": args.seed}) + "\n")
        writer = csv.writer(fh)
        writer.writerow(
            ["n", "q", "alpha_or_k", "trials", "mean_lis", "mean_lds",
             "sigma_lis", "sigma_lds", "staircase_fraction"]
        )
        for config in configs:
            res = sweep(config, threads=args.threads)
            writer.writerow(
                [config.n, res.q, config.mode_label, config.trials,
                 _fmt(res.mean_lis), _fmt(res.mean_lds),
                 _fmt(res.sigma_lis), _fmt(res.sigma_lds),
                 _fmt(res.staircase_fraction)]
            )
    write_manifest(args.out, "sweep", params, args.seed)
    print(f"wrote {args.out}")
    return 0


def cmd_curve(args) -> int:
    # alphabet at or above sqrt(n) puts the shape in the sqrt scaling regime
    regime = SQRT_REGIME if args.q * args.q >= args.n else STAIRCASE_REGIME
    res = sweep_at(args.n, args.q, args.trials, args.seed, threads=args.threads)
    fhat = profile_function(res.mean_profile, args.n, args.q, regime)
    params = {"n": args.n, "q": args.q, "trials": args.trials, "regime": regime}
    grid_hi = max(fhat.max_support, 1.0)
    points = args.grid_points
    with open(args.out, "w", newline="") as fh:
        fh.write(_param_header({**params, "seed": args.seed}) + "\n")
        writer = csv.writer(fh)
        writer.writerow(["x", "f_hat", "plancherel_curve", "line"])
        for i in range(points + 1):
            x = grid_hi * i / points
            writer.writerow(
                [_fmt(x), _fmt(float(fhat.linear(x)[0])),
                 _fmt(plancherel_curve(x)), _fmt(line_curve(x))]
            )
    dist_curve = sup_norm_distance(fhat, plancherel_curve)
    dist_line = sup_norm_distance(fhat, line_curve)
    params["sup_distance_plancherel"] = _fmt(dist_curve)
    params["sup_distance_line"] = _fmt(dist_line)
    write_manifest(args.out, "curve", params, args.seed)
    print(f"wrote {args.out}")
    print(f"sup-norm distance to plancherel curve: {_fmt(dist_curve)}")
    print(f"sup-norm distance to staircase line:   {_fmt(dist_line)}")
    return 0


def cmd_patience(args) -> int:
    stats = deck_simulation(args.ranks, args.copies, args.trials, args.seed)
    params = {"ranks": args.ranks, "copies": args.copies, "trials": args.trials}
    hist_path = args.out + "_histogram.csv"
    sizes_path = args.out + "_pile_sizes.csv"
    with open(hist_path, "w", newline="") as fh:
        fh.write(_param_header({**params, "seed": args.seed}) + "\n")
        writer = csv.writer(fh)
        writer.writerow(["pile_count", "frequency"])
        for count, freq in stats.histogram.items():
            writer.writerow([count, freq])
    with open(sizes_path, "w", newline="") as fh:
        fh.write(_param_header({**params, "seed": args.seed}) + "\n")
        writer = csv.writer(fh)
        writer.writerow(["position", "mean_size"])
        for pos, size in enumerate(stats.mean_pile_sizes, start=1):
            writer.writerow([pos, _fmt(size)])
    write_manifest(args.out, "patience", params, args.seed)
    print(f"wrote {hist_path} and {sizes_path}")
    print(f"mean pile count: {stats.mean_piles:.4f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heckelis",
        description="Insertion shapes of random words: exact measures, sweeps, patience sorting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the exact invariant suites")
    p.add_argument("--level", choices=[FAST, FULL], default=FAST)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="exact distribution and expected LIS")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("sample", help="stream sampled shapes to CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("sweep", help="LIS/LDS statistics over an alpha or k grid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha-grid", type=float, nargs="*", default=None)
    p.add_argument("--k-grid", type=float, nargs="*", default=None)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.add_argument("--snapshots", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("curve", help="mean rescaled shape against reference curves")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.add_argument("--grid-points", type=int, default=400)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("patience", help="deck simulation histograms")
    p.add_argument("--ranks", type=int, required=True)
    p.add_argument("--copies", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_patience)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
