#!/usr/bin/env python3
"""Time the threshold sweep at a few scales and worker counts."""

import argparse
import time

from simplextune import ScoreKind, SynthSpec, generate, grid, make_point, tune


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=10_000)
    parser.add_argument("--resolutions", type=int, nargs="+", default=[50, 100, 200])
    parser.add_argument("--threads", type=int, nargs="+", default=[1, 2, 4])
    args = parser.parse_args()

    spec = SynthSpec(
        m=3,
        n=args.n,
        priors=make_point((0.9, 0.05, 0.05)),
        concentration=3.0,
        seed=7,
    )
    data = generate(spec)
    print(f"n={data.n} m={data.m}")
    print(f"{'k':>5} {'M':>8} {'threads':>8} {'seconds':>8} {'best f1':>9}")
    for k in args.resolutions:
        thresholds = grid(3, k)
        for workers in args.threads:
            start = time.perf_counter()
            report = tune(data, thresholds, ScoreKind.F1, threads=workers)
            elapsed = time.perf_counter() - start
            print(
                f"{k:>5} {len(report.thresholds):>8} {workers:>8} "
                f"{elapsed:>8.2f} {report.best_score:>9.4f}"
            )


if __name__ == "__main__":
    main()
