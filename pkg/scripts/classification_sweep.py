"""Sweep a covariant witness family over its angle parameter and classify
the mirror of each sample: positive, decomposable EW, nondecomposable EW,
or undecided.

Writes a CSV curve (param, a, mu, lambda_min_M, tier).
"""

import argparse
import csv
import sys

import numpy as np

from mirrorew.analysis import classify_mirror_family


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--family", choices=("choi_phi", "class1", "class2"), default="choi_phi"
    )
    parser.add_argument("--samples", type=int, default=24)
    parser.add_argument("--restarts", type=int, default=64)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--out", default=None)
    args = parser.parse_args()

    lo, hi = 0.05, 2 * np.pi - 0.05
    grid = np.linspace(lo, hi, args.samples)
    points = classify_mirror_family(
        args.family, grid, restarts=args.restarts, seed=args.seed
    )
    out = args.out or f"classification_{args.family}.csv"
    with open(out, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["param", "a", "mu", "lambda_min_M", "tier"])
        for pt in points:
            writer.writerow([pt.param, pt.a, pt.mu, pt.lambda_min_m, pt.tier])
            print(
                f"param={pt.param:.4f} a={pt.a:+.4f} mu={pt.mu:.6f} "
                f"lam_min={pt.lambda_min_m:+.2e} {pt.tier}"
            )
    print(f"wrote {out}", file=sys.stderr)


if __name__ == "__main__":
    main()
