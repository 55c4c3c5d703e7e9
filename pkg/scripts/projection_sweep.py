"""How much of a random class survives projection onto each target index.

For random roots at index 1..4 and each target 1..6, report the mean share
norm^2(projection) / norm^2(x).  Projecting onto a multiple of the root's
index keeps everything; coprime targets keep only the block-trace average.

    python scripts/projection_sweep.py --samples 200 --seed 0
"""
import argparse
from collections import defaultdict
from fractions import Fraction

from crossdim import norm_sq, project
from crossdim.sampling import random_class, trial_rng


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-target", type=int, default=6)
    args = ap.parse_args()

    share = defaultdict(list)
    for i in range(args.samples):
        x = random_class(trial_rng(args.seed, i))
        total = norm_sq(x)
        if total == 0:
            continue
        for alpha in range(1, args.max_target + 1):
            share[(x.index, alpha)].append(norm_sq(project(x, alpha).projection) / total)

    targets = range(1, args.max_target + 1)
    print("root index | " + " ".join(f"alpha={a:<3}" for a in targets))
    for beta in sorted({b for b, _ in share}):
        cells = []
        for a in targets:
            vals = share[(beta, a)]
            cells.append(f"{float(sum(vals, Fraction(0)) / len(vals)):9.4f}" if vals else " " * 9)
        print(f"{beta:10d} | " + " ".join(cells))


if __name__ == "__main__":
    main()
