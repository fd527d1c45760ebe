#!/usr/bin/env python3
"""Cross-check Monte Carlo transition estimates against banded powers.

Draws random (p, n, i, j) tuples, simulates each with a fixed seed and
prints the deviation from the exact power entry in standard-error
units.  Exits nonzero if more than one tuple in a hundred lands outside
four standard errors, which is this package's agreement bar.
"""

import argparse
import random
import sys

from walkdyn.operators import Constant, make_walk
from walkdyn.seqspace import Lattice
from walkdyn.walk_oracle import WalkConfig, estimate_transition


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=40)
    ap.add_argument("--samples", type=int, default=50_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--n-max", type=int, default=15)
    ap.add_argument("--quiet", action="store_true", help="print offenders only")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    worst = 0.0
    outside = 0
    for trial in range(args.trials):
        p = rng.uniform(0.2, 0.9)
        n = rng.randint(1, args.n_max)
        i = rng.randint(0, 4)
        j = rng.randint(max(0, i - n), i + n)
        op = make_walk(Lattice.HALF_LINE, Constant(p))
        exact = op.power_entry(n, i, j)
        cfg = WalkConfig(
            lattice=Lattice.HALF_LINE,
            pseq=Constant(p),
            seed=args.seed * 100_003 + trial,
            samples=args.samples,
        )
        estimate, stderr = estimate_transition(cfg, n, i, j)
        dev = abs(estimate - exact) / stderr if stderr > 0 else 0.0
        worst = max(worst, dev)
        flag = ""
        if dev > 4.0:
            outside += 1
            flag = "  <-- outside 4 se"
        if flag or not args.quiet:
            print(
                f"p={p:.3f} n={n:2d} {i}->{j:2d}  exact={exact:.6f} "
                f"mc={estimate:.6f} se={stderr:.2e} dev={dev:5.2f}{flag}"
            )

    print(f"\n{args.trials} tuples, worst deviation {worst:.2f} se, {outside} outside 4 se")
    allowance = max(1, args.trials // 100)
    if outside > allowance:
        print(f"FAIL: more than {allowance} outside the agreement bar")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
