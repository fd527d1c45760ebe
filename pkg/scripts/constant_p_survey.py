#!/usr/bin/env python3
"""Survey the constant-probability family across the unit interval.

For each p on a grid: recurrence class, the blocked-scaling threshold
1/(2p-1), the certified eigenvalue disk radius on c0, and the two
dynamics certificates (frequent hypercyclicity / Devaney chaos for the
scaled operator, supercyclicity for the operator itself).
"""

import argparse
import math

from walkdyn.classify import classify
from walkdyn.dynamics import fhc_chaos_certificate, supercyclicity_criterion_certificate
from walkdyn.operators import Constant, make_walk
from walkdyn.seqspace import Lattice, SpaceSpec
from walkdyn.spectral import certified_disk_radius


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p-min", type=float, default=0.1)
    ap.add_argument("--p-max", type=float, default=0.9)
    ap.add_argument("--steps", type=int, default=17)
    ap.add_argument("--space", type=SpaceSpec.parse, default=SpaceSpec.c0())
    ap.add_argument(
        "--lam-factor",
        type=float,
        default=1.5,
        help="certify fhc at lam = factor / (2p-1) whenever p > 1/2",
    )
    args = ap.parse_args()

    print(
        f"{'p':>6}  {'class':<19} {'threshold':>10}  {'disk':>6}  "
        f"{'fhc(lam)':<22} {'supercyclic':<13}"
    )
    for k in range(args.steps):
        p = args.p_min + (args.p_max - args.p_min) * k / max(args.steps - 1, 1)
        op = make_walk(Lattice.HALF_LINE, Constant(p))
        verdict = classify(Constant(p)).verdict.value
        if p > 0.5:
            threshold = f"{1.0 / (2.0 * p - 1.0):10.4f}"
            lam = args.lam_factor / (2.0 * p - 1.0)
            fhc = fhc_chaos_certificate(op, lam, args.space)
            fhc_cell = f"{fhc.verdict.value} at {lam:.3f}"
        else:
            threshold = f"{'inf':>10}"
            fhc = fhc_chaos_certificate(op, 2.0, args.space)
            fhc_cell = f"{fhc.verdict.value} at 2.000"
        disk = certified_disk_radius(p, args.space)
        sc = supercyclicity_criterion_certificate(op, args.space)
        print(
            f"{p:6.3f}  {verdict:<19} {threshold}  {disk:6.3f}  "
            f"{fhc_cell:<22} {sc.verdict.value:<13}"
        )

    print()
    print(f"space: {args.space}")
    print("threshold = smallest |lam| the scaling certificate can reach")


if __name__ == "__main__":
    main()
