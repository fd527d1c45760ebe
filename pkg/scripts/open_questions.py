#!/usr/bin/env python3
"""Probe runs for the questions the certificates leave open.

Nothing here asserts a verdict.  Each scenario prints the measured
numbers next to what a positive or negative answer would predict, so
the output is raw material for conjecture, not a certificate.
"""

import argparse

from walkdyn.dynamics import (
    constant_tail_obstruction,
    fhc_chaos_certificate,
    lower_density_estimate,
    orbit_density_probe,
)
from walkdyn.operators import Constant, make_walk
from walkdyn.seqspace import FinSeq, Lattice, SpaceSpec
from walkdyn.spectral import dual_point_spectrum_report, symmetric_dual_interval_check


def scenario_threshold_scaling(n_max):
    """Behavior of the scaled walk just above and at the certificate threshold."""
    p = 0.75
    op = make_walk(Lattice.HALF_LINE, Constant(p))
    threshold = 1.0 / (2.0 * p - 1.0)
    print(f"scaled walk at p = {p}: certificate threshold |lam| = {threshold}")
    for eps in (0.2, 0.05, 0.01, 0.0):
        lam = threshold * (1.0 + eps)
        cert = fhc_chaos_certificate(op, lam, SpaceSpec.c0(), n_max=n_max)
        ratio = cert.witness.get("certified_ratio")
        measured = cert.witness.get("measured_ratio")
        print(
            f"  lam = {lam:8.5f}  verdict = {cert.verdict.value:13s} "
            f"certified ratio = {ratio:.6f}"
            + (f"  last empirical ratio = {measured:.6f}" if measured else "")
        )
    print("  open: what happens exactly at the threshold between chaos and")
    print("  boundedness; the certificate refuses both neighbors of lam = 2")
    print()


def scenario_unscaled_orbit_density(n_max):
    """Visit statistics of an unscaled transient walk orbit near small targets."""
    op = make_walk(Lattice.HALF_LINE, Constant(0.75))
    x = FinSeq.unit(0) + FinSeq.unit(3) * 0.5
    targets = [FinSeq.zero(), FinSeq.unit(1) * 0.1]
    rep = orbit_density_probe(op, x, targets, n_max=n_max, threshold=0.05)
    print("unscaled walk at p = 0.75: supercyclic, hypercyclicity open")
    for k, (dist, step) in enumerate(rep.best):
        hits = rep.visits[k]
        dens = lower_density_estimate(hits, n_max) if hits else 0.0
        print(
            f"  target {k}: best distance {dist:.5f} at step {step}, "
            f"{len(hits)} visits below 0.05, trailing-window density {dens:.3f}"
        )
    print("  open: the orbit contracts toward 0; density against scaled")
    print("  targets is what supercyclicity does not decide")
    print()


def scenario_c_space_limit(n_max):
    """Limit value of orbits started at constants plus perturbations."""
    op = make_walk(Lattice.HALF_LINE, Constant(0.7))
    for alpha in (1.0, -0.5):
        rep = constant_tail_obstruction(op, alpha, FinSeq.unit(0), n_max=n_max)
        print(
            f"convergent-tail start, alpha = {alpha:+.1f}: probe coordinate "
            f"{complex(rep.probe_values[-1]).real:+.6f} after {n_max} steps, "
            f"ratio floor {rep.floor_ratio:.3f}"
        )
    print("  open: on the space of convergent sequences the limit functional")
    print("  pins every orbit; which weaker almost-periodicity survives")
    print()


def scenario_symmetric_walk(n_max):
    """Dual spectrum picture for the balanced walk."""
    rep = dual_point_spectrum_report(Constant(0.5), SpaceSpec.lq(1))
    print(f"balanced walk on l1: zero dual eigenvalue = {rep.zero_is_dual_eigenvalue.value}")
    interval = symmetric_dual_interval_check(n_max=n_max)
    print(
        f"  certified dual eigenvalues: {sum(interval.certified)} of "
        f"{len(interval.lambdas)} grid points in "
        f"[{min(interval.lambdas):+.2f}, {max(interval.lambdas):+.2f}]"
    )
    print("  open: the same walk on c0 has no zero dual eigenvalue; whether")
    print("  some scalar multiple is supercyclic there is not settled here")
    print()


SCENARIOS = {
    "threshold": scenario_threshold_scaling,
    "density": scenario_unscaled_orbit_density,
    "c-limit": scenario_c_space_limit,
    "symmetric": scenario_symmetric_walk,
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--scenario", choices=sorted(SCENARIOS) + ["all"], default="all")
    ap.add_argument("--n-max", type=int, default=200)
    args = ap.parse_args()
    names = sorted(SCENARIOS) if args.scenario == "all" else [args.scenario]
    for name in names:
        SCENARIOS[name](args.n_max)


if __name__ == "__main__":
    main()
