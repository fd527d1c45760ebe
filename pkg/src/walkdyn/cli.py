"""Command-line front end for the walk-operator toolkit.

Every run prints one report to standard output: a JSON envelope carrying
the schema version, the tool version, the effective configuration (with
the exact argv, so any report can be re-run), and the result.  Coordinate
lists and verdict grids can be requested as CSV instead.

Exit status: 0 on success, 2 on invalid input, 3 when the computation
finished but the headline outcome is undetermined (or a preimage tail
refused to decay).  Complex numbers appear in JSON as [real, imag] pairs.
The environment variable WALKDYN_TOL overrides the default tolerance of
subcommands that accept --tol.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys

from . import __version__
from .classify import Classification, classify
from .dynamics import (
    Verdict,
    constant_tail_obstruction,
    fhc_chaos_certificate,
    line_walk_lower_bound,
    lower_density_estimate,
    orbit_density_probe,
    supercyclicity_criterion_certificate,
)
from .inverse_kernel import (
    TailNotDecayingError,
    kernel_basis,
    kernel_window_for_tol,
    right_inverse_power,
    step_norm_bound,
)
from .operators import make_walk, parse_pseq, pseq_text
from .seqspace import FinSeq, Lattice, SpaceSpec, sup_norm
from .spectral import (
    Membership,
    certified_disk_radius,
    dual_point_spectrum_report,
    point_spectrum_probe,
    symmetric_dual_interval_check,
)
from .walk_oracle import WalkConfig, estimate_return_mass, estimate_transition

SCHEMA = 1

_VERDICT_LABEL = {
    Classification.TRANSIENT: "Transient",
    Classification.POSITIVE_RECURRENT: "PositiveRecurrent",
    Classification.NULL_RECURRENT: "NullRecurrent",
    Classification.UNDETERMINED: "Undetermined",
}


def _jsonable(obj):
    """Recursively convert report values into JSON-safe structures."""
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, float):
        if math.isnan(obj):
            return "nan"
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        return obj
    if isinstance(obj, (str, int, bool)) or obj is None:
        return obj
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "value") and obj.__class__.__bases__ and any(
        b.__name__ == "Enum" for b in type(obj).__mro__
    ):
        return obj.value
    return str(obj)


def _finseq_json(x: FinSeq) -> dict:
    sup = x.support()
    if sup is None:
        return {"lattice": x.lattice.value, "offset": 0, "values": []}
    lo, hi = sup
    return {
        "lattice": x.lattice.value,
        "offset": lo,
        "values": [_jsonable(x.at(i)) for i in range(lo, hi + 1)],
    }


def parse_vector(text: str, lattice: Lattice) -> FinSeq:
    """Vector literals: 'e0', 'e-2', or '1,0.5,-0.25' with optional '@off'."""
    t = text.strip()
    if not t:
        raise ValueError("empty vector literal")
    if t[0] == "e" and (t[1:].isdigit() or (t[1:2] == "-" and t[2:].isdigit())):
        return FinSeq.unit(int(t[1:]), lattice)
    offset = 0
    if "@" in t:
        t, _, otext = t.partition("@")
        try:
            offset = int(otext)
        except ValueError:
            raise ValueError(f"bad offset in vector literal: {otext!r}") from None
    try:
        values = [complex(tok) for tok in t.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"bad vector literal: {text!r}") from None
    if not values:
        raise ValueError(f"empty vector literal: {text!r}")
    return FinSeq.from_values(values, offset=offset, lattice=lattice)


def parse_grid(text: str) -> list[float]:
    """Real grid literal 'start:stop:count' (count evenly spaced points)."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid literal must be start:stop:count, got {text!r}")
    a, b, k = float(parts[0]), float(parts[1]), int(parts[2])
    if k < 1:
        raise ValueError("grid count must be at least 1")
    if k == 1:
        return [a]
    return [a + (b - a) * i / (k - 1) for i in range(k)]


def _env_tol() -> float | None:
    raw = os.environ.get("WALKDYN_TOL")
    if raw is None:
        return None
    try:
        v = float(raw)
    except ValueError:
        raise ValueError(f"WALKDYN_TOL must be a number, got {raw!r}") from None
    if not (0 < v < 1):
        raise ValueError("WALKDYN_TOL must lie strictly between 0 and 1")
    return v


def _tol(args, builtin: float) -> float:
    if getattr(args, "tol", None) is not None:
        return args.tol
    env = _env_tol()
    return env if env is not None else builtin


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="walkdyn",
        description="Probes and certificates for random-walk transition operators "
        "acting on sequence spaces.",
        epilog="WALKDYN_TOL overrides the default tolerance of --tol options. "
        "Reports embed schema, tool version and the exact argv.",
    )
    sub = ap.add_subparsers(dest="subcommand", required=True)

    def add_common(p, lattice=True, fmt=True):
        if lattice:
            p.add_argument(
                "--lattice",
                choices=[l.value for l in Lattice],
                default=Lattice.HALF_LINE.value,
                help="state space of the walk (default half-line)",
            )
        if fmt:
            p.add_argument(
                "--format",
                choices=["json", "csv"],
                default="json",
                help="output format (csv only where coordinate/row data exists)",
            )

    p = sub.add_parser("classify", help="recurrence trichotomy of the walk")
    p.add_argument("--pseq", required=True, help="probability sequence, e.g. const:0.7")
    p.add_argument("--horizon", type=int, default=2000)
    p.add_argument("--method", choices=["auto", "series"], default="auto")
    add_common(p)

    p = sub.add_parser("spectrum", help="point-spectrum probes and dual eigenvectors")
    p.add_argument(
        "--mode",
        choices=["grid", "radius", "dual", "symmetric"],
        default="grid",
    )
    p.add_argument("--p", type=float, help="constant jump probability for grid/radius")
    p.add_argument("--pseq", help="probability sequence (dual mode, or const:p)")
    p.add_argument("--space", default="c0", help="c0, c, linf or l<q> (e.g. l2)")
    p.add_argument("--lam", type=complex, help="single eigenvalue candidate")
    p.add_argument("--lam-grid", help="real grid start:stop:count")
    p.add_argument("--band", type=float, default=1e-8, help="unit-circle caution band")
    p.add_argument("--angles", type=int, default=24, help="angle count (radius mode)")
    p.add_argument("--n-max", type=int, default=200, help="coordinate horizon")
    p.add_argument("--tol", type=float, default=None, help="radius search tolerance")
    add_common(p, lattice=False)

    p = sub.add_parser("inverse", help="preimages under the walk operator")
    p.add_argument("--pseq", required=True)
    p.add_argument("--v", required=True, help="target vector literal")
    p.add_argument("--power", type=int, default=1, help="apply the inverse this often")
    p.add_argument("--tol", type=float, default=None, help="tail truncation tolerance")
    p.add_argument("--max-support", type=int, default=None)
    add_common(p, lattice=False)

    p = sub.add_parser("kernel", help="kernel basis of a power of the walk operator")
    p.add_argument("--pseq", required=True)
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--window", type=int, default=None, help="rows to solve (auto-sized)")
    p.add_argument("--tol", type=float, default=None, help="tail truncation tolerance")
    add_common(p, lattice=False)

    p = sub.add_parser("certify", help="dynamics certificates with witnesses")
    p.add_argument("property", choices=["fhc", "supercyclicity"])
    p.add_argument("--pseq", required=True)
    p.add_argument("--lambda", "--lam", dest="lam", type=complex, default=None)
    p.add_argument("--space", default="c0")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--tol", type=float, default=None)
    add_common(p, lattice=False, fmt=False)

    p = sub.add_parser("probe", help="obstruction probes (limit value, norm floor)")
    p.add_argument("kind", choices=["obstruction", "line-bound"])
    p.add_argument("--pseq", required=True)
    p.add_argument("--alpha", type=complex, default=None, help="tail limit (obstruction)")
    p.add_argument("--perturb", default=None, help="perturbation vector (obstruction)")
    p.add_argument("--i", type=int, default=0, help="probe coordinate (obstruction)")
    p.add_argument("--x", default=None, help="start vector (line-bound)")
    p.add_argument("--n", type=int, default=15, help="power (line-bound)")
    p.add_argument("--n-max", type=int, default=50)
    p.add_argument("--space", default="c0")
    add_common(p, fmt=False)

    p = sub.add_parser("oracle", help="Monte Carlo walk statistics, reproducible by seed")
    p.add_argument("--stat", choices=["transition", "return-mass"], default="transition")
    p.add_argument("--pseq", required=True)
    p.add_argument("--n", type=int, default=None, help="step count (transition)")
    p.add_argument("--i", type=int, default=0)
    p.add_argument("--j", type=int, default=None, help="arrival state (transition)")
    p.add_argument("--horizon", type=int, default=None, help="steps (return-mass)")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=1)
    add_common(p)

    p = sub.add_parser("orbit", help="orbit-to-target distance probe")
    p.add_argument("--pseq", required=True)
    p.add_argument("--x", required=True, help="start vector literal")
    p.add_argument("--targets", default="e0", help="vector literals joined by '|'")
    p.add_argument("--space", default="c0")
    p.add_argument("--n-max", type=int, default=200)
    p.add_argument("--threshold", type=float, default=0.25)
    p.add_argument("--projective", action="store_true")
    add_common(p, fmt=False)

    return ap


def _emit_json(config: dict, result: dict) -> None:
    envelope = {
        "schema": SCHEMA,
        "tool": {"name": "walkdyn", "version": __version__},
        "config": _jsonable(config),
        "result": _jsonable(result),
    }
    json.dump(envelope, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _emit_csv(header: list[str], rows: list[list]) -> None:
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_csv_cell(c) for c in row])


def _csv_cell(c):
    if isinstance(c, float):
        return repr(c)
    if isinstance(c, complex):
        return repr(c)
    return c


def _coords_csv(x: FinSeq) -> tuple[list[str], list[list]]:
    sup = x.support()
    rows = []
    if sup is not None:
        for i in range(sup[0], sup[1] + 1):
            v = x.at(i)
            rows.append([i, v.real, v.imag])
    return ["index", "real", "imag"], rows


def _run_classify(args, config) -> tuple[dict, int, tuple | None]:
    pseq = parse_pseq(args.pseq)
    lattice = Lattice(args.lattice)
    verdict = classify(pseq, horizon=args.horizon, lattice=lattice, method=args.method)
    config.update(
        {"pseq": pseq_text(pseq), "lattice": lattice.value, "horizon": args.horizon,
         "method": args.method}
    )

    def series_json(s):
        sums = list(s.partial_sums)
        return {
            "outcome": s.outcome.value,
            "decided_at": s.decided_at,
            "terms": len(sums),
            "partial_sums_head": sums[:8],
            "partial_sum_final": sums[-1] if sums else None,
        }

    result = {
        "verdict": _VERDICT_LABEL[verdict.verdict],
        "method": verdict.method,
        "horizon": verdict.horizon,
        "evidence": {
            "transience_series": series_json(verdict.transience_series),
            "invariant_mass_series": series_json(verdict.invariant_mass_series),
        },
        "detail": verdict.detail,
    }
    code = 3 if verdict.verdict is Classification.UNDETERMINED else 0
    return result, code, None


def _spectrum_p(args) -> float:
    if args.p is not None:
        return args.p
    if args.pseq:
        pseq = parse_pseq(args.pseq)
        if hasattr(pseq, "p"):
            return pseq.p
        raise ValueError("grid/radius modes need a constant probability (use --p)")
    raise ValueError("spectrum needs --p or --pseq const:<p>")


def _run_spectrum(args, config) -> tuple[dict, int, tuple | None]:
    space = SpaceSpec.parse(args.space)
    config.update({"mode": args.mode, "space": str(space)})
    if args.mode == "grid":
        p = _spectrum_p(args)
        if args.lam is not None and args.lam_grid:
            raise ValueError("give either --lam or --lam-grid, not both")
        if args.lam is not None:
            lams = [args.lam]
        elif args.lam_grid:
            lams = [complex(v) for v in parse_grid(args.lam_grid)]
        else:
            raise ValueError("grid mode needs --lam or --lam-grid")
        config.update({"p": p, "band": args.band,
                       "lam_grid": args.lam_grid, "lam": args.lam})
        rows = []
        counts = {"yes": 0, "no": 0, "undetermined": 0}
        for lam in lams:
            v = point_spectrum_probe(p, lam, space, band=args.band)
            counts[v.member.value] += 1
            rows.append(
                {
                    "lam": v.lam,
                    "member": v.member.value,
                    "max_modulus": v.evidence["max_modulus"],
                    "alpha": v.evidence["alpha"],
                    "beta": v.evidence["beta"],
                    "discriminant": v.evidence["discriminant"],
                    "defective": v.evidence["defective"],
                }
            )
        result = {"space": str(space), "p": p, "rows": rows, "counts": counts}
        csv_data = (
            ["lam_re", "lam_im", "member", "max_modulus", "alpha_re", "alpha_im",
             "beta_re", "beta_im", "defective"],
            [
                [r["lam"].real, r["lam"].imag, r["member"], r["max_modulus"],
                 r["alpha"].real, r["alpha"].imag, r["beta"].real, r["beta"].imag,
                 r["defective"]]
                for r in rows
            ],
        )
        return result, 0, csv_data
    if args.mode == "radius":
        p = _spectrum_p(args)
        tol = args.tol if args.tol is not None else 1e-6
        config.update({"p": p, "angles": args.angles, "tol": tol, "band": args.band})
        r = certified_disk_radius(p, space, n_angles=args.angles, tol=tol, band=args.band)
        return (
            {"space": str(space), "p": p, "radius_lower_estimate": r,
             "note": "largest grid-certified disk radius; a lower estimate only"},
            0,
            None,
        )
    if args.mode == "dual":
        if not args.pseq:
            raise ValueError("dual mode needs --pseq")
        pseq = parse_pseq(args.pseq)
        config.update({"pseq": pseq_text(pseq), "n_max": args.n_max})
        rep = dual_point_spectrum_report(pseq, space, n_max=args.n_max)
        result = {
            "space": str(space),
            "zero_is_dual_eigenvalue": rep.zero_is_dual_eigenvalue.value,
            "conclusion": rep.conclusion,
            "coords": list(rep.coords),
            "detail": rep.detail,
        }
        return result, 0, None
    # symmetric interval check at p = 1/2
    lams = tuple(parse_grid(args.lam_grid)) if args.lam_grid else None
    config.update({"n_max": args.n_max, "lam_grid": args.lam_grid})
    rep = symmetric_dual_interval_check(n_max=args.n_max, lambdas=lams)
    result = {
        "lambdas": list(rep.lambdas),
        "certified": list(rep.certified),
        "all_certified": rep.all_certified,
        "symmetric": rep.symmetric,
        "n_max": rep.n_max,
        "conclusion": rep.conclusion,
    }
    return result, 0, None


def _run_inverse(args, config) -> tuple[dict, int, tuple | None]:
    pseq = parse_pseq(args.pseq)
    op = make_walk(Lattice.HALF_LINE, pseq)
    v = parse_vector(args.v, Lattice.HALF_LINE)
    tol = _tol(args, 1e-13)
    if args.power < 0:
        raise ValueError("--power must be nonnegative")
    config.update(
        {"pseq": pseq_text(pseq), "v": args.v, "power": args.power,
         "tolerance": tol, "max_support": args.max_support}
    )
    u = right_inverse_power(op, v, args.power, tol=tol, max_support=args.max_support)
    y = u
    for _ in range(args.power):
        y = op.apply(y)
    residual = sup_norm(y - v)
    bound = step_norm_bound(op)
    result = {
        "coordinates": _finseq_json(u),
        "residual_sup": residual,
        "step_norm_bound": bound if math.isfinite(bound) else None,
    }
    return result, 0, _coords_csv(u)


def _run_kernel(args, config) -> tuple[dict, int, tuple | None]:
    pseq = parse_pseq(args.pseq)
    op = make_walk(Lattice.HALF_LINE, pseq)
    tol = _tol(args, 1e-12)
    if args.power < 1:
        raise ValueError("--power must be at least 1")
    window = args.window
    if window is None:
        window = kernel_window_for_tol(pseq, tol) + args.power
    config.update(
        {"pseq": pseq_text(pseq), "power": args.power, "window": window,
         "tolerance": tol}
    )
    basis = kernel_basis(op, args.power, window, tol=tol)
    residuals = [sup_norm(op.power_apply(args.power, b)) for b in basis]
    result = {
        "power": args.power,
        "window": window,
        "vectors": [_finseq_json(b) for b in basis],
        "residual_sups": residuals,
    }
    header = ["vector", "index", "real", "imag"]
    rows = []
    for k, b in enumerate(basis):
        sub_header, sub_rows = _coords_csv(b)
        rows.extend([[k] + r for r in sub_rows])
    return result, 0, (header, rows)


def _run_certify(args, config) -> tuple[dict, int, tuple | None]:
    pseq = parse_pseq(args.pseq)
    op = make_walk(Lattice.HALF_LINE, pseq)
    space = SpaceSpec.parse(args.space)
    if args.property == "fhc":
        if args.lam is None:
            raise ValueError("certify fhc needs --lambda")
        n_max = args.n_max if args.n_max is not None else 20
        tol = _tol(args, 1e-6)
        cert = fhc_chaos_certificate(op, args.lam, space, n_max=n_max, tol=tol)
    else:
        if args.lam is not None:
            raise ValueError(
                "the supercyclicity certificate takes no --lambda (scalars "
                "are quantified away by the projective orbit)"
            )
        n_max = args.n_max if args.n_max is not None else 16
        tol = _tol(args, 1e-6)
        cert = supercyclicity_criterion_certificate(op, space, n_max=n_max)
    config.update(
        {"pseq": pseq_text(pseq), "space": str(space), "n_max": n_max,
         "tolerance": tol, "lam": args.lam, "property": args.property}
    )
    result = {
        "kind": cert.kind.value,
        "holds": cert.verdict.value,
        "reason": cert.reason,
        "params": cert.params,
        "witness": cert.witness,
    }
    code = 3 if cert.verdict is Verdict.UNDETERMINED else 0
    return result, code, None


def _run_probe(args, config) -> tuple[dict, int, tuple | None]:
    pseq = parse_pseq(args.pseq)
    if args.kind == "obstruction":
        lattice = Lattice(args.lattice)
        op = make_walk(lattice, pseq)
        if args.alpha is None:
            raise ValueError("probe obstruction needs --alpha")
        perturb = (
            parse_vector(args.perturb, lattice)
            if args.perturb
            else FinSeq.zero(lattice)
        )
        config.update(
            {"pseq": pseq_text(pseq), "lattice": lattice.value, "alpha": args.alpha,
             "perturb": args.perturb, "i": args.i, "n_max": args.n_max}
        )
        rep = constant_tail_obstruction(
            op, args.alpha, perturb, i_probe=args.i, n_max=args.n_max
        )
        result = {
            "alpha": rep.alpha,
            "floor": rep.floor,
            "start_norm": rep.start_norm,
            "floor_ratio": rep.floor_ratio,
            "probe_index": rep.probe_index,
            "probe_values": list(rep.probe_values),
            "orbit_sups": list(rep.orbit_sups),
            "probe_ratios": list(rep.probe_ratios),
            "deviation_sups": list(rep.deviation_sups),
            "row_sum_deviation": rep.row_sum_deviation,
            "conclusion": rep.conclusion,
        }
        return result, 0, None
    # line-bound
    op = make_walk(Lattice.LINE, pseq)
    if args.x is None:
        raise ValueError("probe line-bound needs --x")
    x = parse_vector(args.x, Lattice.LINE)
    space = SpaceSpec.parse(args.space)
    config.update(
        {"pseq": pseq_text(pseq), "x": args.x, "n": args.n, "space": str(space)}
    )
    rep = line_walk_lower_bound(op, x, args.n, space)
    result = {
        "factor": rep.factor,
        "n": rep.n,
        "start_norm": rep.start_norm,
        "bound": rep.bound,
        "measured": rep.measured,
        "step_norms": list(rep.step_norms),
        "holds": rep.holds,
        "blocked_scaling_threshold": rep.blocked_scaling_threshold,
        "conclusion": rep.conclusion,
    }
    return result, 0 if rep.holds else 3, None


def _run_oracle(args, config) -> tuple[dict, int, tuple | None]:
    pseq = parse_pseq(args.pseq)
    lattice = Lattice(args.lattice)
    cfg = WalkConfig(lattice=lattice, pseq=pseq, seed=args.seed, samples=args.samples)
    config.update(
        {"pseq": pseq_text(pseq), "lattice": lattice.value, "stat": args.stat,
         "samples": args.samples, "seed": args.seed}
    )
    if args.stat == "transition":
        if args.n is None or args.j is None:
            raise ValueError("oracle --stat transition needs --n and --j")
        config.update({"n": args.n, "i": args.i, "j": args.j})
        est, err = estimate_transition(cfg, args.n, args.i, args.j)
        result = {
            "estimate": est,
            "stderr": err,
            "samples": args.samples,
            "seed": args.seed,
            "n": args.n,
            "i": args.i,
            "j": args.j,
        }
        csv_data = (
            ["n", "i", "j", "estimate", "stderr", "samples", "seed"],
            [[args.n, args.i, args.j, est, err, args.samples, args.seed]],
        )
        return result, 0, csv_data
    if args.horizon is None:
        raise ValueError("oracle --stat return-mass needs --horizon")
    config.update({"horizon": args.horizon, "i": args.i})
    est = estimate_return_mass(cfg, args.horizon, args.i)
    result = {
        "estimate": est,
        "stderr": None,
        "samples": args.samples,
        "seed": args.seed,
        "horizon": args.horizon,
        "i": args.i,
    }
    csv_data = (
        ["horizon", "i", "estimate", "samples", "seed"],
        [[args.horizon, args.i, est, args.samples, args.seed]],
    )
    return result, 0, csv_data


def _run_orbit(args, config) -> tuple[dict, int, tuple | None]:
    pseq = parse_pseq(args.pseq)
    lattice = Lattice(args.lattice)
    op = make_walk(lattice, pseq)
    x = parse_vector(args.x, lattice)
    targets = [parse_vector(t, lattice) for t in args.targets.split("|") if t.strip()]
    if not targets:
        raise ValueError("orbit needs at least one target")
    space = SpaceSpec.parse(args.space)
    config.update(
        {"pseq": pseq_text(pseq), "lattice": lattice.value, "x": args.x,
         "targets": args.targets, "space": str(space), "n_max": args.n_max,
         "threshold": args.threshold, "projective": args.projective}
    )
    rep = orbit_density_probe(
        op, x, targets, space=space, n_max=args.n_max,
        threshold=args.threshold, projective=args.projective,
    )
    result = {
        "n_max": rep.n_max,
        "space": str(rep.space),
        "threshold": rep.threshold,
        "projective": rep.projective,
        "orbit_norms": list(rep.orbit_norms),
        "best": [{"distance": d, "at": t} for d, t in rep.best],
        "visits": [list(v) for v in rep.visits],
        "lower_density_estimates": [
            lower_density_estimate(v, rep.n_max) if rep.n_max >= 1 else 0.0
            for v in rep.visits
        ],
        "note": "small minima are evidence, never proof of orbit density",
    }
    return result, 0, None


_HANDLERS = {
    "classify": _run_classify,
    "spectrum": _run_spectrum,
    "inverse": _run_inverse,
    "kernel": _run_kernel,
    "certify": _run_certify,
    "probe": _run_probe,
    "oracle": _run_oracle,
    "orbit": _run_orbit,
}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    config: dict = {"argv": argv, "subcommand": args.subcommand}
    fmt = getattr(args, "format", "json")
    config["format"] = fmt
    try:
        result, code, csv_data = _HANDLERS[args.subcommand](args, config)
    except TailNotDecayingError as exc:
        _emit_json(
            config,
            {
                "error": {
                    "type": "tail-not-decaying",
                    "message": str(exc),
                    "last_magnitude": exc.last_magnitude,
                }
            },
        )
        return 3
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if fmt == "csv":
        if csv_data is None:
            print("error: csv output is not available for this subcommand", file=sys.stderr)
            return 2
        _emit_csv(*csv_data)
        return code
    _emit_json(config, result)
    return code


if __name__ == "__main__":
    sys.exit(main())
