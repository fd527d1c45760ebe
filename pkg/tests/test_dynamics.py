import math
import random

import pytest

from walkdyn.dynamics import (
    CertKind,
    Verdict,
    constant_tail_obstruction,
    fhc_chaos_certificate,
    line_walk_lower_bound,
    lower_density_estimate,
    orbit_density_probe,
    supercyclicity_criterion_certificate,
)
from walkdyn.operators import Constant, ListWithTail, Periodic, make_walk
from walkdyn.seqspace import FinSeq, Lattice, SpaceSpec, norm, sup_norm

from conftest import random_finseq


def walk(pseq, lattice=Lattice.HALF_LINE):
    return make_walk(lattice, pseq)


class TestFhcCertificate:
    def test_yes_above_threshold(self, walk_075):
        cert = fhc_chaos_certificate(walk_075, 3.0, SpaceSpec.c0())
        assert cert.kind is CertKind.FHC_CHAOS
        assert cert.verdict is Verdict.YES
        assert cert.witness["certified_ratio"] == pytest.approx(2 / 3, abs=1e-12)
        assert cert.witness["max_empirical_ratio"] <= 2 / 3 * (1 + 1e-6)
        assert cert.witness["periodic_residual"] < 1e-8

    def test_yes_survives_doubled_horizon(self, walk_075):
        base = fhc_chaos_certificate(walk_075, 3.0, SpaceSpec.c0(), n_max=16)
        double = fhc_chaos_certificate(walk_075, 3.0, SpaceSpec.c0(), n_max=32)
        assert base.verdict is Verdict.YES
        assert double.verdict is Verdict.YES

    def test_no_by_criterion_below_threshold(self, walk_075):
        cert = fhc_chaos_certificate(walk_075, 1.5, SpaceSpec.c0())
        assert cert.verdict is Verdict.NO
        assert "not a disproof" in cert.reason
        assert cert.witness["certified_ratio"] == pytest.approx(4 / 3, abs=1e-12)

    def test_no_is_disproof_for_small_lambda(self, walk_075):
        cert = fhc_chaos_certificate(walk_075, 1.0, SpaceSpec.c0())
        assert cert.verdict is Verdict.NO
        assert "disproof" in cert.reason
        assert cert.witness["certified_ratio"] == pytest.approx(2.0, abs=1e-12)

    def test_yes_monotone_in_lambda_modulus(self, walk_075):
        verdicts = [
            fhc_chaos_certificate(walk_075, lam, SpaceSpec.c0()).verdict
            for lam in (2.2, 2.8, 3.5, 5.0, 2.5j, -4.0)
        ]
        assert all(v is Verdict.YES for v in verdicts)

    def test_undetermined_when_no_bound(self):
        cert = fhc_chaos_certificate(walk(Constant(0.45)), 3.0, SpaceSpec.c0())
        assert cert.verdict is Verdict.UNDETERMINED
        assert not math.isfinite(cert.witness["certified_ratio"])

    def test_linf_rejected(self, walk_075):
        with pytest.raises(ValueError):
            fhc_chaos_certificate(walk_075, 3.0, SpaceSpec.linf())

    def test_c_space_blocked_with_reason(self, walk_075):
        cert = fhc_chaos_certificate(walk_075, 3.0, SpaceSpec.c())
        assert cert.verdict is Verdict.UNDETERMINED
        assert cert.reason

    def test_inhomogeneous_decaying_yes(self):
        op = walk(Periodic((0.7, 0.85)))
        cert = fhc_chaos_certificate(op, 5.0, SpaceSpec.c0())
        assert cert.verdict is Verdict.YES

    def test_line_lattice_rejected(self):
        with pytest.raises(ValueError):
            fhc_chaos_certificate(walk(Constant(0.75), Lattice.LINE), 3.0, SpaceSpec.c0())


class TestSupercyclicityCertificate:
    def test_constant_transient_yes(self, walk_075):
        cert = supercyclicity_criterion_certificate(walk_075, SpaceSpec.c0())
        assert cert.verdict is Verdict.YES
        assert cert.witness["max_product"] < 1e-10

    def test_lq_yes(self, walk_075):
        cert = supercyclicity_criterion_certificate(walk_075, SpaceSpec.lq(2))
        assert cert.verdict is Verdict.YES

    def test_inhomogeneous_yes(self):
        op = walk(ListWithTail((0.6, 0.8), 0.7))
        cert = supercyclicity_criterion_certificate(op, SpaceSpec.c0())
        assert cert.verdict is Verdict.YES

    def test_symmetric_undetermined_kernel_trivial(self):
        cert = supercyclicity_criterion_certificate(walk(Constant(0.5)), SpaceSpec.lq(1))
        assert cert.verdict is Verdict.UNDETERMINED
        assert "kernel is trivial" in cert.reason

    def test_recurrent_undetermined(self):
        cert = supercyclicity_criterion_certificate(walk(Constant(0.3)), SpaceSpec.c0())
        assert cert.verdict is Verdict.UNDETERMINED

    def test_yes_near_boundary(self):
        # backward norms blow up like 10^n here; the verdict must come
        # from the per-step identity, not the ill-conditioned round trip
        cert = supercyclicity_criterion_certificate(walk(Constant(0.55)), SpaceSpec.c0())
        assert cert.verdict is Verdict.YES
        assert cert.witness["step_residual"] < 1e-12
        assert cert.witness["backward_dynamic_range"] > 1e10

    def test_yes_survives_doubled_horizon(self, walk_075):
        a = supercyclicity_criterion_certificate(walk_075, SpaceSpec.c0(), n_max=12)
        b = supercyclicity_criterion_certificate(walk_075, SpaceSpec.c0(), n_max=24)
        assert a.verdict is b.verdict is Verdict.YES


class TestObstruction:
    def test_constant_vector_is_fixed(self):
        op = walk(Constant(0.7))
        rep = constant_tail_obstruction(op, 1.0, FinSeq.zero(), n_max=30)
        for v in rep.probe_values:
            assert v == pytest.approx(1.0, abs=1e-12)
        assert rep.row_sum_deviation < 1e-12

    def test_perturbed_limit_and_floor(self):
        op = walk(Constant(0.7))
        rep = constant_tail_obstruction(op, 1.0, FinSeq.unit(0), n_max=200)
        assert abs(rep.probe_values[-1] - 1.0) < 1e-3
        assert rep.floor_ratio == pytest.approx(0.5)
        assert all(r >= rep.floor_ratio - 1e-12 for r in rep.probe_ratios)

    def test_alpha_zero_rejected(self):
        with pytest.raises(ValueError):
            constant_tail_obstruction(walk(Constant(0.7)), 0.0, FinSeq.zero())

    def test_lattice_mismatch_rejected(self):
        with pytest.raises(ValueError):
            constant_tail_obstruction(
                walk(Constant(0.7)), 1.0, FinSeq.unit(0, Lattice.LINE)
            )


class TestLineBound:
    def test_bound_holds_on_random_vectors(self):
        rng = random.Random(41)
        for p in (0.6, 0.7, 0.9):
            op = walk(Constant(p), Lattice.LINE)
            factor = abs(1 - 2 * p)
            for _ in range(25):
                x = random_finseq(rng, Lattice.LINE, max_index=6)
                n = rng.randint(1, 15)
                rep = line_walk_lower_bound(op, x, n, SpaceSpec.c0())
                assert rep.holds
                assert rep.measured >= factor**n * rep.start_norm * (1 - 1e-10)

    def test_threshold_reported(self):
        op = walk(Constant(0.9), Lattice.LINE)
        rep = line_walk_lower_bound(op, FinSeq.unit(0, Lattice.LINE), 5, SpaceSpec.c0())
        assert rep.blocked_scaling_threshold == pytest.approx(1 / 0.8)

    def test_one_step_explicit(self):
        op = walk(Constant(0.9), Lattice.LINE)
        rep = line_walk_lower_bound(op, FinSeq.unit(0, Lattice.LINE), 1, SpaceSpec.c0())
        assert rep.measured == pytest.approx(0.9)
        assert rep.bound == pytest.approx(0.8)

    def test_half_probability_rejected(self):
        op = walk(Constant(0.5), Lattice.LINE)
        with pytest.raises(ValueError):
            line_walk_lower_bound(op, FinSeq.unit(0, Lattice.LINE), 3, SpaceSpec.c0())

    def test_half_line_rejected(self, walk_075):
        with pytest.raises(ValueError):
            line_walk_lower_bound(walk_075, FinSeq.unit(0), 3, SpaceSpec.c0())


class TestOrbitProbe:
    def test_probe_records_all_steps(self, walk_075):
        targets = [FinSeq.unit(0), FinSeq.unit(1)]
        rep = orbit_density_probe(walk_075, FinSeq.unit(0), targets, n_max=40)
        assert len(rep.orbit_norms) == 41
        assert len(rep.best) == 2
        d0, t0 = rep.best[0]
        assert d0 == 0.0 and t0 == 0  # the orbit starts at the target

    def test_projective_scale_invariance(self, walk_075):
        rng = random.Random(53)
        targets = [random_finseq(rng, max_index=4) for _ in range(2)]
        x = random_finseq(rng, max_index=4)
        a = orbit_density_probe(walk_075, x, targets, n_max=25, projective=True)
        b = orbit_density_probe(walk_075, x * 7.25, targets, n_max=25, projective=True)
        for (da, _), (db, _) in zip(a.best, b.best):
            assert da == pytest.approx(db, abs=1e-10)

    def test_threshold_controls_visits(self, walk_075):
        rep = orbit_density_probe(
            walk_075, FinSeq.unit(0), [FinSeq.unit(0)], n_max=30, threshold=0.5
        )
        assert 0 in rep.visits[0]


class TestLowerDensity:
    def test_even_times_half(self):
        hits = list(range(2, 1001, 2))
        assert lower_density_estimate(hits, 1000) == pytest.approx(0.5, abs=0.01)

    def test_empty_is_zero(self):
        assert lower_density_estimate([], 100) == 0.0

    def test_all_times_is_one(self):
        assert lower_density_estimate(list(range(1, 101)), 100) == pytest.approx(1.0)

    def test_never_exceeds_one(self):
        assert lower_density_estimate([0, 1, 1, 2, 3], 3) <= 1.0

    def test_sparse_hits_low_density(self):
        hits = [2**k for k in range(10)]
        assert lower_density_estimate(hits, 512) < 0.05
