"""Linear dynamics of nearest-neighbor walk operators on sequence spaces.

The package builds banded transition operators for simple and
site-dependent walks on the half-line and the line, inverts them
explicitly, computes kernel bases of their powers, probes their point
spectrum through transfer matrices, classifies the underlying walks,
and assembles numerical certificates for supercyclicity, frequent
hypercyclicity and chaos of scalar multiples.
"""

__version__ = "0.1.0"

from .classify import (
    Classification,
    ClassVerdict,
    ConvergencePolicy,
    SeriesDecision,
    SeriesOutcome,
    classify,
    invariant_mass_series_partial,
    judge_series,
    kernel_decay_log_factors,
    kernel_weight,
    kernel_weights,
    transience_series_partial,
)
from .dynamics import (
    CertKind,
    Certificate,
    LineBoundReport,
    ObstructionReport,
    OrbitProbeReport,
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
    jump_ratio,
    kernel_basis,
    kernel_span_approx,
    kernel_window_for_tol,
    ratio_bound,
    right_inverse,
    right_inverse_power,
    step_norm_bound,
    tail_ratio_bound,
    tail_step_norm_bound,
)
from .operators import (
    BandedOp,
    Constant,
    ListWithTail,
    Periodic,
    PSeq,
    make_walk,
    parse_pseq,
    pseq_text,
)
from .seqspace import (
    FinSeq,
    Lattice,
    SpaceKind,
    SpaceSpec,
    norm,
    sup_norm,
)
from .spectral import (
    DualSpectrumReport,
    IntervalCheckReport,
    Membership,
    SpectrumVerdict,
    TransferMatrix,
    alternating_kernel_weights,
    certified_disk_radius,
    dual_point_spectrum_report,
    eigen_sequence,
    kernel_vector,
    left_kernel_vector,
    point_spectrum_probe,
    symmetric_dual_interval_check,
)
from .walk_oracle import WalkConfig, estimate_return_mass, estimate_transition

__all__ = [
    "__version__",
    "BandedOp",
    "CertKind",
    "Certificate",
    "ClassVerdict",
    "Classification",
    "Constant",
    "ConvergencePolicy",
    "DualSpectrumReport",
    "FinSeq",
    "IntervalCheckReport",
    "Lattice",
    "LineBoundReport",
    "ListWithTail",
    "Membership",
    "ObstructionReport",
    "OrbitProbeReport",
    "PSeq",
    "Periodic",
    "SeriesDecision",
    "SeriesOutcome",
    "SpaceKind",
    "SpaceSpec",
    "SpectrumVerdict",
    "TailNotDecayingError",
    "TransferMatrix",
    "Verdict",
    "WalkConfig",
    "alternating_kernel_weights",
    "certified_disk_radius",
    "classify",
    "constant_tail_obstruction",
    "dual_point_spectrum_report",
    "eigen_sequence",
    "estimate_return_mass",
    "estimate_transition",
    "fhc_chaos_certificate",
    "invariant_mass_series_partial",
    "judge_series",
    "jump_ratio",
    "kernel_basis",
    "kernel_decay_log_factors",
    "kernel_span_approx",
    "kernel_vector",
    "kernel_weight",
    "kernel_weights",
    "kernel_window_for_tol",
    "left_kernel_vector",
    "line_walk_lower_bound",
    "lower_density_estimate",
    "make_walk",
    "norm",
    "orbit_density_probe",
    "parse_pseq",
    "point_spectrum_probe",
    "pseq_text",
    "ratio_bound",
    "right_inverse",
    "right_inverse_power",
    "step_norm_bound",
    "sup_norm",
    "supercyclicity_criterion_certificate",
    "symmetric_dual_interval_check",
    "tail_ratio_bound",
    "tail_step_norm_bound",
    "transience_series_partial",
]
