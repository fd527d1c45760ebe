"""Right inverse and kernel structure of the half-line walk operator.

The half-line operator W is onto whenever all jump probabilities sit in
(0, 1): given v, the sequence u with u_0 = 0,

    u_1 = v_0 / p_0,      u_n = v_{n-1} / p_{n-1} + r_{n-1} u_{n-2},

where r_k = (p_k - 1)/p_k, satisfies W u = v row by row.  Beyond the
support of v the recurrence continues geometrically with factors r_k, so
the result decays iff |r_k| stays below 1 there, i.e. the tail jump
probabilities exceed one half.  For constant p the map v -> u is exactly
convolution with the kernel a_{2j+1} = r^j / p, giving the operator norm
1/(2p - 1) on each of c0, l^q, l^infinity.

Kernel bases: W^n kills an n-dimensional space of decaying sequences when
p > 1/2.  Each basis vector is pinned to a coordinate vector on the first
n coordinates and the remaining coordinates are solved row by row from
W^n, whose leading band entry is p^n > 0.
"""

from __future__ import annotations

import math

from .classify import kernel_decay_log_factors, kernel_weights
from .operators import BandedOp, Constant, Periodic, PSeq
from .seqspace import FinSeq, Lattice, SpaceSpec, norm, sup_norm


class TailNotDecayingError(RuntimeError):
    """The inverted sequence's geometric tail does not fall below tolerance.

    Raised when the jump probabilities do not eventually exceed one half,
    so the continuation factors r_k have modulus >= 1 and the preimage
    leaves every one of the sequence spaces.  ``last_magnitude`` reports
    how large the tail still was when the computation stopped.
    """

    def __init__(self, message: str, last_magnitude: float):
        super().__init__(message)
        self.last_magnitude = last_magnitude


def jump_ratio(p: float) -> float:
    """Continuation factor (p - 1)/p of the inversion recurrence."""
    return (p - 1.0) / p


def _require_half_line(op: BandedOp) -> None:
    if op.lattice is not Lattice.HALF_LINE:
        raise ValueError("the right-inverse construction applies to half-line operators")


def tail_ratio_bound(op: BandedOp) -> float:
    """sup |r_k| over the probability values taken infinitely often."""
    return max(abs(jump_ratio(p)) for p in op.pseq.tail_probabilities())


def ratio_bound(op: BandedOp) -> float:
    """sup |r_k| over every probability value the sequence takes."""
    return max(abs(jump_ratio(p)) for p in op.pseq.probabilities())


def step_norm_bound(op: BandedOp) -> float:
    """Proven per-application norm bound for the right inverse.

    For constant p > 1/2 this is exactly 1/(2p - 1).  In general the
    inversion coefficients are dominated by the l1 kernel with ratio
    sup |r_k| and prefactor 1/min p_k, giving 1/(min p_k * (1 - sup |r_k|));
    the constant case reduces to the same number.  Returns +inf when some
    |r_k| >= 1, where no such bound exists.
    """
    if isinstance(op.pseq, Constant):
        p = op.pseq.p
        return 1.0 / (2.0 * p - 1.0) if p > 0.5 else math.inf
    rbar = ratio_bound(op)
    if rbar >= 1.0:
        return math.inf
    pmin = min(op.pseq.probabilities())
    return 1.0 / (pmin * (1.0 - rbar))


def tail_step_norm_bound(op: BandedOp) -> float:
    """Same bound computed from the eventual probability values only."""
    rbar = tail_ratio_bound(op)
    if rbar >= 1.0:
        return math.inf
    pmin = min(op.pseq.tail_probabilities())
    if isinstance(op.pseq, Constant):
        return 1.0 / (2.0 * op.pseq.p - 1.0)
    return 1.0 / (pmin * (1.0 - rbar))


def right_inverse(
    op: BandedOp,
    v: FinSeq,
    tol: float = 1e-13,
    max_support: int | None = None,
) -> FinSeq:
    """Preimage u with W u = v, u_0 = 0, truncated once the tail decays.

    The recurrence is evaluated until both parity chains of the geometric
    continuation fall below ``tol * sup|v|`` past the support of v.  When
    the tail cannot decay (some eventual p_k <= 1/2) and no explicit
    ``max_support`` is supplied, :class:`TailNotDecayingError` is raised;
    with ``max_support`` the truncated sequence is returned as-is.
    """
    _require_half_line(op)
    if v.lattice is not Lattice.HALF_LINE:
        raise ValueError("the vector must live on the half-line")
    vt = v.trim()
    sup = vt.support()
    if sup is None:
        return FinSeq.zero(Lattice.HALF_LINE)
    hi = sup[1]
    scale = vt.sup_abs()
    threshold = tol * scale
    rbar = tail_ratio_bound(op)
    if max_support is not None:
        cap = max(max_support, hi + 2)
    elif rbar < 1.0:
        # decay per index is at worst sqrt(rbar); size the cap off the
        # proven step bound so the threshold is reachable with margin
        start = step_norm_bound(op)
        if not math.isfinite(start):
            start = tail_step_norm_bound(op) * 1e6
        need = math.log(max(tol, 1e-300) / max(start, 1.0)) / math.log(rbar)
        cap = hi + 2 * (int(math.ceil(need)) + 8) + 16
    else:
        # no decay possible; the only way out is exact cancellation
        cap = hi + 128

    pseq = op.pseq
    u: list[complex] = [0.0 + 0.0j]
    for n in range(1, cap + 1):
        pn1 = pseq.at(n - 1)
        prev2 = u[n - 2] if n >= 2 else u[0]
        u.append(vt.at(n - 1) / pn1 + jump_ratio(pn1) * prev2)
        if n - 1 > hi and abs(u[n]) <= threshold and abs(u[n - 1]) <= threshold:
            return FinSeq(Lattice.HALF_LINE, 0, tuple(u)).trim()
    if max_support is not None:
        return FinSeq(Lattice.HALF_LINE, 0, tuple(u)).trim()
    last = max(abs(u[-1]), abs(u[-2])) if len(u) >= 2 else abs(u[-1])
    raise TailNotDecayingError(
        "preimage tail has not decayed below tolerance: the jump "
        f"probabilities do not eventually exceed one half (|tail| ~ {last:.3e})",
        last,
    )


def right_inverse_power(
    op: BandedOp,
    v: FinSeq,
    n: int,
    tol: float = 1e-13,
    max_support: int | None = None,
) -> FinSeq:
    """n-fold right inverse.  Coordinates 0..n-1 of the result are exact
    zeros, and each application multiplies the norm by at most the step
    bound, so the sup norm grows no faster than step_norm_bound(op)**n."""
    if n < 0:
        raise ValueError("power must be nonnegative")
    cur = v
    for _ in range(n):
        cur = right_inverse(op, cur, tol=tol, max_support=max_support)
    return cur


def kernel_window_for_tol(pseq: PSeq, tol: float, cap: int = 12000) -> int:
    """Index horizon past which the kernel weights stay below tol.

    Sized from the weight recurrence itself, so it is valid for any
    probability sequence with decaying kernel chains; raises ValueError
    when the chains do not decay (the horizon would be infinite).
    """
    even, odd = kernel_decay_log_factors(pseq)
    if even >= -1e-12 or odd >= -1e-12:
        raise ValueError(
            "kernel weights do not decay (some parity chain has per-cycle "
            "growth factor >= 1), so no finite window reaches the tolerance"
        )
    cycle = len(pseq.values) if isinstance(pseq, Periodic) else 1
    run_needed = 2 * cycle + 2
    w = kernel_weights(pseq, cap)
    run = 0
    for n, wn in enumerate(w):
        run = run + 1 if wn < tol else 0
        if run >= run_needed:
            return n
    return cap


def kernel_basis(
    op: BandedOp, n: int, window: int, tol: float = 1e-12
) -> list[FinSeq]:
    """Basis of the kernel of W^n for a half-line walk with decaying weights.

    Returns n vectors; vector i agrees with the coordinate vector e_i on
    coordinates 0..n-1 (so the leading n-by-n minor of the basis is the
    identity) and the remaining coordinates are solved from the rows of
    W^n, restricted to the window [0, window + n].  Trailing entries below
    ``tol`` are dropped; they shrink like the kernel weights (for constant
    p that is sqrt((1-p)/p) per index).
    """
    _require_half_line(op)
    even, odd = kernel_decay_log_factors(op.pseq)
    if even >= -1e-12 or odd >= -1e-12:
        raise ValueError(
            "the kernel is trivial in the space (weights do not decay; for "
            "constant p that means p <= 1/2), so no basis exists"
        )
    if n < 1:
        raise ValueError("the power must be at least 1")
    if window < 1:
        raise ValueError("window must be positive")
    rows = [op.power_row(n, j) for j in range(window)]
    basis: list[FinSeq] = []
    for i in range(n):
        u: list[complex] = [1.0 + 0.0j if k == i else 0.0 + 0.0j for k in range(n)]
        for j in range(window):
            row = rows[j]
            lead = row.at(j + n).real
            if lead <= 0:
                raise AssertionError("leading band entry of W^n must be positive")
            acc = 0.0 + 0.0j
            for k in range(max(0, j - n), j + n):
                acc += row.at(k) * u[k]
            u.append(-acc / lead)
        # drop the tail once it is below tolerance for good
        last = len(u) - 1
        while last > 0 and abs(u[last]) < tol and abs(u[last - 1]) < tol:
            last -= 1
        basis.append(FinSeq(Lattice.HALF_LINE, 0, tuple(u[: last + 1])))
    return basis


def kernel_span_approx(
    x: FinSeq,
    op: BandedOp,
    tolerance: float = 1e-10,
    space: SpaceSpec | None = None,
) -> tuple[FinSeq, float]:
    """Approximate x by a kernel vector of W^n, n = extent of x's support.

    Because basis vector i matches e_i on the first n coordinates, the
    combination sum_i x_i V_i agrees with x there exactly and the achieved
    error is the norm of the basis tails.  Returns (combination, error in
    the chosen space; sup norm by default).
    """
    _require_half_line(op)
    xt = x.trim()
    sup = xt.support()
    if sup is None:
        return FinSeq.zero(Lattice.HALF_LINE), 0.0
    if sup[0] < 0:
        raise ValueError("the vector must live on the half-line")
    n = sup[1] + 1
    kernel_tol = tolerance * 1e-3
    window = n + max(16, kernel_window_for_tol(op.pseq, max(kernel_tol, 1e-300)) + 8)
    basis = kernel_basis(op, n, window, tol=kernel_tol)
    combo = FinSeq.zero(Lattice.HALF_LINE)
    for i in range(n):
        c = xt.at(i)
        if c != 0:
            combo = combo + c * basis[i]
    err_space = space or SpaceSpec.c0()
    return combo, norm(xt - combo, err_space)
