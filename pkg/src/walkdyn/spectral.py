"""Point-spectrum probes for the half-line walk via its transfer matrix.

For the constant-p half-line walk, any eigenvector candidate for the
eigenvalue lam is a scalar multiple of the sequence (q_n) fixed by

    q_0 = 1,  q_1 = (lam + p - 1)/p,
    (1-p) q_n - lam q_{n+1} + p q_{n+2} = 0,

equivalently by iterating the companion matrix [[lam/p, (p-1)/p], [1, 0]],
whose determinant is (1-p)/p for every lam.  The characteristic roots
solve p z^2 - lam z + (1-p) = 0 and their moduli decide membership of
(q_n) in c0, l^q or l^infinity, away from the unit circle.

Zero-eigenvalue structure is available for position-dependent
probabilities as well: right kernel vectors, their parity weights, and
left (dual) kernel vectors with exact summability and boundedness tests.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field

from .classify import kernel_weights
from .operators import PSeq, Constant, ListWithTail, Periodic
from .seqspace import SpaceKind, SpaceSpec


def _check_p(p: float) -> float:
    p = float(p)
    if not (0.0 < p < 1.0):
        raise ValueError("p must lie strictly between 0 and 1")
    return p


@dataclass(frozen=True)
class TransferMatrix:
    """Companion matrix of the three-term eigenvector recurrence."""

    p: float
    lam: complex

    def __post_init__(self):
        _check_p(self.p)
        object.__setattr__(self, "lam", complex(self.lam))

    def entries(self) -> tuple[tuple[complex, complex], tuple[complex, complex]]:
        return ((self.lam / self.p, (self.p - 1.0) / self.p), (1.0 + 0.0j, 0.0 + 0.0j))

    def det(self) -> complex:
        (a, b), (c, d) = self.entries()
        return a * d - b * c

    @property
    def discriminant(self) -> complex:
        return self.lam * self.lam - 4.0 * self.p * (1.0 - self.p)

    def is_defective(self, tol: float = 1e-12) -> bool:
        return abs(self.discriminant) <= tol

    def eigenvalues(self) -> tuple[complex, complex]:
        """Roots of p z^2 - lam z + (1-p) = 0, largest modulus first."""
        s = cmath.sqrt(self.discriminant)
        a = (self.lam + s) / (2.0 * self.p)
        b = (self.lam - s) / (2.0 * self.p)
        if abs(a) >= abs(b):
            return a, b
        return b, a


def eigen_sequence(p: float, lam: complex, n_max: int) -> list[complex]:
    """Eigenvector candidate (q_n), n = 0..n_max, normalized by q_0 = 1."""
    _check_p(p)
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    lam = complex(lam)
    q = [1.0 + 0.0j]
    if n_max >= 1:
        q.append((lam + p - 1.0) / p)
    for _ in range(2, n_max + 1):
        q.append((lam * q[-1] - (1.0 - p) * q[-2]) / p)
    return q


class Membership(enum.Enum):
    YES = "yes"
    NO = "no"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class SpectrumVerdict:
    lam: complex
    space: SpaceSpec
    member: Membership
    evidence: dict = field(default_factory=dict)


def point_spectrum_probe(
    p: float,
    lam: complex,
    space: SpaceSpec,
    band: float = 1e-8,
    defect_tol: float = 1e-12,
) -> SpectrumVerdict:
    """Decide whether the eigenvector candidate at lam lies in the space.

    The decision uses only the characteristic root moduli: strictly inside
    the unit circle means membership in every space here (geometric decay),
    strictly outside means no membership.  Within ``band`` of the unit
    circle the probe answers Undetermined, except for real lam with a
    conjugate root pair, where both moduli equal sqrt((1-p)/p) exactly;
    at p = 1/2 that pair sits on the unit circle and gives a bounded
    non-decaying candidate: member of l^infinity, not of c0, c or l^q.
    A repeated root exactly on the unit circle is decided from the
    linear-term coefficient of (e + f n) theta^n; repeated roots merely
    near the circle stay Undetermined.
    """
    _check_p(p)
    tm = TransferMatrix(p, lam)
    lam = tm.lam
    disc = tm.discriminant
    defective = abs(disc) <= defect_tol
    alpha, beta = tm.eigenvalues()
    conjugate_pair = (
        not defective and lam.imag == 0.0 and disc.imag == 0.0 and disc.real < 0.0
    )
    if defective:
        m = abs(lam / (2.0 * p))
    elif conjugate_pair:
        # conjugate roots: both moduli equal sqrt of the root product
        m = math.sqrt((1.0 - p) / p)
    else:
        m = abs(alpha)
    evidence = {
        "alpha": alpha,
        "beta": beta,
        "alpha_modulus": abs(alpha),
        "beta_modulus": abs(beta),
        "max_modulus": m,
        "discriminant": disc,
        "defective": defective,
        "conjugate_pair": conjugate_pair,
    }
    unit_pair = conjugate_pair and (1.0 - p) / p == 1.0
    evidence["unit_circle_pair"] = unit_pair
    defective_unit = defective and abs(m - 1.0) <= 1e-15

    if defective_unit:
        theta = lam / (2.0 * p)
        growth = (lam + p - 1.0) / p / theta - 1.0
        evidence["defective_growth_coef"] = growth
        if abs(growth) > 1e-12:
            member = Membership.NO
        elif space.kind is SpaceKind.LINF:
            member = Membership.YES
        elif space.kind is SpaceKind.C and theta == 1.0:
            member = Membership.YES
        else:
            member = Membership.NO
    elif unit_pair:
        member = Membership.YES if space.kind is SpaceKind.LINF else Membership.NO
    elif m < 1.0 - band:
        member = Membership.YES
    elif m > 1.0 + band:
        member = Membership.NO
    else:
        member = Membership.UNDETERMINED
    return SpectrumVerdict(lam, space, member, evidence)


def certified_disk_radius(
    p: float,
    space: SpaceSpec,
    n_angles: int = 24,
    tol: float = 1e-6,
    band: float = 1e-8,
) -> float:
    """Largest grid-certified radius of a disk of certified eigenvalues.

    Binary search on r: every lam = r e^{i theta} on the angle grid must
    be certified a member.  This is a lower estimate only; the grid and
    the unit-circle band both bite.  Returns 0.0 when even lam = 0 fails.
    """
    _check_p(p)

    def ok(r: float) -> bool:
        for k in range(n_angles):
            th = 2.0 * math.pi * k / n_angles
            lam = complex(r * math.cos(th), r * math.sin(th))
            if point_spectrum_probe(p, lam, space, band=band).member is not Membership.YES:
                return False
        return True

    if not ok(0.0):
        return 0.0
    lo, hi = 0.0, 2.0
    if ok(hi):
        return hi
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if ok(mid):
            lo = mid
        else:
            hi = mid
    return lo


def alternating_kernel_weights(pseq: PSeq, n_max: int) -> list[float]:
    """Signed weight sequence (-1)^n w_n, n = 0..n_max, w_0 = 1.

    The magnitudes w_n are the parity-product weights of
    :func:`walkdyn.classify.kernel_weight`; they govern whether the walk
    operator has a zero eigenvector in c0 (w_n -> 0) or l^q (sum w_n^q
    finite).  The strict alternating sign here is a bookkeeping
    normalization; the kernel vector itself flips signs in pairs, see
    :func:`kernel_vector`.
    """
    w = kernel_weights(pseq, n_max)
    return [(-1) ** n * w[n] for n in range(n_max + 1)]


def kernel_vector(pseq: PSeq, n_max: int) -> list[float]:
    """Zero-eigenvector coordinates of the half-line walk, u_0 = 1.

    Row n-1 of the operator forces u_n = ((p_{n-1} - 1)/p_{n-1}) u_{n-2}
    (and u_1 = ((p_0 - 1)/p_0) u_0 from the boundary row), so the
    truncated vector satisfies the eigen-equation exactly except at the
    truncation frontier.  |u_n| equals the parity weight w_n.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    u = [1.0]
    if n_max >= 1:
        p0 = pseq.at(0)
        u.append((p0 - 1.0) / p0)
    for n in range(2, n_max + 1):
        p = pseq.at(n - 1)
        u.append(((p - 1.0) / p) * u[n - 2])
    return u


def left_kernel_vector(pseq: PSeq, n_max: int) -> list[float]:
    """Left (dual) zero-eigenvector coordinates: u A = 0, u_0 = 1.

    The defining relations are (1-p_0) u_0 + (1-p_1) u_1 = 0 and
    p_n u_n + (1-p_{n+2}) u_{n+2} = 0, so the parity chains scale by
    -p_n/(1-p_{n+2}).  Growth is capped at 1e280 per coordinate; the list
    is cut short if it would overflow.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    u = [1.0]
    if n_max >= 1:
        u.append(-(1.0 - pseq.at(0)) / (1.0 - pseq.at(1)))
    for n in range(2, n_max + 1):
        p = pseq.at(n - 2)
        val = -(p / (1.0 - pseq.at(n))) * u[n - 2]
        if abs(val) > 1e280:
            break
        u.append(val)
    return u


def _parity_log_products(pseq: PSeq) -> tuple[float, float]:
    """Per-cycle log growth factors of the dual parity chains.

    The dual chain ratio at n has magnitude p_n/(1-p_{n+2}).  For the
    supported probability-sequence forms the eventual per-cycle product
    telescopes to prod p_k/(1-p_k) over a residue class, which gives an
    exact growth criterion (log > 0 grows, = 0 oscillates, < 0 decays).
    """

    def lg(p: float) -> float:
        return math.log(p) - math.log1p(-p)

    if isinstance(pseq, Constant):
        v = lg(pseq.p)
        return v, v
    if isinstance(pseq, ListWithTail):
        v = lg(pseq.tail)
        return v, v
    if isinstance(pseq, Periodic):
        L = len(pseq.values)
        if L % 2 == 1:
            v = math.fsum(lg(p) for p in pseq.values)
            return v, v
        even = math.fsum(lg(pseq.values[k]) for k in range(0, L, 2))
        odd = math.fsum(lg(pseq.values[k]) for k in range(1, L, 2))
        return even, odd
    raise TypeError(f"not a probability sequence: {pseq!r}")


@dataclass(frozen=True)
class DualSpectrumReport:
    space: SpaceSpec
    zero_is_dual_eigenvalue: Membership
    conclusion: str | None
    coords: tuple[float, ...]
    detail: dict = field(default_factory=dict)


def dual_point_spectrum_report(
    pseq: PSeq, space: SpaceSpec, n_max: int = 60
) -> DualSpectrumReport:
    """Test whether the dual operator has the eigenvalue 0 on the dual space.

    Pairings: the dual of c0 (and of c) is l1, the dual of l^q (q > 1) is
    l^{q/(q-1)}, and the dual of l1 is l^infinity.  Membership of the left
    kernel vector is decided exactly from the parity-chain growth factors.
    A YES verdict implies that no nonzero scalar multiple of the walk
    operator is hypercyclic on the space (a dual eigenvalue blocks dense
    orbits).
    """
    if space.kind is SpaceKind.LINF:
        raise ValueError("the dual of l^infinity is not a sequence space; no test here")
    even, odd = _parity_log_products(pseq)
    tol = 1e-12
    if space.kind in (SpaceKind.C0, SpaceKind.C) or (
        space.kind is SpaceKind.LQ and space.q > 1.0
    ):
        # summability in l^s with s = 1 or s = q/(q-1): both chains must decay
        member = (
            Membership.YES if even < -tol and odd < -tol else Membership.NO
        )
        test = "summability"
    else:
        # l1 predual: boundedness in l^infinity
        member = (
            Membership.YES if even <= tol and odd <= tol else Membership.NO
        )
        test = "boundedness"
    coords = tuple(left_kernel_vector(pseq, n_max))
    conclusion = None
    if member is Membership.YES:
        conclusion = (
            f"0 is an eigenvalue of the dual operator on ({space})'; no nonzero "
            f"scalar multiple of the walk operator is hypercyclic on {space}"
        )
    return DualSpectrumReport(
        space,
        member,
        conclusion,
        coords,
        {
            "dual_test": test,
            "even_chain_log_factor": even,
            "odd_chain_log_factor": odd,
        },
    )


@dataclass(frozen=True)
class IntervalCheckReport:
    lambdas: tuple[float, ...]
    certified: tuple[bool, ...]
    all_certified: bool
    symmetric: bool
    n_max: int
    conclusion: str | None
    detail: dict = field(default_factory=dict)


def symmetric_dual_interval_check(
    n_max: int = 200, lambdas: tuple[float, ...] | None = None
) -> IntervalCheckReport:
    """Certify an interval of bounded eigenvector candidates at p = 1/2.

    For the balanced half-line walk and real lam in (-1, 1) the
    characteristic roots form a conjugate pair on the unit circle, so
    (q_n) stays bounded: each lam is certified by checking the
    eigen-equation residual and the explicit bound |c| + |d| from the root
    expansion q_n = c a^n + d b^n.  The operator is symmetric at p = 1/2,
    so each certified lam is a dual eigenvalue of the walk on l1; an
    interval of them leaves no room for supercyclicity there.
    """
    p = 0.5
    if lambdas is None:
        lambdas = tuple(-0.95 + 1.9 * k / 38 for k in range(39))
    certified: list[bool] = []
    sups: list[float] = []
    bounds: list[float] = []
    for lam in lambdas:
        if not (-1.0 < lam < 1.0):
            certified.append(False)
            sups.append(math.nan)
            bounds.append(math.nan)
            continue
        s = math.sqrt(1.0 - lam * lam)
        a = complex(lam, s)
        b = complex(lam, -s)
        q1 = (lam + p - 1.0) / p
        c = (q1 - b) / (a - b)
        d = 1.0 - c
        bound = abs(c) + abs(d)
        q = eigen_sequence(p, lam, n_max)
        sup_q = max(abs(v) for v in q)
        # eigen-equation residual on the computed window
        res = abs((1.0 - p) * q[0] + p * q[1] - lam * q[0])
        for i in range(1, n_max):
            res = max(res, abs((1.0 - p) * q[i - 1] + p * q[i + 1] - lam * q[i]))
        ok = (
            abs(abs(a) - 1.0) <= 1e-12
            and sup_q <= bound * (1.0 + 1e-10)
            and res <= 1e-10 * max(1.0, sup_q)
        )
        certified.append(ok)
        sups.append(sup_q)
        bounds.append(bound)
    op_symmetric = True
    from .operators import make_walk
    from .seqspace import Lattice

    op = make_walk(Lattice.HALF_LINE, Constant(p))
    for i in range(12):
        for j in range(12):
            if op.entry(i, j) != op.entry(j, i):
                op_symmetric = False
    all_cert = all(certified)
    conclusion = None
    if all_cert and op_symmetric:
        conclusion = (
            "every sampled lam in (-1, 1) carries a bounded eigenvector "
            "candidate; by symmetry these are dual eigenvalues of the walk "
            "on l1, and more than one dual eigenvalue rules out "
            "supercyclicity on l1"
        )
    return IntervalCheckReport(
        tuple(lambdas),
        tuple(certified),
        all_cert,
        op_symmetric,
        n_max,
        conclusion,
        {"sup_q": tuple(sups), "coef_bounds": tuple(bounds)},
    )
