"""Finitely supported sequences and the classical sequence-space norms.

Everything in this package acts on finitely supported complex sequences
indexed either by the nonnegative integers (half-line) or by all integers
(line).  ``FinSeq`` is the one value type; it is immutable and all
arithmetic returns new instances.  Norms cover c0, c, l^q (q >= 1) and
l^infinity; the sup norm is shared by c0, c and l^infinity because a
finitely supported representative realizes it the same way in each.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterator


class Lattice(enum.Enum):
    """Index set of a sequence: the nonnegative integers or all integers."""

    HALF_LINE = "half-line"
    LINE = "line"


@dataclass(frozen=True, eq=False)
class FinSeq:
    """Finitely supported complex sequence.

    Entries outside ``[offset, offset + len(values))`` are implicitly zero.
    Stored zeros at either end are permitted; :meth:`trim` removes them and
    produces the canonical form.  Equality and hashing go through the
    canonical form, so two representations of the same sequence compare
    equal.
    """

    lattice: Lattice
    offset: int
    values: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(complex(v) for v in self.values))
        if not self.values:
            object.__setattr__(self, "offset", 0)
        elif self.lattice is Lattice.HALF_LINE and self.offset < 0:
            raise ValueError("half-line sequences start at a nonnegative index")

    @classmethod
    def zero(cls, lattice: Lattice = Lattice.HALF_LINE) -> "FinSeq":
        return cls(lattice, 0, ())

    @classmethod
    def unit(cls, index: int, lattice: Lattice = Lattice.HALF_LINE) -> "FinSeq":
        """Coordinate vector e_index."""
        return cls(lattice, index, (1.0 + 0.0j,))

    @classmethod
    def from_values(
        cls,
        values,
        offset: int = 0,
        lattice: Lattice = Lattice.HALF_LINE,
    ) -> "FinSeq":
        return cls(lattice, offset, tuple(values))

    def at(self, i: int) -> complex:
        """Entry at index i, implicitly zero outside the stored window."""
        k = i - self.offset
        if 0 <= k < len(self.values):
            return self.values[k]
        return 0.0 + 0.0j

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def support(self) -> tuple[int, int] | None:
        """Smallest and largest index holding a nonzero entry, or None."""
        lo = None
        hi = None
        for k, v in enumerate(self.values):
            if v != 0:
                if lo is None:
                    lo = k
                hi = k
        if lo is None:
            return None
        return self.offset + lo, self.offset + hi

    def trim(self) -> "FinSeq":
        """Canonical form: exact stored zeros stripped from both ends."""
        sup = self.support()
        if sup is None:
            return FinSeq(self.lattice, 0, ())
        lo, hi = sup
        a = lo - self.offset
        b = hi - self.offset + 1
        if a == 0 and b == len(self.values):
            return self
        return FinSeq(self.lattice, lo, self.values[a:b])

    def items(self) -> Iterator[tuple[int, complex]]:
        for k, v in enumerate(self.values):
            yield self.offset + k, v

    def sup_abs(self) -> float:
        return max((abs(v) for v in self.values), default=0.0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinSeq):
            return NotImplemented
        a = self.trim()
        b = other.trim()
        return (
            a.lattice is b.lattice and a.offset == b.offset and a.values == b.values
        )

    def __hash__(self) -> int:
        t = self.trim()
        return hash((t.lattice, t.offset, t.values))

    def _merge(self, other: "FinSeq", sign: int) -> "FinSeq":
        if self.lattice is not other.lattice:
            raise ValueError("cannot combine sequences over different lattices")
        if not other.values:
            return self
        if not self.values:
            return other if sign > 0 else -other
        lo = min(self.offset, other.offset)
        hi = max(self.offset + len(self.values), other.offset + len(other.values))
        vals = [0.0 + 0.0j] * (hi - lo)
        for i, v in self.items():
            vals[i - lo] += v
        for i, v in other.items():
            vals[i - lo] += sign * v
        return FinSeq(self.lattice, lo, tuple(vals))

    def __add__(self, other: "FinSeq") -> "FinSeq":
        return self._merge(other, +1)

    def __sub__(self, other: "FinSeq") -> "FinSeq":
        return self._merge(other, -1)

    def __neg__(self) -> "FinSeq":
        return FinSeq(self.lattice, self.offset, tuple(-v for v in self.values))

    def __mul__(self, c) -> "FinSeq":
        c = complex(c)
        return FinSeq(self.lattice, self.offset, tuple(c * v for v in self.values))

    __rmul__ = __mul__

    def __repr__(self) -> str:  # compact, index-annotated
        sup = self.support()
        if sup is None:
            return f"FinSeq({self.lattice.value}, 0)"
        return f"FinSeq({self.lattice.value}, offset={self.offset}, values={self.values})"


class SpaceKind(enum.Enum):
    C0 = "c0"
    C = "c"
    LQ = "lq"
    LINF = "linf"


@dataclass(frozen=True)
class SpaceSpec:
    """One of the sequence spaces c0, c, l^q (q >= 1), l^infinity."""

    kind: SpaceKind
    q: float | None = None

    def __post_init__(self):
        if self.kind is SpaceKind.LQ:
            if self.q is None or not (self.q >= 1.0):
                raise ValueError("l^q requires an exponent q >= 1")
        elif self.q is not None:
            raise ValueError("only l^q carries an exponent")

    @classmethod
    def c0(cls) -> "SpaceSpec":
        return cls(SpaceKind.C0)

    @classmethod
    def c(cls) -> "SpaceSpec":
        return cls(SpaceKind.C)

    @classmethod
    def lq(cls, q: float) -> "SpaceSpec":
        return cls(SpaceKind.LQ, float(q))

    @classmethod
    def linf(cls) -> "SpaceSpec":
        return cls(SpaceKind.LINF)

    @classmethod
    def parse(cls, text: str) -> "SpaceSpec":
        """Parse 'c0', 'c', 'linf' or 'l<q>' such as 'l1', 'l2', 'l2.5'."""
        t = text.strip().lower()
        if t == "c0":
            return cls.c0()
        if t == "c":
            return cls.c()
        if t == "linf":
            return cls.linf()
        if t.startswith("l"):
            try:
                return cls.lq(float(t[1:]))
            except ValueError as exc:
                raise ValueError(f"bad space spec {text!r}") from exc
        raise ValueError(f"bad space spec {text!r}")

    def __str__(self) -> str:
        if self.kind is SpaceKind.LQ:
            q = self.q
            return f"l{int(q)}" if q == int(q) else f"l{q}"
        return self.kind.value


def norm(x: FinSeq, space: SpaceSpec) -> float:
    """Norm of a finitely supported sequence in the given space.

    c0, c and l^infinity all use the sup norm; l^q uses the usual
    q-th power sum.
    """
    if space.kind is SpaceKind.LQ:
        q = space.q
        if q == 1.0:
            return math.fsum(abs(v) for v in x.values)
        # rescale by the sup so q-th powers neither underflow nor overflow
        scale = x.sup_abs()
        if scale == 0.0 or not math.isfinite(scale):
            return scale
        total = math.fsum((abs(v) / scale) ** q for v in x.values)
        return scale * total ** (1.0 / q)
    return x.sup_abs()


def sup_norm(x: FinSeq) -> float:
    return x.sup_abs()


def convolve_bounded(a: FinSeq, v: FinSeq) -> FinSeq:
    """Half-line convolution x_n = sum_{k=0..n} a_k v_{n-k}.

    Both inputs must live on the half-line.  The result satisfies
    norm(x, space) <= norm(a, l1) * norm(v, space) for any of the spaces
    handled here (the discrete Young inequality with one factor in l1).
    """
    if a.lattice is not Lattice.HALF_LINE or v.lattice is not Lattice.HALF_LINE:
        raise ValueError("convolution is defined for half-line sequences")
    at = a.trim()
    vt = v.trim()
    if not at.values or not vt.values:
        return FinSeq.zero(Lattice.HALF_LINE)
    lo = at.offset + vt.offset
    out = [0.0 + 0.0j] * (len(at.values) + len(vt.values) - 1)
    for i, av in enumerate(at.values):
        if av == 0:
            continue
        for j, vv in enumerate(vt.values):
            out[i + j] += av * vv
    return FinSeq(Lattice.HALF_LINE, lo, tuple(out))
