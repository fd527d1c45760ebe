"""Monte Carlo oracle for the walks behind the banded operators.

The oracle simulates trajectories of the actual Markov chain and is kept
deliberately independent of the operator algebra, so the two can be used
to cross-check each other.

Sampling uses numpy's counter-based Philox generator keyed by the config
seed.  Uniform draws are consumed in step-major blocks: block j holds one
draw per trajectory for step j, and trajectory t always reads entry t of
each block.  A trajectory's randomness is therefore a fixed function of
(seed, trajectory index), independent of evaluation order, and all
accumulations are integer counts, so results are exactly reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .operators import PSeq, Constant, ListWithTail, Periodic
from .seqspace import Lattice


@dataclass(frozen=True)
class WalkConfig:
    """Simulation setup: which walk, how many trajectories, which seed."""

    lattice: Lattice
    pseq: PSeq
    seed: int
    samples: int

    def __post_init__(self):
        if not isinstance(self.pseq, (Constant, ListWithTail, Periodic)):
            raise TypeError(f"not a probability sequence: {self.pseq!r}")
        if self.samples < 1:
            raise ValueError("need at least one trajectory")
        if not (0 <= self.seed < 2**64):
            raise ValueError("seed must fit in 64 bits")


def _check_state(cfg: WalkConfig, i: int) -> None:
    if cfg.lattice is Lattice.HALF_LINE and i < 0:
        raise ValueError("half-line states are nonnegative")


def _generator(cfg: WalkConfig) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=cfg.seed))


def _advance(cfg: WalkConfig, pos: np.ndarray, u: np.ndarray) -> np.ndarray:
    pvals = cfg.pseq.prob_array(pos)
    pos = np.where(u < pvals, pos + 1, pos - 1)
    if cfg.lattice is Lattice.HALF_LINE:
        # from 0 the failed jump is a hold, not a step to -1
        np.maximum(pos, 0, out=pos)
    return pos


def estimate_transition(cfg: WalkConfig, n: int, i: int, j: int) -> tuple[float, float]:
    """Monte Carlo estimate of the n-step transition probability i -> j.

    Returns (estimate, stderr) with the binomial standard error
    sqrt(phat (1 - phat) / samples); when every trajectory agrees the
    add-two adjusted error is reported instead of a degenerate zero.
    Deterministic for a fixed config.
    """
    if n < 0:
        raise ValueError("step count must be nonnegative")
    _check_state(cfg, i)
    _check_state(cfg, j)
    if n == 0:
        return (1.0 if i == j else 0.0), 0.0
    rng = _generator(cfg)
    pos = np.full(cfg.samples, i, dtype=np.int64)
    for _ in range(n):
        pos = _advance(cfg, pos, rng.random(cfg.samples))
    count = int(np.count_nonzero(pos == j))
    phat = count / cfg.samples
    if count == 0 or count == cfg.samples:
        # all-or-nothing runs still carry sampling noise; the plug-in
        # formula collapses to zero there, so report the add-two
        # adjusted error instead
        adj = (count + 2.0) / (cfg.samples + 4.0)
        stderr = math.sqrt(adj * (1.0 - adj) / (cfg.samples + 4.0))
    else:
        stderr = math.sqrt(phat * (1.0 - phat) / cfg.samples)
    return phat, stderr


def estimate_return_mass(cfg: WalkConfig, horizon: int, i: int) -> float:
    """Estimated expected number of visits to i during steps 1..horizon,
    starting from i.  This estimates the partial sum over n of the n-step
    return probabilities, whose divergence separates recurrence from
    transience."""
    if horizon < 0:
        raise ValueError("horizon must be nonnegative")
    _check_state(cfg, i)
    rng = _generator(cfg)
    pos = np.full(cfg.samples, i, dtype=np.int64)
    visits = np.zeros(cfg.samples, dtype=np.int64)
    for _ in range(horizon):
        pos = _advance(cfg, pos, rng.random(cfg.samples))
        visits += pos == i
    return float(visits.mean())
