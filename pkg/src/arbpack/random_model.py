"""Seeded sampling of the random digraph D(n, p) and the regime families p(n).

Stream semantics of :func:`sample`: the generator emits ``n * n`` uniforms in
row-major order ``(u, v)``; the arc ``(u, v)`` with ``u != v`` is present iff
its uniform is ``< p``. Diagonal draws are consumed and discarded. Rows are
drawn in blocks, which leaves the stream unchanged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .digraph import Digraph
from .errors import InvalidProbabilityError, OutOfDomainError, TooSmallNError

REGIME_KINDS = ("subcritical_a", "critical_b", "nearcritical_c", "constant_factor", "dense", "explicit")

_BLOCK_DRAWS = 1 << 22


@dataclass(frozen=True)
class RegimeSpec:
    """A family ``n -> p(n)``.

    ``h_scale`` multiplies ``log log n`` (regimes a, b) or ``(log log n)**2``
    (regime c); ``phi`` is the constant in ``phi * log n / (n - 1)``;
    ``psi_scale`` gives ``psi(n) = psi_scale * log log n`` for the dense regime.
    """

    kind: str = "explicit"
    h_scale: float = 0.0
    phi: float = 2.0
    psi_scale: float = 1.0
    p_explicit: float = 0.5

    def __post_init__(self):
        if self.kind not in REGIME_KINDS:
            raise ValueError(f"unknown regime kind {self.kind!r}; expected one of {REGIME_KINDS}")
        if self.kind == "constant_factor" and not self.phi > 1:
            raise OutOfDomainError(f"constant_factor regime needs phi > 1, got {self.phi}")
        if self.kind == "explicit" and not 0 <= self.p_explicit <= 1:
            raise InvalidProbabilityError(f"p_explicit={self.p_explicit} outside [0, 1]")


def p_of(regime: RegimeSpec, n: int) -> float:
    """Edge probability of ``regime`` at size ``n``, clamped to [0, 1]."""
    if regime.kind == "explicit":
        return float(regime.p_explicit)
    if n < 3:
        raise TooSmallNError(f"regime {regime.kind} needs n >= 3 so that log log n > 0")
    log_n = math.log(n)
    loglog = math.log(log_n)
    if regime.kind == "subcritical_a":
        p = (log_n - regime.h_scale * loglog) / (n - 1)
    elif regime.kind == "critical_b":
        p = (log_n + regime.h_scale * loglog) / (n - 1)
    elif regime.kind == "nearcritical_c":
        p = (log_n + regime.h_scale * loglog**2) / (n - 1)
    elif regime.kind == "constant_factor":
        p = regime.phi * log_n / (n - 1)
    else:  # dense
        p = regime.psi_scale * loglog * log_n / (n - 1)
    return min(1.0, max(0.0, p))


def substream(master: int, *keys: int) -> np.random.SeedSequence:
    """Independent child seed for ``keys`` (e.g. ``n, trial_index``) under ``master``."""
    return np.random.SeedSequence(int(master), spawn_key=tuple(int(k) for k in keys))


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    if isinstance(seed, np.random.SeedSequence):
        return np.random.Generator(np.random.PCG64(seed))
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(int(seed))))


def sample(n: int, p: float, seed) -> Digraph:
    """Draw D(n, p).

    ``seed`` is a non-negative int, a :class:`numpy.random.SeedSequence`
    (see :func:`substream`) or a Generator.
    """
    if not 0 <= p <= 1 or math.isnan(p):
        raise InvalidProbabilityError(f"p={p} outside [0, 1]")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rng = _rng(seed)
    rows = max(1, _BLOCK_DRAWS // n)
    tails, heads = [], []
    for start in range(0, n, rows):
        stop = min(n, start + rows)
        block = rng.random((stop - start, n)) < p
        idx = np.arange(start, stop)
        block[idx - start, idx] = False
        u, v = np.nonzero(block)
        tails.append(u + start)
        heads.append(v)
    return Digraph.from_arrays(n, np.concatenate(tails), np.concatenate(heads))
