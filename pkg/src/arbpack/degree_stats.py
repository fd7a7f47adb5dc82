"""In-degree histograms, the expected-count threshold delta*, the function
F(x) = 1 - x + x log x and light-vertex diagnostics."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import sparse
from scipy.stats import binom

from .digraph import Digraph
from .errors import DegenerateWarning, OutOfDomainError, OutOfRangeError


@dataclass(frozen=True)
class DegreeHistogram:
    """``counts[k]`` is the number of vertices of in-degree ``k``."""

    counts: tuple[int, ...]
    n: int

    def __getitem__(self, k: int) -> int:
        return self.counts[k] if 0 <= k < len(self.counts) else 0

    def as_dict(self) -> dict[int, int]:
        return {k: c for k, c in enumerate(self.counts) if c}


def histogram(D: Digraph) -> DegreeHistogram:
    counts = np.bincount(D.in_degrees, minlength=1)
    return DegreeHistogram(tuple(int(c) for c in counts), D.n)


def delta_in(D: Digraph) -> int:
    return int(D.in_degrees.min())


def delta_out(D: Digraph) -> int:
    return int(D.out_degrees.min())


def expected_Yk(n: int, p: float, k):
    """Expected number of vertices of in-degree ``k`` in D(n, p).

    Vectorised over ``k``. Evaluated as ``n * exp(log pmf)`` of Bin(n-1, p).
    """
    k_arr = np.asarray(k)
    if np.any(k_arr < 0) or np.any(k_arr > n - 1):
        raise OutOfRangeError(f"k must lie in 0..{n - 1}")
    out = n * np.exp(binom.logpmf(k_arr, n - 1, p))
    return float(out) if out.ndim == 0 else out


def delta_star(n: int, p: float) -> int:
    """Least ``k >= 0`` with ``expected_Yk(n, p, k) >= 1``.

    For ``p`` in {0, 1} the answer is 0 resp. ``n - 1`` and a
    :class:`DegenerateWarning` is issued.
    """
    if not 0 <= p <= 1:
        raise OutOfDomainError(f"p={p} outside [0, 1]")
    if p == 0 or p == 1:
        warnings.warn(f"delta_star at degenerate p={p}", DegenerateWarning, stacklevel=2)
        return 0 if p == 0 else n - 1
    mode = min(n - 1, int(math.floor(n * p)))
    ks = np.arange(mode + 1)
    # E Y_k >= 1  <=>  log pmf >= -log n; the mode always qualifies.
    ok = binom.logpmf(ks, n - 1, p) >= -math.log(n)
    return int(np.argmax(ok)) if ok.any() else mode


def F(x: float) -> float:
    """``1 - x + x log x`` on (0, 1]; strictly decreasing from 1 to 0."""
    if not 0 < x <= 1:
        raise OutOfDomainError(f"F is defined on (0, 1], got {x}")
    return 1.0 - x + x * math.log(x)


def invert_F(target: float, tol: float = 1e-12) -> float:
    """Unique ``alpha`` in (0, 1) with ``F(alpha) == target``, by bisection."""
    if not 0 < target < 1:
        raise OutOfDomainError(f"target must lie in (0, 1), got {target}")
    lo, hi = 0.0, 1.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if F(mid) > target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class LightReport:
    epsilon: float
    in_light: frozenset[int]
    out_light: frozenset[int]
    adjacent_in_pairs: int
    shared_in_neighbor_pairs: int
    adjacent_out_pairs: int
    shared_out_neighbor_pairs: int
    # pairs that are adjacent or share a neighbour (union of the two counts)
    in_conflicts: int
    out_conflicts: int


def _pair_counts(D: Digraph, light: np.ndarray, by_in: bool) -> tuple[int, int, int]:
    L = len(light)
    if L < 2:
        return 0, 0, 0
    n = D.n
    adj = sparse.csr_matrix((np.ones(D.m, dtype=np.int64), (D.tails, D.heads)), shape=(n, n))
    sub = adj[light][:, light]
    adjacent = (sub + sub.T).toarray() > 0
    # rows of the neighbourhood matrix: in-neighbours (columns of adj) or out-neighbours
    nbr = adj.T.tocsr()[light] if by_in else adj[light]
    shared = (nbr @ nbr.T).toarray() > 0
    upper = np.triu(np.ones((L, L), dtype=bool), k=1)
    return (
        int(np.count_nonzero(adjacent & upper)),
        int(np.count_nonzero(shared & upper)),
        int(np.count_nonzero((adjacent | shared) & upper)),
    )


def light_report(D: Digraph, epsilon: float, p_reference: float) -> LightReport:
    """Classify epsilon-light vertices and count conflicting pairs.

    A vertex is epsilon-in-light when its in-degree is at most
    ``delta_in + epsilon * n * p_reference`` (likewise for out). Pairs are
    unordered; a pair conflicts when it is joined by an arc in either
    orientation or shares an in-neighbour (out-neighbour for out-light).
    """
    if not epsilon > 0:
        raise OutOfDomainError(f"epsilon must be > 0, got {epsilon}")
    if not 0 < p_reference <= 1:
        raise OutOfDomainError(f"p_reference must lie in (0, 1], got {p_reference}")
    slack = epsilon * D.n * p_reference
    in_light = np.flatnonzero(D.in_degrees <= delta_in(D) + slack)
    out_light = np.flatnonzero(D.out_degrees <= delta_out(D) + slack)
    adj_in, shared_in, conf_in = _pair_counts(D, in_light, by_in=True)
    adj_out, shared_out, conf_out = _pair_counts(D, out_light, by_in=False)
    return LightReport(
        epsilon=epsilon,
        in_light=frozenset(in_light.tolist()),
        out_light=frozenset(out_light.tolist()),
        adjacent_in_pairs=adj_in,
        shared_in_neighbor_pairs=shared_in,
        adjacent_out_pairs=adj_out,
        shared_out_neighbor_pairs=shared_out,
        in_conflicts=conf_in,
        out_conflicts=conf_out,
    )
