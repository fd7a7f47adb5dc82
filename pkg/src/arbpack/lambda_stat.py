"""The in-degree statistic lambda(D), an upper bound on the number of
arc-disjoint arborescences.

lambda(D) is the largest ``lam >= 0`` such that for every ``0 <= l <= lam``

    sum_{i < l} (l - i) * Y_i  <=  l

where ``Y_i`` counts vertices of in-degree ``i``. The left side is the number
of root slots forced on low in-degree vertices when packing ``l``
arborescences.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Optional, Sequence

from .degree_stats import histogram
from .digraph import Digraph
from .errors import DegenerateWarning


@dataclass(frozen=True)
class LambdaResult:
    value: int
    violating_ell: Optional[int]
    lhs_at_violation: Optional[int]
    degenerate: bool = False


def lambda_from_counts(counts: Sequence[int], n: int, m: int) -> LambdaResult:
    """Scan ``l = 0, 1, ...`` keeping ``sum_{i<l} (l-i) Y_i`` incrementally.

    Going from ``l`` to ``l + 1`` adds ``#{v : d_in(v) <= l}`` to the sum.
    The scan stops at ``2n + m``; beyond ``max in-degree + 1`` every step adds
    ``n >= 2`` so a violation is reached well before the cap.
    """
    if n == 1:
        return LambdaResult(0, None, None, degenerate=True)
    cap = 2 * n + m
    lhs = 0
    below = 0  # vertices with in-degree < l
    for ell in range(1, cap + 1):
        below += counts[ell - 1] if ell - 1 < len(counts) else 0
        lhs += below
        if lhs > ell:
            return LambdaResult(ell - 1, ell, lhs)
    return LambdaResult(cap, None, None)


def compute_lambda(D: Digraph) -> LambdaResult:
    """lambda(D) with the first violated ``l`` as certificate.

    For ``n == 1`` the defining inequalities hold for every ``l``; the value
    is set to 0 and flagged ``degenerate``.
    """
    result = lambda_from_counts(histogram(D).counts, D.n, D.m)
    if result.degenerate:
        warnings.warn("lambda of a one-vertex digraph is set to 0", DegenerateWarning, stacklevel=2)
    return result


def claim44_bound(D: Digraph, k: int) -> bool:
    """True iff ``Y_k > k + 1``; in that case lambda(D) <= k is checked."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if histogram(D)[k] <= k + 1:
        return False
    value = compute_lambda(D).value
    if value > k:
        raise AssertionError(f"Y_{k} > {k + 1} but lambda = {value}")
    return True
