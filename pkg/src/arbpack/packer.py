"""Constructive packing of arc-disjoint spanning arborescences with flexible roots.

Pipeline for a target ``k``:

1. Forced roots. A vertex of in-degree ``i < k`` roots at least ``k - i``
   arborescences. If these lower bounds already exceed ``k`` the target is
   infeasible.
2. Root assignment. The remaining free slots are distributed over vertices.
   An assignment ``m`` is feasible iff, after adding a source ``s`` with
   ``m(v)`` parallel arcs ``s -> v``, every vertex receives ``k`` arc-disjoint
   paths from ``s`` (Edmonds' branching theorem).
3. Construction. For a feasible assignment the ``k`` arborescences are grown
   one at a time from ``s``. A frontier arc ``(x, y)`` is accepted iff, with
   the partial tree removed, ``y`` still receives ``r`` arc-disjoint paths
   from ``s``, where ``r`` is the number of arborescences still to build
   afterwards. Checking ``y`` alone suffices: a violated set after removing
   ``(x, y)`` must contain ``y``. Rejected arcs stay rejected for the rest of
   the current tree, so the frontier is a heap ordered by (tail id, head id).
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from .digraph import Arborescence, Digraph, Packing, validate_packing
from .flow import RootedNetwork
from .lambda_stat import compute_lambda

PACKED = "Packed"
INFEASIBLE = "Infeasible"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Budget:
    """Effort limits for :func:`pack`.

    ``restarts`` randomised root assignments are tried after the greedy one.
    Digraphs with at most ``exhaustive_limit`` vertices then get an
    exhaustive search over all assignments, provided there are at most
    ``exhaustive_cap`` of them; only that search can prove infeasibility
    beyond the forced-root bound.
    """

    restarts: int = 8
    exhaustive_limit: int = 12
    exhaustive_cap: int = 100_000
    seed: int = 0


@dataclass(frozen=True)
class ForcedRoots:
    lower: tuple[int, ...]
    k: int

    @property
    def forced(self) -> int:
        return sum(self.lower)

    @property
    def free(self) -> int:
        return self.k - self.forced

    @property
    def feasible(self) -> bool:
        return self.forced <= self.k


@dataclass(frozen=True)
class RootMultiplicity:
    m: tuple[int, ...]

    @property
    def k(self) -> int:
        return sum(self.m)


@dataclass(frozen=True)
class EdmondsVerdict:
    feasible: bool
    deficit_vertex: Optional[int] = None
    cut_side: frozenset[int] = frozenset()
    cut_capacity: Optional[int] = None

    def __bool__(self) -> bool:
        return self.feasible


@dataclass
class PackOutcome:
    status: str
    k: int
    packing: Optional[Packing] = None
    reason: str = ""
    assignments_tried: int = 0


@dataclass
class MaxPackResult:
    k: int
    outcome: PackOutcome
    lam: int
    statuses: dict[int, str] = field(default_factory=dict)

    @property
    def equals_lambda(self) -> bool:
        return self.k == self.lam


def forced_roots(D: Digraph, k: int) -> ForcedRoots:
    if k < 0:
        raise ValueError("k must be >= 0")
    lower = np.maximum(0, k - D.in_degrees)
    return ForcedRoots(tuple(int(x) for x in lower), k)


def _all_flows(net: RootedNetwork, k: int) -> list[int]:
    return [net.max_flow(t, k)[0] for t in range(net.n)]


def edmonds_feasible(D: Digraph, roots: RootMultiplicity | tuple[int, ...]) -> EdmondsVerdict:
    """Check that the super-root network sends ``k`` unit flows to every vertex."""
    m = roots.m if isinstance(roots, RootMultiplicity) else tuple(roots)
    k = sum(m)
    net = RootedNetwork(D, m)
    return _edmonds(net, k)


def _edmonds(net: RootedNetwork, k: int) -> EdmondsVerdict:
    for t in range(net.n):
        value, side = net.min_cut(t, k)
        if value < k:
            return EdmondsVerdict(False, t, side, value)
    return EdmondsVerdict(True)


def _grow(D: Digraph, m: tuple[int, ...]) -> Optional[list[Arborescence]]:
    """Build ``sum(m)`` arborescences rooted per ``m``; None if a tree gets stuck."""
    k = sum(m)
    n = D.n
    net = RootedNetwork(D, m)
    s = net.source
    head, cap = net.head, net.cap
    trees = []
    for i in range(k):
        need = k - i - 1
        in_tree = [False] * (n + 1)
        in_tree[s] = True
        parent = [-1] * n
        root = -1
        frontier: list[tuple[int, int, int]] = []

        def push(x: int) -> None:
            for a in net.out_arcs[x]:
                if cap[a] > 0 and not in_tree[head[a]]:
                    heapq.heappush(frontier, (x, head[a], a))

        push(s)
        size = 1
        while size <= n:
            if not frontier:
                return None
            x, y, a = heapq.heappop(frontier)
            if in_tree[y] or cap[a] <= 0:
                continue
            cap[a] -= 1
            if need and net.max_flow(y, need)[0] < need:
                cap[a] += 1
                continue
            in_tree[y] = True
            size += 1
            if x == s:
                root = y
            else:
                parent[y] = x
            push(y)
        trees.append(Arborescence(root, tuple(parent)))
    return trees


def _greedy_assignment(D: Digraph, lower: tuple[int, ...], k: int, rng=None) -> tuple[int, ...]:
    """Fill free slots one at a time at a vertex of least current connectivity.

    Ties go to the lowest id, or to a random tied vertex when ``rng`` is given.
    """
    m = list(lower)
    net = RootedNetwork(D, m)
    for _ in range(k - sum(m)):
        flows = _all_flows(net, k)
        low = min(flows)
        tied = [v for v, f in enumerate(flows) if f == low]
        v = tied[0] if rng is None else tied[int(rng.integers(len(tied)))]
        m[v] += 1
        net.cap[net.source_arc(v)] += 1
    return tuple(m)


def _compositions(lower: tuple[int, ...], free: int) -> Iterator[tuple[int, ...]]:
    n = len(lower)
    for combo in itertools.combinations_with_replacement(range(n), free):
        m = list(lower)
        for v in combo:
            m[v] += 1
        yield tuple(m)


def pack(D: Digraph, k: int, budget: Budget = Budget()) -> PackOutcome:
    """Try to find ``k`` arc-disjoint spanning arborescences.

    ``Infeasible`` is reported only with a proof; an exhausted budget gives
    ``Unknown``.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    n = D.n
    if k == 0:
        return PackOutcome(PACKED, 0, Packing([], D))
    if n == 1:
        return PackOutcome(PACKED, k, Packing([Arborescence(0, (-1,))] * k, D))
    fr = forced_roots(D, k)
    if not fr.feasible:
        return PackOutcome(
            INFEASIBLE, k, reason=f"forced roots {fr.forced} exceed k={k}"
        )

    tried: set[tuple[int, ...]] = set()
    last: Optional[EdmondsVerdict] = None

    def attempt(m: tuple[int, ...]) -> Optional[PackOutcome]:
        nonlocal last
        if m in tried:
            return None
        tried.add(m)
        verdict = edmonds_feasible(D, m)
        if not verdict:
            last = verdict
            return None
        trees = _grow(D, m)
        if trees is None:
            return None
        packing = Packing(trees, D)
        check = validate_packing(D, packing)
        if not check:  # pragma: no cover - construction is exact
            raise AssertionError(f"packer produced an invalid packing: {check.reason}")
        return PackOutcome(PACKED, k, packing, assignments_tried=len(tried))

    out = attempt(_greedy_assignment(D, fr.lower, k))
    if out:
        return out
    rng = np.random.default_rng(budget.seed)
    if fr.free > 0:
        for _ in range(budget.restarts):
            out = attempt(_greedy_assignment(D, fr.lower, k, rng))
            if out:
                return out

    total = math.comb(n + fr.free - 1, fr.free)
    if n <= budget.exhaustive_limit and total <= budget.exhaustive_cap:
        for m in _compositions(fr.lower, fr.free):
            out = attempt(m)
            if out:
                return out
        return PackOutcome(
            INFEASIBLE,
            k,
            reason=_deficit_reason(last) + f"; all {total} root assignments fail",
            assignments_tried=len(tried),
        )
    return PackOutcome(
        UNKNOWN, k, reason=_deficit_reason(last) + "; budget exhausted", assignments_tried=len(tried)
    )


def _deficit_reason(verdict: Optional[EdmondsVerdict]) -> str:
    if verdict is None:
        return "construction failed"
    return (
        f"connectivity deficit at vertex {verdict.deficit_vertex} "
        f"(cut capacity {verdict.cut_capacity})"
    )


def max_pack(D: Digraph, budget: Budget = Budget()) -> MaxPackResult:
    """Largest ``k`` packed within budget, searching down from lambda(D)."""
    lam = compute_lambda(D).value
    statuses: dict[int, str] = {}
    for k in range(lam, -1, -1):
        outcome = pack(D, k, budget)
        statuses[k] = outcome.status
        if outcome.status == PACKED:
            return MaxPackResult(k, outcome, lam, statuses)
    raise AssertionError("k = 0 always packs")  # pragma: no cover
