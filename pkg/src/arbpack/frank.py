"""Exact tau(D) for small digraphs from the subpartition min-max.

A digraph has ``k`` arc-disjoint (flexible-root) arborescences iff every
subpartition ``P`` of the vertex set satisfies

    sum_{U in P} d_in(U)  >=  k (|P| - 1),

so ``tau(D) = min over P with |P| >= 2 of floor(sum d_in(U) / (|P| - 1))``.

Two evaluators are provided. ``method="enumerate"`` streams every
subpartition through restricted-growth strings. ``method="dp"`` (default)
computes, for each part count ``t``, the least ``sum d_in(U)`` over
subpartitions with ``t`` parts by dynamic programming over vertex bitmasks;
it visits each (mask, submask) pair once per ``t`` instead of each
subpartition, which is what makes ten-thousand-instance suites cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

import numpy as np

from .digraph import Digraph
from .errors import LimitExceededError

DEFAULT_LIMIT = 12
_INF = np.iinfo(np.int64).max // 4


@dataclass(frozen=True)
class Subpartition:
    parts: tuple[frozenset[int], ...]

    @classmethod
    def from_masks(cls, masks) -> "Subpartition":
        parts = [frozenset(i for i in range(m.bit_length()) if m >> i & 1) for m in masks]
        return cls(tuple(sorted(parts, key=min)))

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return " ".join("{" + ",".join(map(str, sorted(p))) + "}" for p in self.parts)


@dataclass(frozen=True)
class TauCertificate:
    """``tau`` with a minimising subpartition; ``unbounded`` when n == 1."""

    tau: Optional[int]
    tight_subpartition: Optional[Subpartition]
    unbounded: bool = False


def _check_limit(n: int, limit: int) -> None:
    if n > limit:
        raise LimitExceededError(f"n={n} exceeds the exhaustive limit {limit}")


def _subpartition_masks(n: int) -> Iterator[tuple[int, ...]]:
    """Yield each subpartition of 0..n-1 with >= 2 parts as a tuple of bitmasks.

    Partitions of ``{0..n}`` are generated as restricted-growth strings; the
    block holding the sentinel ``n`` is dropped.
    """
    blocks: list[int] = []

    def place(i: int):
        if i == n:
            sentinel = 1 << n
            for j in range(len(blocks)):
                blocks[j] |= sentinel
                rest = tuple(b for k, b in enumerate(blocks) if k != j)
                blocks[j] ^= sentinel
                if len(rest) >= 2:
                    yield rest
            if len(blocks) >= 2:
                yield tuple(blocks)
            return
        bit = 1 << i
        for j in range(len(blocks)):
            blocks[j] |= bit
            yield from place(i + 1)
            blocks[j] ^= bit
        blocks.append(bit)
        yield from place(i + 1)
        blocks.pop()

    yield from place(0)


def enumerate_subpartitions(n: int, limit: int = DEFAULT_LIMIT) -> Iterator[Subpartition]:
    """Stream every subpartition of ``0..n-1`` with at least two parts, once each.

    There are ``Bell(n + 1) - 2**n`` of them.
    """
    _check_limit(n, limit)
    for masks in _subpartition_masks(n):
        yield Subpartition.from_masks(masks)


# -- cut table ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _popcount_table(bits: int) -> np.ndarray:
    size = 1 << bits
    table = np.zeros(size, dtype=np.int64)
    for b in range(bits):
        table += (np.arange(size) >> b) & 1
    return table


def in_cut_table(D: Digraph) -> np.ndarray:
    """``table[U] = d_in(U)`` for every bitmask ``U`` of the vertex set."""
    n = D.n
    masks = np.arange(1 << n, dtype=np.int64)
    pop = _popcount_table(n)
    table = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        in_mask = 0
        for u in D.in_neighbors(v).tolist():
            in_mask |= 1 << u
        member = (masks >> v) & 1
        table += member * pop[in_mask & ~masks]
    return table


# -- dynamic programme -------------------------------------------------------


@lru_cache(maxsize=None)
def _split_pairs(n: int):
    """All ``(M, U)`` with ``U`` a proper submask of ``M`` holding M's lowest bit.

    Sorted by ``M``; also returns the start offset of each distinct ``M``.
    """
    ms, us = [], []
    for M in range(1, 1 << n):
        low = M & -M
        rest = M ^ low
        sub = rest
        # submasks of rest, excluding rest itself so that U != M
        while True:
            if sub != rest:
                ms.append(M)
                us.append(sub | low)
            if sub == 0:
                break
            sub = (sub - 1) & rest
    M_arr = np.array(ms, dtype=np.int64)
    U_arr = np.array(us, dtype=np.int64)
    order = np.argsort(M_arr, kind="stable")
    M_arr, U_arr = M_arr[order], U_arr[order]
    heads, starts = np.unique(M_arr, return_index=True)
    return M_arr, U_arr, M_arr ^ U_arr, heads, starts


def _part_tables(D: Digraph, cuts: np.ndarray) -> list[np.ndarray]:
    """``g[t][M]`` = least sum of d_in over partitions of exactly ``M`` into ``t`` parts."""
    n = D.n
    g = [None, cuts.copy()]
    if n < 2:
        return g
    M_arr, U_arr, R_arr, heads, starts = _split_pairs(n)
    cut_u = cuts[U_arr]
    for t in range(2, n + 1):
        prev = g[t - 1]
        vals = cut_u + prev[R_arr]
        cur = np.full(1 << n, _INF, dtype=np.int64)
        cur[heads] = np.minimum.reduceat(vals, starts)
        np.minimum(cur, _INF, out=cur)
        g.append(cur)
    return g


def _backtrack(g, cuts, t: int, M: int) -> list[int]:
    parts = []
    while t > 1:
        low = M & -M
        rest = M ^ low
        sub = rest
        target = g[t][M]
        while True:
            if sub != rest:
                U = sub | low
                if cuts[U] + g[t - 1][M ^ U] == target:
                    break
            sub = (sub - 1) & rest
        parts.append(U)
        M ^= U
        t -= 1
    parts.append(M)
    return parts


def _best_per_t(g) -> list[tuple[int, int]]:
    """For each ``t >= 2``: (least sum over subpartitions with t parts, its union mask)."""
    out = []
    for t in range(2, len(g)):
        M = int(np.argmin(g[t]))
        out.append((int(g[t][M]), M))
    return out


def _tau_dp(D: Digraph) -> TauCertificate:
    cuts = in_cut_table(D)
    g = _part_tables(D, cuts)
    best = None
    for t, (total, M) in enumerate(_best_per_t(g), start=2):
        if total >= _INF:
            continue
        q = total // (t - 1)
        if best is None or q < best[0]:
            best = (q, t, M)
    tau, t, M = best
    masks = _backtrack(g, cuts, t, M)
    return TauCertificate(tau, Subpartition.from_masks(masks))


def _tau_enumerate(D: Digraph) -> TauCertificate:
    cuts = in_cut_table(D)
    best = None
    for masks in _subpartition_masks(D.n):
        q = sum(int(cuts[m]) for m in masks) // (len(masks) - 1)
        if best is None or q < best[0]:
            best = (q, masks)
    return TauCertificate(best[0], Subpartition.from_masks(best[1]))


def tau_exact(D: Digraph, limit: int = DEFAULT_LIMIT, method: str = "dp") -> TauCertificate:
    """Maximum number of arc-disjoint arborescences, with a tight subpartition."""
    if D.n == 1:
        return TauCertificate(None, None, unbounded=True)
    _check_limit(D.n, limit)
    if method == "dp":
        return _tau_dp(D)
    if method == "enumerate":
        return _tau_enumerate(D)
    raise ValueError(f"unknown method {method!r}")


def frank_holds(
    D: Digraph, k: int, limit: int = DEFAULT_LIMIT, method: str = "dp"
) -> tuple[bool, Optional[Subpartition]]:
    """Whether every subpartition satisfies the condition for ``k``.

    Returns ``(True, None)`` or ``(False, violating_subpartition)``.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    _check_limit(D.n, limit)
    if D.n == 1:
        return True, None
    cuts = in_cut_table(D)
    if method == "enumerate":
        for masks in _subpartition_masks(D.n):
            if sum(int(cuts[m]) for m in masks) < k * (len(masks) - 1):
                return False, Subpartition.from_masks(masks)
        return True, None
    if method != "dp":
        raise ValueError(f"unknown method {method!r}")
    g = _part_tables(D, cuts)
    for t, (total, M) in enumerate(_best_per_t(g), start=2):
        if total < k * (t - 1):
            return False, Subpartition.from_masks(_backtrack(g, cuts, t, M))
    return True, None


def subpartition_in_cut(D: Digraph, P: Subpartition) -> int:
    cuts = in_cut_table(D)
    return sum(int(cuts[sum(1 << v for v in part)]) for part in P.parts)


def bell(n: int) -> int:
    """Bell number via the Bell triangle."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]

