"""Simple loop-free digraphs on vertices ``0..n-1`` and arborescence packings.

A :class:`Digraph` is immutable. Arcs are kept as two parallel, lexicographically
sorted integer arrays (``tails``, ``heads``) plus CSR-style out/in adjacency
indexes derived from them. Vertex sets are accepted as any iterable of ints.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    DuplicateArcWarning,
    EmptySetError,
    OutOfRangeError,
    OverlapError,
    SelfLoopError,
)

IN = "in"
OUT = "out"


class Digraph:
    """Immutable simple digraph.

    Use :func:`build` (validating) or :meth:`from_arrays` (trusted input)
    rather than calling the constructor directly.
    """

    __slots__ = (
        "n",
        "tails",
        "heads",
        "_out_ptr",
        "_out_idx",
        "_in_ptr",
        "_in_idx",
        "_in_deg",
        "_out_deg",
        "__dict__",
    )

    def __init__(self, n: int, tails: np.ndarray, heads: np.ndarray):
        self.n = int(n)
        order = np.lexsort((heads, tails))
        self.tails = np.ascontiguousarray(tails[order], dtype=np.int64)
        self.heads = np.ascontiguousarray(heads[order], dtype=np.int64)
        self.tails.setflags(write=False)
        self.heads.setflags(write=False)

        self._out_deg = np.bincount(self.tails, minlength=self.n)
        self._in_deg = np.bincount(self.heads, minlength=self.n)
        self._out_ptr = np.concatenate(([0], np.cumsum(self._out_deg)))
        self._out_idx = self.heads
        in_order = np.lexsort((self.tails, self.heads))
        self._in_ptr = np.concatenate(([0], np.cumsum(self._in_deg)))
        self._in_idx = self.tails[in_order]
        for arr in (self._out_deg, self._in_deg, self._out_ptr, self._in_ptr, self._in_idx):
            arr.setflags(write=False)

        m = len(self.tails)
        if self._in_deg.sum() != m or self._out_deg.sum() != m:
            raise AssertionError("degree sums disagree with arc count")

    @classmethod
    def from_arrays(cls, n: int, tails, heads) -> "Digraph":
        """Construct from arc arrays already known to be simple and in range."""
        return cls(n, np.asarray(tails, dtype=np.int64), np.asarray(heads, dtype=np.int64))

    # -- basic queries -------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.tails)

    @property
    def in_degrees(self) -> np.ndarray:
        return self._in_deg

    @property
    def out_degrees(self) -> np.ndarray:
        return self._out_deg

    def out_neighbors(self, v: int) -> np.ndarray:
        return self._out_idx[self._out_ptr[v] : self._out_ptr[v + 1]]

    def in_neighbors(self, v: int) -> np.ndarray:
        return self._in_idx[self._in_ptr[v] : self._in_ptr[v + 1]]

    @cached_property
    def arc_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(zip(self.tails.tolist(), self.heads.tolist()))

    @cached_property
    def out_adj(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.out_neighbors(v).tolist()) for v in range(self.n))

    @cached_property
    def in_adj(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.in_neighbors(v).tolist()) for v in range(self.n))

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arc_set

    def arcs(self) -> Iterator[tuple[int, int]]:
        return zip(self.tails.tolist(), self.heads.tolist())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.tails, other.tails)
            and np.array_equal(self.heads, other.heads)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.tails.tobytes(), self.heads.tobytes()))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


def build(n: int, arc_list: Iterable[tuple[int, int]]) -> Digraph:
    """Build a validated digraph from a list of ordered pairs.

    Duplicate arcs collapse to one with a :class:`DuplicateArcWarning`.
    Raises :class:`OutOfRangeError` or :class:`SelfLoopError` on bad pairs.
    """
    if n < 1:
        raise OutOfRangeError(f"vertex count must be >= 1, got {n}")
    pairs = np.asarray(list(arc_list), dtype=np.int64).reshape(-1, 2)
    tails, heads = pairs[:, 0], pairs[:, 1]
    bad = (tails < 0) | (tails >= n) | (heads < 0) | (heads >= n)
    if bad.any():
        i = int(np.argmax(bad))
        raise OutOfRangeError(f"arc ({tails[i]}, {heads[i]}) has a vertex outside 0..{n - 1}")
    loops = tails == heads
    if loops.any():
        i = int(np.argmax(loops))
        raise SelfLoopError(f"self-loop at vertex {tails[i]}")
    codes = np.unique(tails * n + heads)
    if len(codes) < len(tails):
        warnings.warn(
            f"collapsed {len(tails) - len(codes)} duplicate arc(s)",
            DuplicateArcWarning,
            stacklevel=2,
        )
    return Digraph(n, codes // n, codes % n)


def complete(n: int) -> Digraph:
    """The complete digraph on ``n`` vertices."""
    u, v = np.nonzero(~np.eye(n, dtype=bool))
    return Digraph(n, u, v)


def empty(n: int) -> Digraph:
    return Digraph(n, np.empty(0, np.int64), np.empty(0, np.int64))


# -- vertex sets, degrees and cuts ------------------------------------------


def _mask(D: Digraph, S: Iterable[int]) -> np.ndarray:
    members = np.fromiter((int(v) for v in S), dtype=np.int64)
    if members.size and (members.min() < 0 or members.max() >= D.n):
        raise OutOfRangeError(f"vertex set not contained in 0..{D.n - 1}")
    mask = np.zeros(D.n, dtype=bool)
    mask[members] = True
    return mask


def degree(D: Digraph, v: int, direction: str = IN) -> int:
    if not 0 <= v < D.n:
        raise OutOfRangeError(f"vertex {v} outside 0..{D.n - 1}")
    if direction == IN:
        return int(D.in_degrees[v])
    if direction == OUT:
        return int(D.out_degrees[v])
    raise ValueError(f"direction must be 'in' or 'out', got {direction!r}")


def cut(D: Digraph, S: Iterable[int], direction: str = IN) -> int:
    """Number of arcs entering (``in``) or leaving (``out``) the set ``S``."""
    mask = _mask(D, S)
    if not mask.any():
        raise EmptySetError("cut of the empty set")
    head_in = mask[D.heads]
    tail_in = mask[D.tails]
    if direction == IN:
        return int(np.count_nonzero(head_in & ~tail_in))
    if direction == OUT:
        return int(np.count_nonzero(tail_in & ~head_in))
    raise ValueError(f"direction must be 'in' or 'out', got {direction!r}")


def arcs_between(D: Digraph, S: Iterable[int], T: Iterable[int]) -> int:
    """Number of arcs with tail in ``S`` and head in ``T`` (disjoint sets)."""
    s_mask = _mask(D, S)
    t_mask = _mask(D, T)
    if not s_mask.any() or not t_mask.any():
        raise EmptySetError("arcs_between needs nonempty sets")
    if (s_mask & t_mask).any():
        raise OverlapError("sets must be disjoint")
    return int(np.count_nonzero(s_mask[D.tails] & t_mask[D.heads]))


def induced(D: Digraph, S: Iterable[int]) -> tuple[Digraph, tuple[int, ...]]:
    """Sub-digraph induced by ``S``, relabelled to ``0..|S|-1``.

    Returns the digraph and the mapping ``new id -> original id``.
    """
    mask = _mask(D, S)
    if not mask.any():
        raise EmptySetError("induced digraph on the empty set")
    mapping = np.flatnonzero(mask)
    relabel = np.full(D.n, -1, dtype=np.int64)
    relabel[mapping] = np.arange(len(mapping))
    keep = mask[D.tails] & mask[D.heads]
    sub = Digraph(len(mapping), relabel[D.tails[keep]], relabel[D.heads[keep]])
    return sub, tuple(mapping.tolist())


# -- arborescences and packings ---------------------------------------------


@dataclass(frozen=True)
class Arborescence:
    """Spanning arborescence given by its root and a parent per vertex.

    ``parent[root]`` is ``-1``.
    """

    root: int
    parent: tuple[int, ...]

    @classmethod
    def from_arcs(cls, n: int, root: int, arcs: Iterable[tuple[int, int]]) -> "Arborescence":
        parent = [-1] * n
        for u, v in arcs:
            parent[v] = u
        return cls(root, tuple(parent))

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for v, u in enumerate(self.parent) if v != self.root and u >= 0]


@dataclass
class Packing:
    arborescences: list[Arborescence]
    source: Digraph = field(repr=False)

    def __len__(self) -> int:
        return len(self.arborescences)


class Check:
    """Boolean verdict carrying the first violated condition."""

    __slots__ = ("ok", "reason")

    def __init__(self, ok: bool, reason: str = ""):
        self.ok = ok
        self.reason = reason

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        return f"Check({self.ok}{', ' + repr(self.reason) if self.reason else ''})"


def validate_arborescence(D: Digraph, T: Arborescence) -> Check:
    n = D.n
    if len(T.parent) != n:
        return Check(False, f"parent vector has length {len(T.parent)}, expected {n}")
    if not 0 <= T.root < n:
        return Check(False, f"root {T.root} out of range")
    if T.parent[T.root] != -1:
        return Check(False, f"root {T.root} has in-degree 1")
    children: list[list[int]] = [[] for _ in range(n)]
    for v, u in enumerate(T.parent):
        if v == T.root:
            continue
        if not 0 <= u < n:
            return Check(False, f"vertex {v} has no parent")
        if not D.has_arc(u, v):
            return Check(False, f"arc ({u}, {v}) is not in the digraph")
        children[u].append(v)
    seen = {T.root}
    stack = [T.root]
    while stack:
        for w in children[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        missing = min(set(range(n)) - seen)
        return Check(False, f"vertex {missing} not reachable from root {T.root}")
    return Check(True)


def validate_packing(D: Digraph, P: Packing | Sequence[Arborescence]) -> Check:
    arbs = P.arborescences if isinstance(P, Packing) else list(P)
    used: dict[tuple[int, int], int] = {}
    for i, T in enumerate(arbs):
        verdict = validate_arborescence(D, T)
        if not verdict:
            return Check(False, f"arborescence {i}: {verdict.reason}")
        for a in T.arcs():
            if a in used:
                return Check(False, f"arc {a} shared by arborescences {used[a]} and {i}")
            used[a] = i
    return Check(True)
