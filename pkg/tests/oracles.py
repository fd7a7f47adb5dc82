"""Independent brute-force oracles used to pin expected values.

None of these share code paths with the package beyond the Digraph container.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def brute_lambda(in_degrees, cap=None):
    """lambda by evaluating every inequality directly (no prefix sums)."""
    n = len(in_degrees)
    cap = cap if cap is not None else 3 * n + sum(in_degrees) + 2
    lam = 0
    for ell in range(cap + 1):
        lhs = sum((ell - d) for d in in_degrees if d < ell)
        if lhs > ell:
            return lam
        lam = ell
    return lam


def all_arborescences(n, arcs):
    """Every spanning arborescence as a frozenset of arcs (tiny n only)."""
    arcs = set(arcs)
    in_nb = {v: [u for (u, w) in arcs if w == v] for v in range(n)}
    found = set()
    for root in range(n):
        others = [v for v in range(n) if v != root]
        for parents in itertools.product(*(in_nb[v] for v in others)):
            par = dict(zip(others, parents))
            ok = True
            for v in others:
                seen = set()
                x = v
                while x != root:
                    if x in seen:
                        ok = False
                        break
                    seen.add(x)
                    x = par[x]
                if not ok:
                    break
            if ok:
                found.add(frozenset((par[v], v) for v in others))
    return sorted(found, key=sorted)


def brute_tau(n, arcs):
    """Maximum number of pairwise arc-disjoint arborescences by backtracking."""
    if n == 1:
        raise ValueError("unbounded")
    arbs = all_arborescences(n, arcs)

    @lru_cache(maxsize=None)
    def best(start, used):
        result = 0
        for i in range(start, len(arbs)):
            if not (arbs[i] & used):
                result = max(result, 1 + best(i + 1, used | arbs[i]))
        return result

    return best(0, frozenset())


def brute_subpartitions(n):
    """Subpartitions with >= 2 parts via labelling each vertex with a block
    id or 'unused', then canonicalising."""
    seen = set()
    for labels in itertools.product(range(n + 1), repeat=n):
        blocks = {}
        for v, lab in enumerate(labels):
            if lab < n:
                blocks.setdefault(lab, set()).add(v)
        if len(blocks) >= 2:
            seen.add(frozenset(frozenset(b) for b in blocks.values()))
    return seen


def brute_tau_frank(n, arcs):
    """min over subpartitions of floor(sum d_in(U) / (|P| - 1)), by brute force."""
    best = None
    for P in brute_subpartitions(n):
        total = sum(sum(1 for (u, v) in arcs if v in U and u not in U) for U in P)
        q = total // (len(P) - 1)
        best = q if best is None else min(best, q)
    return best
