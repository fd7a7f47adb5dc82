"""Unit-capacity augmenting-path max-flow on a digraph plus a super-root.

The network has vertices ``0..n-1`` from the host digraph and a source
``s = n`` joined to each vertex ``v`` by ``mult[v]`` parallel arcs, stored as a
single arc of capacity ``mult[v]``. Host arcs have capacity 1 and can be
switched off, which is how the packer removes arcs from the working digraph.

Flows are capped: ``max_flow(t, cap)`` stops after ``cap`` augmenting paths,
so the cost of a check is proportional to the requirement, not the degree.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .digraph import Digraph


class RootedNetwork:
    def __init__(self, D: Digraph, mult: Sequence[int]):
        n = D.n
        self.n = n
        self.source = n
        tails = D.tails.tolist()
        heads = D.heads.tolist()
        self.host_arcs = len(tails)
        # arcs 0..m-1 are host arcs; arc m + v is the source arc s -> v
        self.tail = tails + [n] * n
        self.head = heads + list(range(n))
        self.cap = [1] * len(tails) + [int(c) for c in mult]
        self.out_arcs: list[list[int]] = [[] for _ in range(n + 1)]
        self.in_arcs: list[list[int]] = [[] for _ in range(n + 1)]
        for a, (u, v) in enumerate(zip(self.tail, self.head)):
            self.out_arcs[u].append(a)
            self.in_arcs[v].append(a)
        self.arc_id = {(u, v): a for a, (u, v) in enumerate(zip(tails, heads))}

    def source_arc(self, v: int) -> int:
        return self.host_arcs + v

    def max_flow(self, t: int, cap: int) -> tuple[int, list[int]]:
        """Flow value from the source to ``t``, stopping at ``cap``.

        Also returns the ``prev`` labels of the last search; entries equal
        to ``-1`` mark vertices not reachable in the final residual graph.
        A reverse step along arc ``a`` is labelled ``-3 - a`` so it never
        collides with the ``-1`` / ``-2`` markers.
        """
        s = self.source
        tail, head, capacity = self.tail, self.head, self.cap
        out_arcs, in_arcs = self.out_arcs, self.in_arcs
        flow = [0] * len(tail)
        total = 0
        size = self.n + 1
        while True:
            prev = [-1] * size
            prev[s] = -2
            if total >= cap:
                return total, prev
            queue = deque([s])
            found = False
            while queue and not found:
                x = queue.popleft()
                for a in out_arcs[x]:
                    y = head[a]
                    if prev[y] == -1 and flow[a] < capacity[a]:
                        prev[y] = a
                        if y == t:
                            found = True
                            break
                        queue.append(y)
                if found:
                    break
                for a in in_arcs[x]:
                    y = tail[a]
                    if prev[y] == -1 and flow[a] > 0:
                        prev[y] = -3 - a
                        if y == t:
                            found = True
                            break
                        queue.append(y)
            if not found:
                return total, prev
            y = t
            while y != s:
                a = prev[y]
                if a >= 0:
                    flow[a] += 1
                    y = tail[a]
                else:
                    a = -3 - a
                    flow[a] -= 1
                    y = head[a]
            total += 1

    def min_cut(self, t: int, cap: int) -> tuple[int, frozenset[int]]:
        """Flow value and, when below ``cap``, the sink side of a minimum cut."""
        value, prev = self.max_flow(t, cap)
        if value >= cap:
            return value, frozenset()
        return value, frozenset(v for v in range(self.n) if prev[v] == -1)
