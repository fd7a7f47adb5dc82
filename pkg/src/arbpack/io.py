"""Plain-text formats for digraphs and packings.

Digraph file: first line ``n m``, then ``m`` lines ``u v`` (0-based ids).
Packing, human form: one line per arborescence, ``root: v; arcs: u>v,u>v``.
Packing, table form: first line ``n m``, then ``m`` lines ``u v id``.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import TextIO

import numpy as np

from .digraph import Arborescence, Digraph, Packing, build
from .errors import DigraphFormatError


def _ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise DigraphFormatError(lineno, f"expected {count} integers, got {len(parts)}")
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise DigraphFormatError(lineno, f"non-integer field in {line.strip()!r}") from None


def parse_digraph(text: str) -> Digraph:
    lines = text.split("\n")
    if not lines or not lines[0].strip():
        raise DigraphFormatError(1, "missing header 'n m'")
    n, m = _ints(lines[0], 1, 2)
    if n < 1:
        raise DigraphFormatError(1, f"vertex count must be >= 1, got {n}")
    body = [(i + 2, ln) for i, ln in enumerate(lines[1:]) if ln.strip()]
    if len(body) != m:
        raise DigraphFormatError(len(lines), f"header promises {m} arcs, found {len(body)}")
    arcs = []
    for lineno, ln in body:
        u, v = _ints(ln, lineno, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise DigraphFormatError(lineno, f"vertex id out of range 0..{n - 1}: {u} {v}")
        if u == v:
            raise DigraphFormatError(lineno, f"self-loop {u} {v}")
        arcs.append((u, v))
    return build(n, arcs)


def read_digraph(path: str | os.PathLike) -> Digraph:
    return parse_digraph(Path(path).read_text(encoding="utf-8"))


def format_digraph(D: Digraph) -> str:
    out = [f"{D.n} {D.m}"]
    out.extend(f"{u} {v}" for u, v in D.arcs())
    return "\n".join(out) + "\n"


def write_digraph(D: Digraph, dest: str | os.PathLike | TextIO) -> None:
    text = format_digraph(D)
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        with open(dest, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def format_packing(P: Packing) -> str:
    lines = []
    for T in P.arborescences:
        arcs = ",".join(f"{u}>{v}" for u, v in T.arcs())
        lines.append(f"root: {T.root}; arcs: {arcs}")
    return "\n".join(lines) + ("\n" if lines else "")


def format_packing_table(P: Packing) -> str:
    rows = [(u, v, i) for i, T in enumerate(P.arborescences) for u, v in T.arcs()]
    out = [f"{P.source.n} {len(rows)}"]
    out.extend(f"{u} {v} {i}" for u, v, i in rows)
    return "\n".join(out) + "\n"


def parse_packing_table(text: str, source: Digraph) -> Packing:
    """Inverse of :func:`format_packing_table`.

    Roots are recovered as the unique vertex without a parent in each
    arborescence.
    """
    lines = [ln for ln in text.split("\n") if ln.strip()]
    n, m = _ints(lines[0], 1, 2)
    rows = np.array([_ints(ln, i + 2, 3) for i, ln in enumerate(lines[1:])], dtype=np.int64)
    if len(rows) != m:
        raise DigraphFormatError(len(lines), f"header promises {m} rows, found {len(rows)}")
    arbs = []
    count = int(rows[:, 2].max()) + 1 if m else 0
    for i in range(count):
        sel = rows[rows[:, 2] == i]
        parent = [-1] * n
        for u, v, _ in sel.tolist():
            parent[v] = u
        roots = [v for v in range(n) if parent[v] == -1]
        arbs.append(Arborescence(roots[0] if roots else -1, tuple(parent)))
    return Packing(arbs, source)
