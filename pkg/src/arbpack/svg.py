"""Minimal static SVG line chart of summary fractions against n."""

from __future__ import annotations

from typing import Sequence

SERIES = (
    ("fraction_lambda_zero", "#1f77b4"),
    ("fraction_lambda_window_hit", "#ff7f0e"),
    ("fraction_tau_eq_lambda", "#2ca02c"),
    ("fraction_deltain_in_deltastar_window", "#d62728"),
)


def fraction_chart(summary: Sequence, width: int = 640, height: int = 400) -> str:
    pad = 50
    ns = [row.n for row in summary]
    lo, hi = (min(ns), max(ns)) if ns else (0, 1)
    span = (hi - lo) or 1

    def x(n):
        return pad + (n - lo) / span * (width - 2 * pad)

    def y(f):
        return height - pad - f * (height - 2 * pad)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{pad}" y1="{y(0)}" x2="{width - pad}" y2="{y(0)}" stroke="black"/>',
        f'<line x1="{pad}" y1="{y(0)}" x2="{pad}" y2="{y(1)}" stroke="black"/>',
        f'<text x="{pad - 30}" y="{y(1) + 4}" font-size="11">1.0</text>',
        f'<text x="{pad - 30}" y="{y(0) + 4}" font-size="11">0.0</text>',
    ]
    for n in ns:
        parts.append(f'<text x="{x(n) - 10:.1f}" y="{height - pad + 16}" font-size="11">{n}</text>')
    for i, (name, colour) in enumerate(SERIES):
        pts = [(x(r.n), y(getattr(r, name))) for r in summary if getattr(r, name) is not None]
        if not pts:
            continue
        coords = " ".join(f"{a:.1f},{b:.1f}" for a, b in pts)
        parts.append(f'<polyline points="{coords}" fill="none" stroke="{colour}" stroke-width="2"/>')
        parts.append(
            f'<text x="{width - pad - 200}" y="{pad + 14 * i}" font-size="11" fill="{colour}">{name}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
