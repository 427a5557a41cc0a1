"""Text and SVG pictures of a packing.

Within a cell, bars are drawn bottom-up in chart-index order; the model does
not track vertical placement, so this stacking is purely presentational.
"""

from __future__ import annotations

import string
from collections import defaultdict

from .model import CellPacking, Instance, SequencePacking

LEVELS = 10
_LABELS = string.digits + string.ascii_lowercase
_PALETTE = ("#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
            "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac")


def _label(i: int) -> str:
    return _LABELS[i] if i < len(_LABELS) else "#"


def _bars_by_cell(instance: Instance, p) -> dict[int, list[tuple[int, int]]]:
    cp = p.to_cells() if isinstance(p, SequencePacking) else p
    cells: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for i, c in enumerate(cp.positions):
        cells[c].append((i, instance.charts[i].a))
        cells[c + 1].append((i, instance.charts[i].b))
    return {c: sorted(bars) for c, bars in cells.items()}


def render_ascii(instance: Instance, p: SequencePacking | CellPacking) -> str:
    """One text row per tenth of the strip height, top row first.

    A band shows the chart whose bar covers the band's midpoint, or ``.``
    when the midpoint is empty. The last line numbers the cells modulo 10.
    """
    d = instance.denominator
    cells = _bars_by_cell(instance, p)
    width = max(cells)
    columns = []
    for c in range(1, width + 1):
        col = []
        for r in range(LEVELS):
            mid2 = (2 * r + 1) * d  # midpoint scaled by 2*LEVELS
            top = 0
            ch = "."
            for i, h in cells.get(c, []):
                top += h
                if mid2 < 2 * LEVELS * top:
                    ch = _label(i)
                    break
            col.append(ch)
        columns.append(col)
    rows = ["".join(col[r] for col in columns) for r in reversed(range(LEVELS))]
    rows.append("".join(str(c % 10) for c in range(1, width + 1)))
    return "\n".join(rows) + "\n"


def render_svg(instance: Instance, p: SequencePacking | CellPacking) -> str:
    """One rectangle per bar, in strip units scaled by the denominator."""
    d = instance.denominator
    cells = _bars_by_cell(instance, p)
    width = max(cells)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width * d} {d}" '
        f'width="{40 * width}" height="40">',
        f'<rect x="0" y="0" width="{width * d}" height="{d}" fill="white" stroke="black" '
        f'stroke-width="{max(d // 200, 1)}"/>',
    ]
    for c in sorted(cells):
        base = 0
        for i, h in cells[c]:
            out.append(
                f'<rect x="{(c - 1) * d}" y="{d - base - h}" width="{d}" height="{h}" '
                f'fill="{_PALETTE[i % len(_PALETTE)]}" stroke="black" '
                f'stroke-width="{max(d // 500, 1)}"><title>chart {i}</title></rect>')
            base += h
    out.append("</svg>")
    return "\n".join(out) + "\n"
