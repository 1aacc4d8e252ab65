"""Minimal dependency-free SVG scatter plots.

Renders the full solution set as one series and the selected subset as
a second, either as a single 2-D panel or as the three coordinate
projections of a 3-D set. Styling is intentionally plain; these plots
exist so a decision maker can eyeball a selection, not for publication.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

__all__ = ["scatter_svg"]

_PANEL = 320
_MARGIN = 46
_BG_STYLE = "fill:#3465a4;fill-opacity:0.55"
_SEL_STYLE = "fill:#cc0000"


def _fmt(v: float) -> str:
    return f"{v:.6g}"


def _panel_svg(parts: list[str], x0: int, pts: np.ndarray, sel: np.ndarray,
               dims: tuple[int, int], labels: tuple[str, str]) -> None:
    i, j = dims
    all_pts = pts if sel is None or not len(sel) else np.vstack([pts, sel])
    lo = all_pts[:, [i, j]].min(axis=0)
    hi = all_pts[:, [i, j]].max(axis=0)
    span = np.where(hi - lo <= 0, 1.0, hi - lo)
    pad = 0.04 * span
    lo, hi = lo - pad, hi + pad
    span = hi - lo

    def sx(v):
        return x0 + _MARGIN + (v - lo[0]) / span[0] * (_PANEL - 2 * _MARGIN)

    def sy(v):
        return _MARGIN + (hi[1] - v) / span[1] * (_PANEL - 2 * _MARGIN)

    parts.append(
        f'<rect x="{x0 + _MARGIN}" y="{_MARGIN}" width="{_PANEL - 2 * _MARGIN}" '
        f'height="{_PANEL - 2 * _MARGIN}" style="fill:none;stroke:#555"/>'
    )
    for p in pts:
        parts.append(f'<circle cx="{sx(p[i]):.2f}" cy="{sy(p[j]):.2f}" r="2" style="{_BG_STYLE}"/>')
    if sel is not None:
        for p in sel:
            parts.append(f'<circle cx="{sx(p[i]):.2f}" cy="{sy(p[j]):.2f}" r="4" style="{_SEL_STYLE}"/>')
    parts.append(
        f'<text x="{x0 + _PANEL / 2:.0f}" y="{_PANEL - 8}" text-anchor="middle" '
        f'font-size="12">{labels[0]}</text>'
    )
    parts.append(
        f'<text x="{x0 + 12}" y="{_PANEL / 2:.0f}" text-anchor="middle" font-size="12" '
        f'transform="rotate(-90 {x0 + 12} {_PANEL / 2:.0f})">{labels[1]}</text>'
    )
    for frac in (0.0, 1.0):
        vx = lo[0] + frac * span[0]
        vy = lo[1] + frac * span[1]
        parts.append(
            f'<text x="{sx(vx):.0f}" y="{_PANEL - _MARGIN + 14}" text-anchor="middle" '
            f'font-size="9">{_fmt(vx)}</text>'
        )
        parts.append(
            f'<text x="{x0 + _MARGIN - 4}" y="{sy(vy):.0f}" text-anchor="end" '
            f'font-size="9">{_fmt(vy)}</text>'
        )


def scatter_svg(points, selected, path, axis_prefix: str = "f") -> None:
    """Write an SVG scatter of the point set with the selection overlaid.

    2-D inputs render one panel; 3-D inputs render the three pairwise
    coordinate projections side by side. Higher dimensions are not
    plotted directly (use the decision-space view for the five-objective
    distance problem).
    """
    pts = np.asarray(points, dtype=float)
    sel = None if selected is None else np.asarray(selected, dtype=float)
    m = pts.shape[1]
    if m == 2:
        pairs = [(0, 1)]
    elif m == 3:
        pairs = [(0, 1), (0, 2), (1, 2)]
    else:
        raise ValueError(
            f"can only plot 2-D or 3-D point sets, got {m} objectives"
        )
    width = _PANEL * len(pairs)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{_PANEL}" '
        f'viewBox="0 0 {width} {_PANEL}">',
        f'<rect width="{width}" height="{_PANEL}" fill="white"/>',
    ]
    for pos, pair in enumerate(pairs):
        labels = (f"{axis_prefix}{pair[0] + 1}", f"{axis_prefix}{pair[1] + 1}")
        _panel_svg(parts, pos * _PANEL, pts, sel, pair, labels)
    parts.append("</svg>")
    Path(path).write_text("\n".join(parts) + "\n")
