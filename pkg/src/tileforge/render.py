"""SVG drawings of polyominoes, their cut points and tiling patches."""

from __future__ import annotations

from dataclasses import dataclass

from .polyomino import _as_word, trace

DEFAULT_PALETTE = ("#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                   "#b3de69", "#fccde5", "#d9d9d9")
CUT_COLORS = ("#d62728", "#1f77b4")


@dataclass(frozen=True)
class RenderSpec:
    cell_size: int = 24
    margin: int = 12
    palette: tuple[str, ...] = DEFAULT_PALETTE
    annotate_cuts: bool = False

    def __post_init__(self):
        if self.cell_size < 1:
            raise ValueError("cell_size must be at least 1")
        if not self.palette:
            raise ValueError("palette must not be empty")


def render_svg(P, spec: RenderSpec = RenderSpec(), translations=((0, 0),), cut_sets=()) -> str:
    """SVG 1.1 text with one closed polygon per translated copy of ``P``.

    ``cut_sets`` holds cut positions per factorization; they are drawn as
    dots on the first copy when ``spec.annotate_cuts`` is set.
    """
    w = _as_word(P)
    outlines = [trace(w, t)[:-1] for t in translations]
    xs = [x for pts in outlines for x, _ in pts]
    ys = [y for pts in outlines for _, y in pts]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    s, m = spec.cell_size, spec.margin
    width = (x1 - x0) * s + 2 * m
    height = (y1 - y0) * s + 2 * m

    def px(x, y):
        # grid y grows upward, SVG y downward
        return (x - x0) * s + m, (y1 - y) * s + m

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
    ]
    for i, pts in enumerate(outlines):
        coords = " ".join("%d,%d" % px(x, y) for x, y in pts)
        color = spec.palette[i % len(spec.palette)]
        out.append(f'  <polygon points="{coords}" fill="{color}" stroke="#000000" '
                   f'stroke-width="1" stroke-linejoin="miter"/>')
    if spec.annotate_cuts and cut_sets:
        vertices = trace(w, translations[0])
        r = max(2, s // 6)
        for j, cuts in enumerate(cut_sets):
            color = CUT_COLORS[j % len(CUT_COLORS)]
            for c in cuts:
                cx, cy = px(*vertices[c])
                out.append(f'  <circle cx="{cx}" cy="{cy}" r="{r}" fill="{color}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_patch(P, patch, spec: RenderSpec = RenderSpec()) -> str:
    """Draw a patch produced by :func:`tileforge.polyomino.tiling_patch`."""
    return render_svg(P, spec, translations=[t for t, _ in patch])
