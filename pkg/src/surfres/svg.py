"""Standalone SVG rendering of a staircase polygon (presentation only)."""

from __future__ import annotations

from .newton import Staircase

_SIZE = 360
_MARGIN = 40


def staircase_svg(st: Staircase, title: str = "") -> str:
    vs = [(float(p.x), float(p.y)) for p in st.vertices]
    extent = max([2.0] + [c + 1.0 for v in vs for c in v])
    scale = (_SIZE - 2 * _MARGIN) / extent

    def px(x, y):
        return f"{_MARGIN + x * scale:.2f},{_SIZE - _MARGIN - y * scale:.2f}"

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    if title:
        escaped = title.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
        parts.append(f'<text x="{_MARGIN}" y="20" font-size="12">{escaped}</text>')
    if vs:
        outline = [px(vs[0][0], extent)] + [px(x, y) for x, y in vs] + [px(extent, vs[-1][1])]
        region = outline + [px(extent, extent)]
        parts.append(f'<polygon points="{" ".join(region)}" fill="#cfe0f3" stroke="none"/>')
        parts.append(
            f'<polyline points="{" ".join(outline)}" fill="none" stroke="#1f4e89" stroke-width="2"/>'
        )
        for (x, y), p in zip(vs, st.vertices):
            cx, cy = px(x, y).split(",")
            parts.append(f'<circle cx="{cx}" cy="{cy}" r="3.5" fill="#1f4e89"/>')
            parts.append(
                f'<text x="{float(cx) + 5:.2f}" y="{float(cy) - 5:.2f}" font-size="10">{p}</text>'
            )
    ox, oy = px(0, 0).split(",")
    ex, _ = px(extent, 0).split(",")
    _, ey = px(0, extent).split(",")
    parts.append(f'<line x1="{ox}" y1="{oy}" x2="{ex}" y2="{oy}" stroke="black"/>')
    parts.append(f'<line x1="{ox}" y1="{oy}" x2="{ox}" y2="{ey}" stroke="black"/>')
    # the line x + y = 1 separates drop points from the rest
    parts.append(f'<polyline points="{px(0, 1)} {px(1, 0)}" stroke="gray" stroke-dasharray="4 3"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
