"""SVG pictures of segment families and trees.

Output is plain SVG 1.1 built by string assembly with fixed two-decimal
coordinates and a fixed palette, so the same input always produces the
same bytes — the tests diff renders directly.  Families are drawn on a
circle (convex position is all that matters combinatorially) with an
optional alternating path overlaid; trees are drawn in layers below a
root.
"""

from __future__ import annotations

import math

from .duality import AlternatingPath, SegmentFamily
from .trees import Tree, centroids

_BG = "#ffffff"
_RIM = "#d9dde4"
_CHORD = "#8892a6"
_PATH = "#c0392b"
_DOT = "#1f2937"
_NODE_FILL = "#e2e8f0"
_NODE_EDGE = "#334155"
_TEXT = "#111827"


def _fmt(x: float) -> str:
    out = f"{x:.2f}"
    return "0.00" if out == "-0.00" else out


def _header(width: float, height: float) -> str:
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">\n'
        f'<rect width="{_fmt(width)}" height="{_fmt(height)}" fill="{_BG}"/>\n'
    )


def render_segments(s: SegmentFamily, path: AlternatingPath | None = None) -> str:
    """Draw the family's endpoints on a circle with one chord per segment,
    plus the alternating path as a polyline when given."""
    size = 640.0
    cx = cy = size / 2
    radius = 250.0
    count = 2 * s.n
    spots = []
    for i in range(count):
        angle = -math.pi / 2 + 2 * math.pi * i / count
        spots.append((cx + radius * math.cos(angle), cy + radius * math.sin(angle)))

    parts = [_header(size, size)]
    parts.append(
        f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(radius)}" '
        f'fill="none" stroke="{_RIM}" stroke-width="1"/>\n'
    )
    for a, b in s.pairs:
        (x1, y1), (x2, y2) = spots[a], spots[b]
        parts.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="{_CHORD}" stroke-width="2"/>\n'
        )
    if path is not None:
        pts = " ".join(
            f"{_fmt(spots[e][0])},{_fmt(spots[e][1])}" for e in path.endpoints
        )
        parts.append(
            f'<polyline points="{pts}" fill="none" stroke="{_PATH}" '
            'stroke-width="3.5" stroke-linejoin="round" opacity="0.85"/>\n'
        )
        x0, y0 = spots[path.endpoints[0]]
        parts.append(
            f'<circle cx="{_fmt(x0)}" cy="{_fmt(y0)}" r="7" fill="none" '
            f'stroke="{_PATH}" stroke-width="2"/>\n'
        )
    label_radius = radius + 24
    for i, (x, y) in enumerate(spots):
        parts.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="{_DOT}"/>\n'
        )
        angle = -math.pi / 2 + 2 * math.pi * i / count
        lx = cx + label_radius * math.cos(angle)
        ly = cy + label_radius * math.sin(angle)
        parts.append(
            f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-family="monospace" '
            f'font-size="13" fill="{_TEXT}" text-anchor="middle" '
            f'dominant-baseline="central">{i}</text>\n'
        )
    parts.append("</svg>\n")
    return "".join(parts)


def render_tree(t: Tree, root: int | None = None) -> str:
    """Draw the tree in layers below ``root`` (default: its first
    centroid); leaves claim horizontal slots left to right, inner vertices
    sit over the middle of their children."""
    if root is None:
        root = min(centroids(t))
    if not 0 <= root < t.vertex_count:
        raise ValueError("root out of range")

    parent = [-1] * t.vertex_count
    depth = [0] * t.vertex_count
    order = [root]
    seen = [False] * t.vertex_count
    seen[root] = True
    for v in order:
        for w in t.adjacency[v]:
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                depth[w] = depth[v] + 1
                order.append(w)

    x = [0.0] * t.vertex_count
    next_slot = 0
    for v in reversed(order):
        kids = [w for w in t.adjacency[v] if parent[w] == v]
        if not kids:
            x[v] = float(next_slot)
            next_slot += 1
        else:
            x[v] = sum(x[w] for w in kids) / len(kids)

    step_x, step_y, margin = 64.0, 76.0, 48.0
    width = margin * 2 + step_x * max(next_slot - 1, 0)
    height = margin * 2 + step_y * max(depth)

    def at(v: int) -> tuple[float, float]:
        return margin + x[v] * step_x, margin + depth[v] * step_y

    parts = [_header(width, height)]
    for a, b in t.edges:
        (x1, y1), (x2, y2) = at(a), at(b)
        parts.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="{_CHORD}" stroke-width="2"/>\n'
        )
    for v in range(t.vertex_count):
        px, py = at(v)
        parts.append(
            f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="12" '
            f'fill="{_NODE_FILL}" stroke="{_NODE_EDGE}" stroke-width="1.5"/>\n'
        )
        parts.append(
            f'<text x="{_fmt(px)}" y="{_fmt(py)}" font-family="monospace" '
            f'font-size="11" fill="{_TEXT}" text-anchor="middle" '
            f'dominant-baseline="central">{v}</text>\n'
        )
    parts.append("</svg>\n")
    return "".join(parts)
