"""Threshold-edge renders of the cluster model, as SVG and CSV.

"close" mode connects group pairs whose euclidean map distance is at most
the threshold, "far" mode those at least the threshold apart. Edge shade
always encodes the *true* co-occurrence distance, not the map distance, so
disagreements between layout and data stand out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .embedder import EmbeddingModel
from .errors import FragmapError

MODES = ("close", "far")


@dataclass(frozen=True)
class RenderEdge:
    g1: int  # group index, g1 < g2
    g2: int
    eucl: float
    target: float
    shade: float  # 0..1, 1 = darkest


@dataclass(frozen=True)
class EdgeRender:
    mode: str
    threshold: float
    edges: tuple[RenderEdge, ...]


def edges_at_threshold(model: EmbeddingModel, targets, mode: str, threshold: float) -> EdgeRender:
    """All unordered group pairs passing the mode's threshold predicate.

    close: eucl <= t, shade 1 - target/t clamped to [0, 1] (darker = closer
    in truth); far: eucl >= t, shade = target (darker = farther in truth).
    """
    if mode not in MODES:
        raise FragmapError(f"mode must be one of {MODES}, got {mode!r}")
    extent = _extent(model)
    if not 0 <= threshold <= math.sqrt(2) * extent:
        raise FragmapError(
            f"threshold {threshold} outside [0, {math.sqrt(2) * extent:.6g}]"
        )
    edges = []
    m = len(model.group_ids)
    for i in range(m):
        for j in range(i + 1, m):
            e = model.eucl_dist(i, j)
            if (mode == "close" and e <= threshold) or (mode == "far" and e >= threshold):
                target = targets.get(i, j)
                edges.append(RenderEdge(i, j, e, target, _shade(mode, threshold, target)))
    return EdgeRender(mode, threshold, tuple(edges))


def _shade(mode: str, threshold: float, target: float) -> float:
    if mode == "far":
        return min(1.0, max(0.0, target))
    if threshold == 0:
        return 1.0 if target == 0 else 0.0
    return min(1.0, max(0.0, 1.0 - target / threshold))


def _extent(model: EmbeddingModel) -> float:
    if not model.xs:
        return 1.0
    spread = max(
        max(model.xs) - min(model.xs),
        max(model.ys) - min(model.ys),
    )
    return max(1.0, spread)


# ---------------------------------------------------------------------------
# Deterministic SVG / CSV output
# ---------------------------------------------------------------------------

_SIZE = 800
_PAD = 20


def render_svg(render: EdgeRender, model: EmbeddingModel) -> str:
    """Byte-stable SVG: all model points plus the render's edges."""
    xs, ys = model.xs, model.ys
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    span = max(max_x - min_x, max_y - min_y, 1e-9)
    scale = (_SIZE - 2 * _PAD) / span

    def px(x: float) -> str:
        return f"{_PAD + (x - min_x) * scale:.2f}"

    def py(y: float) -> str:
        # y grows upward in the model, downward in SVG
        return f"{_SIZE - _PAD - (y - min_y) * scale:.2f}"

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}">',
        f'<!-- mode={render.mode} threshold={render.threshold!r} -->',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for edge in sorted(render.edges, key=lambda e: (e.g1, e.g2)):
        gray = int(round(235 * (1.0 - edge.shade)))
        color = f"rgb({gray},{gray},{gray})"
        lines.append(
            f'<line x1="{px(xs[edge.g1])}" y1="{py(ys[edge.g1])}" '
            f'x2="{px(xs[edge.g2])}" y2="{py(ys[edge.g2])}" '
            f'stroke="{color}" stroke-width="1"/>'
        )
    for k, gid in enumerate(model.group_ids):
        lines.append(
            f'<circle cx="{px(xs[k])}" cy="{py(ys[k])}" r="3" fill="#1a1a1a">'
            f"<title>group {gid}</title></circle>"
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def export_csv(render: EdgeRender) -> str:
    """CSV rows g1,g2,eucl,target,shade — one per rendered edge."""
    lines = ["g1,g2,eucl,target,shade"]
    for edge in sorted(render.edges, key=lambda e: (e.g1, e.g2)):
        lines.append(
            f"{edge.g1},{edge.g2},{edge.eucl!r},{edge.target!r},{edge.shade!r}"
        )
    return "\n".join(lines) + "\n"


def write_text(path, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
