/** Pure SVG builders for the pan/zoom cluster map. */

import type { ViewState } from "./state.js";
import type { ModelJson } from "./types.js";

export const MAP_SIZE = 760;
const PAD = 28;

export interface Viewport {
  scale: number;
  tx: number;
  ty: number;
}

export function identityViewport(): Viewport {
  return { scale: 1, tx: 0, ty: 0 };
}

export interface ScreenPoint {
  group: number;
  x: number;
  y: number;
}

/** Base projection of model coordinates onto the map canvas (y flipped). */
export function projectPoints(model: ModelJson): ScreenPoint[] {
  const xs = model.points.map((p) => p.x);
  const ys = model.points.map((p) => p.y);
  const minX = Math.min(...xs);
  const minY = Math.min(...ys);
  const span = Math.max(
    Math.max(...xs) - minX,
    Math.max(...ys) - minY,
    1e-9,
  );
  const scale = (MAP_SIZE - 2 * PAD) / span;
  return model.points.map((p) => ({
    group: p.group,
    x: PAD + (p.x - minX) * scale,
    y: MAP_SIZE - PAD - (p.y - minY) * scale,
  }));
}

export function shadeColor(shade: number): string {
  const gray = Math.round(235 * (1 - Math.min(1, Math.max(0, shade))));
  return `rgb(${gray},${gray},${gray})`;
}

/** Inner map content: every API edge drawn verbatim, then the points. */
export function sceneMarkup(state: ViewState, selected: number | null): string {
  if (!state.model) return "";
  const pts = projectPoints(state.model);
  const byGroup = new Map(pts.map((p) => [p.group, p]));
  const parts: string[] = [];
  for (const render of [state.farEdges, state.closeEdges]) {
    if (!render) continue;
    const cls = render.mode === "close" ? "edge-close" : "edge-far";
    for (const edge of render.edges) {
      const a = byGroup.get(edge.g1);
      const b = byGroup.get(edge.g2);
      if (!a || !b) continue;
      parts.push(
        `<line class="${cls}" x1="${a.x.toFixed(2)}" y1="${a.y.toFixed(2)}" ` +
          `x2="${b.x.toFixed(2)}" y2="${b.y.toFixed(2)}" ` +
          `stroke="${shadeColor(edge.shade)}">` +
          `<title>groups ${edge.g1}&#8211;${edge.g2} map ${edge.eucl.toFixed(3)} ` +
          `true ${edge.target.toFixed(3)}</title></line>`,
      );
    }
  }
  for (const p of pts) {
    const cls = p.group === selected ? "point selected" : "point";
    parts.push(
      `<circle class="${cls}" data-group="${p.group}" cx="${p.x.toFixed(2)}" ` +
        `cy="${p.y.toFixed(2)}" r="5"><title>group ${p.group}</title></circle>`,
    );
  }
  return parts.join("");
}

export function viewportTransform(v: Viewport): string {
  return `translate(${v.tx} ${v.ty}) scale(${v.scale})`;
}

export function zoomAt(
  v: Viewport,
  cx: number,
  cy: number,
  factor: number,
): Viewport {
  const scale = Math.min(40, Math.max(0.25, v.scale * factor));
  const applied = scale / v.scale;
  return {
    scale,
    tx: cx - (cx - v.tx) * applied,
    ty: cy - (cy - v.ty) * applied,
  };
}
