/** Small node-link drawings for patterns and transactions. */

interface DrawableGraph {
  labels: string[];
  edges: { u: number; v: number; name: string }[];
}

export function patternDrawable(
  vertexNames: string[],
  edges: [number, number, number][],
  edgeNames: string[],
): DrawableGraph {
  return {
    labels: vertexNames,
    edges: edges.map(([u, v], k) => ({ u, v, name: edgeNames[k] })),
  };
}

export function transactionDrawable(t: {
  vertices: { name: string }[];
  edges: { u: number; v: number; name: string }[];
}): DrawableGraph {
  return {
    labels: t.vertices.map((v) => v.name),
    edges: t.edges.map((e) => ({ u: e.u, v: e.v, name: e.name })),
  };
}

/** Vertices on a circle, labels inside, edge-label text at midpoints. */
export function graphMarkup(g: DrawableGraph, size = 150): string {
  const n = g.labels.length;
  const cx = size / 2;
  const cy = size / 2;
  const radius = n === 1 ? 0 : size / 2 - 18;
  const pos = g.labels.map((_, k) => {
    const angle = (2 * Math.PI * k) / Math.max(n, 1) - Math.PI / 2;
    return { x: cx + radius * Math.cos(angle), y: cy + radius * Math.sin(angle) };
  });
  const parts: string[] = [
    `<svg class="graph" viewBox="0 0 ${size} ${size}" width="${size}" height="${size}">`,
  ];
  for (const e of g.edges) {
    const a = pos[e.u];
    const b = pos[e.v];
    parts.push(
      `<line x1="${a.x.toFixed(1)}" y1="${a.y.toFixed(1)}" ` +
        `x2="${b.x.toFixed(1)}" y2="${b.y.toFixed(1)}"/>`,
      `<text class="edge-label" x="${((a.x + b.x) / 2).toFixed(1)}" ` +
        `y="${((a.y + b.y) / 2 - 3).toFixed(1)}">${escapeHtml(e.name)}</text>`,
    );
  }
  g.labels.forEach((label, k) => {
    parts.push(
      `<circle cx="${pos[k].x.toFixed(1)}" cy="${pos[k].y.toFixed(1)}" r="11"/>`,
      `<text x="${pos[k].x.toFixed(1)}" y="${(pos[k].y + 4).toFixed(1)}">` +
        `${escapeHtml(label)}</text>`,
    );
  });
  parts.push("</svg>");
  return parts.join("");
}

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}
