/** JSON shapes served by the fragmap API. */

export interface Summary {
  pattern_count: number;
  minsupp: number;
  group_count: number;
  transactions: number;
}

export interface ModelPoint {
  group: number;
  x: number;
  y: number;
}

export interface ModelJson {
  alpha: number;
  r: number;
  seed: number;
  maxdist: number | null;
  points: ModelPoint[];
}

export interface GroupInfo {
  id: number;
  representative: number;
  members: number[];
  supports: number[];
  sizes: number[];
}

export interface PatternDetail {
  id: number;
  vertices: number[];
  vertex_names: string[];
  edges: [number, number, number][];
  edge_names: string[];
  support: number;
  size: number;
  parents: number[];
  children: number[];
  group: number | null;
}

export interface RenderEdgeJson {
  g1: number;
  g2: number;
  eucl: number;
  target: number;
  shade: number;
}

export interface EdgeRenderJson {
  mode: "close" | "far";
  threshold: number;
  edges: RenderEdgeJson[];
}

export interface AccessStats {
  decompressions: number;
  intersections: number;
}

export interface TransactionVertex {
  id: number;
  label: number;
  name: string;
}

export interface TransactionEdge {
  u: number;
  v: number;
  label: number;
  name: string;
}

export interface TransactionJson {
  index: number;
  vertices: TransactionVertex[];
  edges: TransactionEdge[];
}
