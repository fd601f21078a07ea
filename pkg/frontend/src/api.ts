/** Thin typed client for the read-only fragmap API. */

import type {
  AccessStats,
  EdgeRenderJson,
  GroupInfo,
  ModelJson,
  PatternDetail,
  Summary,
  TransactionJson,
} from "./types.js";

export class ApiError extends Error {
  constructor(readonly status: number, detail: string) {
    super(`HTTP ${status}: ${detail}`);
  }
}

export type FetchLike = (url: string) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly fetchFn: FetchLike = (url) => fetch(url),
    private readonly base: string = "",
  ) {}

  private async get<T>(path: string): Promise<T> {
    const response = await this.fetchFn(this.base + path);
    if (!response.ok) {
      let detail = response.statusText;
      try {
        const body = await response.json();
        if (body && typeof body.detail === "string") detail = body.detail;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  summary(): Promise<Summary> {
    return this.get("/api/lattice/summary");
  }

  model(): Promise<ModelJson> {
    return this.get("/api/model");
  }

  groups(): Promise<GroupInfo[]> {
    return this.get("/api/groups");
  }

  pattern(id: number): Promise<PatternDetail> {
    return this.get(`/api/patterns/${id}`);
  }

  occurrences(id: number): Promise<number[]> {
    return this.get(`/api/patterns/${id}/occurrences`);
  }

  edges(mode: "close" | "far", threshold: number): Promise<EdgeRenderJson> {
    return this.get(`/api/model/edges?mode=${mode}&threshold=${threshold}`);
  }

  transaction(index: number): Promise<TransactionJson> {
    return this.get(`/api/transactions/${index}`);
  }

  accessStats(): Promise<AccessStats> {
    return this.get("/api/stats/access");
  }
}
