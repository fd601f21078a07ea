/** View state and actions. All data shown comes from API responses; the
 * store never recomputes distances or filters edge sets client-side. */

import { ApiClient, ApiError } from "./api.js";
import type {
  AccessStats,
  EdgeRenderJson,
  GroupInfo,
  ModelJson,
  PatternDetail,
  Summary,
  TransactionJson,
} from "./types.js";

export interface Toast {
  id: number;
  message: string;
}

export interface ViewState {
  summary: Summary | null;
  model: ModelJson | null;
  groups: GroupInfo[];
  closeThreshold: number;
  farThreshold: number;
  closeEdges: EdgeRenderJson | null;
  farEdges: EdgeRenderJson | null;
  selectedGroup: number | null;
  pattern: PatternDetail | null;
  occurrences: { patternId: number; indices: number[] } | null;
  openTransactions: TransactionJson[];
  access: AccessStats | null;
  toasts: Toast[];
}

export function initialState(): ViewState {
  return {
    summary: null,
    model: null,
    groups: [],
    closeThreshold: 0.05,
    farThreshold: 0.95,
    closeEdges: null,
    farEdges: null,
    selectedGroup: null,
    pattern: null,
    occurrences: null,
    openTransactions: [],
    access: null,
    toasts: [],
  };
}

type Listener = (state: ViewState) => void;

export class Store {
  private state: ViewState = initialState();
  private listeners: Listener[] = [];
  private toastSeq = 0;
  private edgeSeq: { close: number; far: number } = { close: 0, far: 0 };

  constructor(private readonly api: ApiClient) {}

  getState(): ViewState {
    return this.state;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private set(partial: Partial<ViewState>): void {
    this.state = { ...this.state, ...partial };
    for (const listener of this.listeners) listener(this.state);
  }

  private toast(error: unknown): void {
    const message =
      error instanceof ApiError
        ? error.message
        : `request failed: ${String(error)}`;
    const toasts = [...this.state.toasts, { id: ++this.toastSeq, message }];
    this.set({ toasts });
  }

  dismissToast(id: number): void {
    this.set({ toasts: this.state.toasts.filter((t) => t.id !== id) });
  }

  /** Load everything the map needs, then both edge overlays. */
  async init(): Promise<void> {
    try {
      const [summary, model, groups, access] = await Promise.all([
        this.api.summary(),
        this.api.model(),
        this.api.groups(),
        this.api.accessStats(),
      ]);
      this.set({ summary, model, groups, access });
    } catch (error) {
      this.toast(error);
      return;
    }
    await Promise.all([
      this.setCloseThreshold(this.state.closeThreshold),
      this.setFarThreshold(this.state.farThreshold),
    ]);
  }

  /** Slider move: always ask the API; the latest response wins. */
  async setCloseThreshold(value: number): Promise<void> {
    const seq = ++this.edgeSeq.close;
    this.set({ closeThreshold: value });
    try {
      const edges = await this.api.edges("close", value);
      if (seq === this.edgeSeq.close) this.set({ closeEdges: edges });
    } catch (error) {
      if (seq === this.edgeSeq.close) this.set({ closeEdges: null });
      this.toast(error);
    }
  }

  async setFarThreshold(value: number): Promise<void> {
    const seq = ++this.edgeSeq.far;
    this.set({ farThreshold: value });
    try {
      const edges = await this.api.edges("far", value);
      if (seq === this.edgeSeq.far) this.set({ farEdges: edges });
    } catch (error) {
      if (seq === this.edgeSeq.far) this.set({ farEdges: null });
      this.toast(error);
    }
  }

  selectGroup(groupId: number | null): void {
    this.set({ selectedGroup: groupId });
  }

  /** Show a member's structure and lattice links; no occurrence fetch. */
  async selectPattern(patternId: number): Promise<void> {
    try {
      const pattern = await this.api.pattern(patternId);
      this.set({
        pattern,
        occurrences: null,
        openTransactions: [],
        selectedGroup: pattern.group ?? this.state.selectedGroup,
      });
    } catch (error) {
      this.toast(error);
    }
  }

  /** One click, exactly one occurrence request; then refresh the meter. */
  async fetchOccurrences(patternId: number): Promise<void> {
    let indices: number[];
    try {
      indices = await this.api.occurrences(patternId);
    } catch (error) {
      this.toast(error);
      return;
    }
    this.set({ occurrences: { patternId, indices } });
    await this.refreshAccess();
  }

  async refreshAccess(): Promise<void> {
    try {
      this.set({ access: await this.api.accessStats() });
    } catch (error) {
      this.toast(error);
    }
  }

  async openTransaction(index: number): Promise<void> {
    if (this.state.openTransactions.some((t) => t.index === index)) return;
    try {
      const transaction = await this.api.transaction(index);
      this.set({
        openTransactions: [...this.state.openTransactions, transaction],
      });
    } catch (error) {
      this.toast(error);
    }
  }
}

/** Groups of a point-click resolve through the model's point order. */
export function groupAt(model: ModelJson, pointIndex: number): number {
  return model.points[pointIndex].group;
}

/** The drawn overlay is exactly the union of the two API edge sets. */
export function overlayEdgeKeys(state: ViewState): string[] {
  const keys: string[] = [];
  for (const render of [state.closeEdges, state.farEdges]) {
    if (!render) continue;
    for (const edge of render.edges) {
      keys.push(`${render.mode}:${edge.g1}-${edge.g2}`);
    }
  }
  return keys;
}
