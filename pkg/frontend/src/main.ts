/** DOM glue: mounts the map, sliders, panels and meter onto index.html. */

import { ApiClient } from "./api.js";
import { escapeHtml, graphMarkup, patternDrawable, transactionDrawable } from "./graphview.js";
import {
  identityViewport,
  sceneMarkup,
  viewportTransform,
  zoomAt,
  type Viewport,
} from "./scatter.js";
import { Store, type ViewState } from "./state.js";

const store = new Store(new ApiClient());
let viewport: Viewport = identityViewport();

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

function renderSummary(state: ViewState): void {
  if (!state.summary) return;
  const s = state.summary;
  el("summary-bar").textContent =
    `${s.pattern_count} patterns / ${s.group_count} groups / ` +
    `${s.transactions} transactions (minsupp ${s.minsupp})`;
}

function renderMeter(state: ViewState): void {
  if (!state.access) return;
  el("access-meter").innerHTML =
    `<span class="meter-label">occurrence accesses</span>` +
    `<b>${state.access.decompressions}</b> decompressions ` +
    `<b>${state.access.intersections}</b> intersection queries`;
}

function renderScene(state: ViewState): void {
  const scene = el("map-scene");
  scene.innerHTML = sceneMarkup(state, state.selectedGroup);
  scene.setAttribute("transform", viewportTransform(viewport));
  el("close-count").textContent = String(state.closeEdges?.edges.length ?? 0);
  el("far-count").textContent = String(state.farEdges?.edges.length ?? 0);
}

function memberRows(state: ViewState, groupId: number): string {
  const group = state.groups.find((g) => g.id === groupId);
  if (!group) return "";
  const rows = group.members.map((pid, k) => {
    const active = state.pattern?.id === pid ? " active" : "";
    const rep = pid === group.representative ? " (representative)" : "";
    return (
      `<li class="member${active}" data-pattern="${pid}">pattern ${pid}` +
      `${rep} &#183; support ${group.supports[k]} &#183; ` +
      `${group.sizes[k]} vertices</li>`
    );
  });
  return rows.join("");
}

function patternCard(state: ViewState): string {
  const p = state.pattern;
  if (!p) return "";
  const chips = (ids: number[]): string =>
    ids.length
      ? ids.map((i) => `<button class="chip" data-pattern="${i}">${i}</button>`).join("")
      : "<i>none</i>";
  const occ = state.occurrences;
  const occBlock =
    occ && occ.patternId === p.id
      ? `<div class="occ-list">occurs in ${occ.indices.length} transactions: ` +
        occ.indices
          .map((i) => `<button class="chip txn" data-txn="${i}">#${i}</button>`)
          .join("") +
        "</div>"
      : `<button id="fetch-occ" data-pattern="${p.id}">request occurrences ` +
        "(touches the compressed store)</button>";
  const transactions = state.openTransactions
    .map(
      (t) =>
        `<figure><figcaption>transaction #${t.index}</figcaption>` +
        graphMarkup(transactionDrawable(t)) +
        "</figure>",
    )
    .join("");
  return (
    `<h3>pattern ${p.id}</h3>` +
    graphMarkup(patternDrawable(p.vertex_names, p.edges, p.edge_names)) +
    `<p>support ${p.support} &#183; ${p.size} vertices &#183; group ${p.group}</p>` +
    `<p>parents: ${chips(p.parents)}</p>` +
    `<p>children: ${chips(p.children)}</p>` +
    occBlock +
    `<div class="txn-gallery">${transactions}</div>`
  );
}

function renderPanel(state: ViewState): void {
  const panel = el("group-panel");
  if (state.selectedGroup === null) {
    panel.innerHTML = "<p class=\"hint\">Click a point to inspect its group.</p>";
    return;
  }
  const group = state.groups.find((g) => g.id === state.selectedGroup);
  panel.innerHTML =
    `<h2>group ${state.selectedGroup}</h2>` +
    `<ul class="members">${group ? memberRows(state, group.id) : ""}</ul>` +
    patternCard(state);
}

function renderToasts(state: ViewState): void {
  el("toasts").innerHTML = state.toasts
    .map(
      (t) =>
        `<div class="toast" data-toast="${t.id}">${escapeHtml(t.message)}` +
        ` <button class="dismiss" data-toast="${t.id}">&#215;</button></div>`,
    )
    .join("");
}

function render(state: ViewState): void {
  renderSummary(state);
  renderMeter(state);
  renderScene(state);
  renderPanel(state);
  renderToasts(state);
}

function wireMap(): void {
  const svg = el("map");
  svg.addEventListener("wheel", (event) => {
    event.preventDefault();
    const rect = svg.getBoundingClientRect();
    const factor = (event as WheelEvent).deltaY < 0 ? 1.15 : 1 / 1.15;
    viewport = zoomAt(
      viewport,
      (event as WheelEvent).clientX - rect.left,
      (event as WheelEvent).clientY - rect.top,
      factor,
    );
    renderScene(store.getState());
  });
  let dragging: { x: number; y: number } | null = null;
  svg.addEventListener("mousedown", (event) => {
    dragging = { x: event.clientX - viewport.tx, y: event.clientY - viewport.ty };
  });
  window.addEventListener("mousemove", (event) => {
    if (!dragging) return;
    viewport = {
      ...viewport,
      tx: event.clientX - dragging.x,
      ty: event.clientY - dragging.y,
    };
    renderScene(store.getState());
  });
  window.addEventListener("mouseup", () => {
    dragging = null;
  });
  svg.addEventListener("click", (event) => {
    const target = event.target as Element;
    const group = target.getAttribute("data-group");
    if (group !== null) store.selectGroup(Number(group));
  });
}

function wireSliders(): void {
  const wire = (
    inputId: string,
    labelId: string,
    action: (v: number) => Promise<void>,
  ): void => {
    const input = el<HTMLInputElement>(inputId);
    let pending: number | undefined;
    input.addEventListener("input", () => {
      const value = Number(input.value);
      el(labelId).textContent = value.toFixed(2);
      window.clearTimeout(pending);
      pending = window.setTimeout(() => void action(value), 80);
    });
  };
  wire("close-slider", "close-value", (v) => store.setCloseThreshold(v));
  wire("far-slider", "far-value", (v) => store.setFarThreshold(v));
}

function wirePanel(): void {
  el("group-panel").addEventListener("click", (event) => {
    const target = (event.target as Element).closest("[data-pattern],[data-txn]");
    if (!target) return;
    if (target.id === "fetch-occ") {
      void store.fetchOccurrences(Number(target.getAttribute("data-pattern")));
      return;
    }
    const pattern = target.getAttribute("data-pattern");
    if (pattern !== null) {
      void store.selectPattern(Number(pattern));
      return;
    }
    const txn = target.getAttribute("data-txn");
    if (txn !== null) void store.openTransaction(Number(txn));
  });
  el("toasts").addEventListener("click", (event) => {
    const target = (event.target as Element).closest(".dismiss");
    if (target) store.dismissToast(Number(target.getAttribute("data-toast")));
  });
}

store.subscribe(render);
wireMap();
wireSliders();
wirePanel();
void store.init();
