/** SVG rendering of the explorer: tree scene, Cartan panel, history, wizard.
 *
 * Vertices and edges carry data attributes so tests can drive the UI by
 * dispatching clicks; the exceptional vertex gets a double ring and an
 * "m=k" badge; the wizard's suggested edge is highlighted.
 */

import { TreeData } from "./api";
import { radialLayout, TreeLayout } from "./layout";
import { ExplorerStore, ViewState, isStarAt } from "./state";

const SVG_NS = "http://www.w3.org/2000/svg";

function svgEl(name: string, attrs: Record<string, string>): SVGElement {
  const el = document.createElementNS(SVG_NS, name);
  for (const [k, v] of Object.entries(attrs)) {
    el.setAttribute(k, v);
  }
  return el;
}

function el(
  name: string,
  attrs: Record<string, string> = {},
  text?: string,
): HTMLElement {
  const node = document.createElement(name);
  for (const [k, v] of Object.entries(attrs)) {
    node.setAttribute(k, v);
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

interface EdgeGeometry {
  edge: number;
  x1: number;
  y1: number;
  x2: number;
  y2: number;
}

function edgeGeometry(tree: TreeData, layout: TreeLayout): EdgeGeometry[] {
  const seen = new Map<number, string[]>();
  for (const v of tree.vertices) {
    for (const e of v.cyclic) {
      const ends = seen.get(e) ?? [];
      ends.push(v.id);
      seen.set(e, ends);
    }
  }
  return [...seen.entries()]
    .sort(([a], [b]) => a - b)
    .map(([edge, [a, b]]) => {
      const pa = layout.positions.get(a)!;
      const pb = layout.positions.get(b)!;
      return { edge, x1: pa.x, y1: pa.y, x2: pb.x, y2: pb.y };
    });
}

function renderScene(state: ViewState, store: ExplorerStore): HTMLElement {
  const wrap = el("div", { class: "scene" });
  if (!state.tree) {
    wrap.appendChild(el("p", {}, "loading..."));
    return wrap;
  }
  const tree = state.tree;
  const layout = radialLayout(tree);
  const pts = [...layout.positions.values()];
  const pad = 40;
  const minX = Math.min(...pts.map((p) => p.x)) - pad;
  const minY = Math.min(...pts.map((p) => p.y)) - pad;
  const width = Math.max(...pts.map((p) => p.x)) + pad - minX;
  const height = Math.max(...pts.map((p) => p.y)) + pad - minY;

  const svg = svgEl("svg", {
    viewBox: `${minX} ${minY} ${width} ${height}`,
    width: "520",
    height: "420",
    id: "tree-scene",
  });

  const suggested = state.wizard?.sequence[state.wizard.step];
  for (const g of edgeGeometry(tree, layout)) {
    const cls = g.edge === suggested ? "edge suggested" : "edge";
    svg.appendChild(
      svgEl("line", {
        x1: String(g.x1),
        y1: String(g.y1),
        x2: String(g.x2),
        y2: String(g.y2),
        class: cls,
        "data-edge-line": String(g.edge),
      }),
    );
    const hit = svgEl("line", {
      x1: String(g.x1),
      y1: String(g.y1),
      x2: String(g.x2),
      y2: String(g.y2),
      class: "edge-hit",
      "data-edge": String(g.edge),
    });
    hit.addEventListener("click", () => void store.clickEdge(g.edge));
    svg.appendChild(hit);
    svg.appendChild(
      svgEl("circle", {
        cx: String((g.x1 + g.x2) / 2),
        cy: String((g.y1 + g.y2) / 2),
        r: "9",
        class: "edge-label-bg",
      }),
    );
    const label = svgEl("text", {
      x: String((g.x1 + g.x2) / 2),
      y: String((g.y1 + g.y2) / 2 + 4),
      class: "edge-label",
      "text-anchor": "middle",
    });
    label.textContent = String(g.edge);
    svg.appendChild(label);
  }

  for (const v of tree.vertices) {
    const p = layout.positions.get(v.id)!;
    const group = svgEl("g", { "data-vertex": v.id, class: "vertex" });
    if (v.multiplicity > 1) {
      group.appendChild(
        svgEl("circle", { cx: String(p.x), cy: String(p.y), r: "14", class: "vertex-ring" }),
      );
    }
    const selected = state.selectedVertex === v.id ? " selected" : "";
    group.appendChild(
      svgEl("circle", {
        cx: String(p.x),
        cy: String(p.y),
        r: "10",
        class: "vertex-dot" + selected,
      }),
    );
    const name = svgEl("text", {
      x: String(p.x),
      y: String(p.y - 15),
      class: "vertex-name",
      "text-anchor": "middle",
    });
    name.textContent = v.id;
    group.appendChild(name);
    if (v.multiplicity > 1) {
      const badge = svgEl("text", {
        x: String(p.x),
        y: String(p.y + 28),
        class: "mult-badge",
        "text-anchor": "middle",
        "data-badge": v.id,
      });
      badge.textContent = `m=${v.multiplicity}`;
      group.appendChild(badge);
    }
    group.addEventListener("click", () => void store.selectVertex(v.id));
    svg.appendChild(group);
  }

  wrap.appendChild(svg);
  return wrap;
}

function renderCartan(state: ViewState): HTMLElement {
  const panel = el("div", { class: "panel", id: "cartan-panel" });
  panel.appendChild(el("h3", {}, "Cartan matrix"));
  if (!state.cartan) {
    return panel;
  }
  const table = el("table", { id: "cartan-table" });
  for (const row of state.cartan) {
    const tr = el("tr");
    for (const value of row) {
      tr.appendChild(el("td", {}, String(value)));
    }
    table.appendChild(tr);
  }
  panel.appendChild(table);
  return panel;
}

function renderControls(state: ViewState, store: ExplorerStore): HTMLElement {
  const panel = el("div", { class: "panel" });
  panel.appendChild(el("h3", {}, "Session"));
  panel.appendChild(
    el("p", { id: "revision" }, `revision ${state.revision}`),
  );
  const undo = el("button", { id: "undo-btn" }, "undo");
  if (!state.history.length) {
    undo.setAttribute("disabled", "disabled");
  }
  undo.addEventListener("click", () => void store.undo());
  panel.appendChild(undo);
  const history = el("ol", { id: "history" });
  for (const edge of state.history) {
    history.appendChild(el("li", {}, `mutated edge ${edge}`));
  }
  panel.appendChild(history);
  return panel;
}

function renderWizard(state: ViewState): HTMLElement {
  const panel = el("div", { class: "panel", id: "wizard-panel" });
  panel.appendChild(el("h3", {}, "To star"));
  const w = state.wizard;
  if (!w) {
    panel.appendChild(
      el("p", {}, "click a vertex to plan a mutation route to a star"),
    );
    return panel;
  }
  if (state.tree && isStarAt(state.tree, w.vertex) && w.step >= w.sequence.length) {
    const done = el("p", { id: "star-badge" }, `star at ${w.vertex} ✓`);
    panel.appendChild(done);
    return panel;
  }
  if (w.sequence.length === 0) {
    panel.appendChild(el("p", { id: "star-badge" }, `already a star at ${w.vertex}`));
    return panel;
  }
  panel.appendChild(
    el(
      "p",
      { id: "wizard-step" },
      `step ${w.step + 1}/${w.sequence.length}: click edge ${w.sequence[w.step]}`,
    ),
  );
  return panel;
}

function renderToasts(state: ViewState): HTMLElement {
  const box = el("div", { id: "toasts" });
  for (const toast of state.toasts.slice(-3)) {
    box.appendChild(el("div", { class: `toast ${toast.kind}` }, toast.message));
  }
  return box;
}

export function render(
  state: ViewState,
  store: ExplorerStore,
  container: HTMLElement,
): void {
  container.replaceChildren();
  container.appendChild(el("h1", {}, "Brauer tree explorer"));
  const columns = el("div", { class: "columns" });
  columns.appendChild(renderScene(state, store));
  const side = el("div", { class: "side" });
  side.appendChild(renderControls(state, store));
  side.appendChild(renderCartan(state));
  side.appendChild(renderWizard(state));
  columns.appendChild(side);
  container.appendChild(columns);
  container.appendChild(renderToasts(state));
}
