import { describe, expect, it } from "vitest";

import { ApiClient, ApiError, TreeData } from "../src/api";
import { ExplorerStore, isStarAt } from "../src/state";

const P3: TreeData = {
  vertices: [
    { id: "v0", multiplicity: 1, cyclic: [1] },
    { id: "v1", multiplicity: 1, cyclic: [1, 2] },
    { id: "v2", multiplicity: 1, cyclic: [2, 3] },
    { id: "v3", multiplicity: 1, cyclic: [3] },
  ],
};

const STAR: TreeData = {
  vertices: [
    { id: "v0", multiplicity: 1, cyclic: [1] },
    { id: "v1", multiplicity: 1, cyclic: [2] },
    { id: "v2", multiplicity: 1, cyclic: [2, 1, 3] },
    { id: "v3", multiplicity: 1, cyclic: [3] },
  ],
};

const CARTAN_P3 = [
  [2, 1, 0],
  [1, 2, 1],
  [0, 1, 2],
];
const CARTAN_STAR = [
  [2, 1, 1],
  [1, 2, 1],
  [1, 1, 2],
];

/** Canned server double: serves P3, honors mutate at edge 1 and undo. */
function fakeApi(): ApiClient {
  let revision = 1;
  let current: { tree: TreeData; cartan: number[][] } = {
    tree: P3,
    cartan: CARTAN_P3,
  };
  const stack: (typeof current)[] = [];
  const respond = (body: unknown, status = 200): Response =>
    ({
      ok: status < 400,
      status,
      json: () => Promise.resolve(body),
    }) as Response;

  return new ApiClient("", (input, init) => {
    const path = String(input);
    if (path.endsWith("/api/tree")) {
      return Promise.resolve(respond({ revision, tree: current.tree }));
    }
    if (path.endsWith("/api/cartan")) {
      return Promise.resolve(respond({ revision, cartan: current.cartan }));
    }
    if (path.endsWith("/api/history")) {
      return Promise.resolve(
        respond({ revision, history: stack.map(() => ({ edge: 1 })) }),
      );
    }
    if (path.endsWith("/api/mutate")) {
      const edge = JSON.parse(String(init?.body)).edge as number;
      if (edge !== 1) {
        return Promise.resolve(respond({ error: `invalid edge ${edge}` }, 400));
      }
      stack.push(current);
      current = { tree: STAR, cartan: CARTAN_STAR };
      revision += 1;
      return Promise.resolve(respond({ revision, ...current }));
    }
    if (path.endsWith("/api/undo")) {
      const prev = stack.pop();
      if (!prev) {
        return Promise.resolve(respond({ error: "history is empty" }, 409));
      }
      current = prev;
      revision += 1;
      return Promise.resolve(respond({ revision, ...current }));
    }
    if (path.endsWith("/api/to-star")) {
      const vertex = JSON.parse(String(init?.body)).vertex as string;
      if (!current.tree.vertices.some((v) => v.id === vertex)) {
        return Promise.resolve(respond({ error: "invalid vertex" }, 400));
      }
      const sequence = vertex === "v2" && current.tree === P3 ? [1] : [];
      return Promise.resolve(respond({ revision, vertex, sequence }));
    }
    return Promise.resolve(respond({ error: "no such endpoint" }, 404));
  });
}

describe("ExplorerStore", () => {
  it("loads tree, cartan and history", async () => {
    const store = new ExplorerStore(fakeApi());
    await store.load();
    expect(store.state.tree).toEqual(P3);
    expect(store.state.cartan).toEqual(CARTAN_P3);
    expect(store.state.revision).toBe(1);
    expect(store.state.history).toEqual([]);
  });

  it("applies a mutation and appends history", async () => {
    const store = new ExplorerStore(fakeApi());
    await store.load();
    await store.clickEdge(1);
    expect(store.state.tree).toEqual(STAR);
    expect(store.state.cartan).toEqual(CARTAN_STAR);
    expect(store.state.revision).toBe(2);
    expect(store.state.history).toEqual([1]);
  });

  it("surfaces a 400 as a toast and keeps the state", async () => {
    const store = new ExplorerStore(fakeApi());
    await store.load();
    await store.clickEdge(9);
    expect(store.state.tree).toEqual(P3);
    expect(store.state.history).toEqual([]);
    expect(store.state.toasts.at(-1)?.message).toContain("invalid edge 9");
  });

  it("undo restores the previous tree and pops history", async () => {
    const store = new ExplorerStore(fakeApi());
    await store.load();
    await store.clickEdge(1);
    await store.undo();
    expect(store.state.tree).toEqual(P3);
    expect(store.state.history).toEqual([]);
  });

  it("undo on empty history raises a 409 toast", async () => {
    const store = new ExplorerStore(fakeApi());
    await store.load();
    await store.undo();
    expect(store.state.toasts.at(-1)?.message).toContain("history is empty");
  });

  it("queues gestures so state changes stay ordered", async () => {
    const store = new ExplorerStore(fakeApi());
    await store.load();
    const first = store.clickEdge(1);
    const second = store.undo();
    await Promise.all([first, second]);
    expect(store.state.tree).toEqual(P3);
    expect(store.state.history).toEqual([]);
    expect(store.state.busy).toBe(false);
  });

  it("wizard suggests, advances, and invalidates off-script", async () => {
    const store = new ExplorerStore(fakeApi());
    await store.load();
    await store.selectVertex("v2");
    expect(store.state.wizard).toEqual({ vertex: "v2", sequence: [1], step: 0 });
    await store.clickEdge(1);
    expect(store.state.wizard?.step).toBe(1);
    expect(store.state.tree && isStarAt(store.state.tree, "v2")).toBe(true);
  });

  it("wizard reports an immediate star", async () => {
    const store = new ExplorerStore(fakeApi());
    await store.load();
    await store.selectVertex("v0");
    expect(store.state.wizard?.sequence).toEqual([]);
  });
});

describe("ApiError", () => {
  it("carries the status code", () => {
    const err = new ApiError(409, "history is empty");
    expect(err.status).toBe(409);
    expect(err.message).toBe("history is empty");
  });
});

describe("isStarAt", () => {
  it("detects stars from served data only", () => {
    expect(isStarAt(STAR, "v2")).toBe(true);
    expect(isStarAt(STAR, "v0")).toBe(false);
    expect(isStarAt(P3, "v1")).toBe(false);
  });
});
