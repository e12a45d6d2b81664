/** Explorer state: the served tree, history, the to-star wizard, toasts.
 *
 * The server is the single source of truth; nothing here mutates a tree.
 * State-changing gestures are queued so at most one request is in flight,
 * and every response's revision replaces the view wholesale.
 */

import { ApiClient, ApiError, TreeData } from "./api";

export interface WizardState {
  vertex: string;
  sequence: number[];
  step: number;
}

export interface Toast {
  kind: "error" | "info";
  message: string;
}

export interface ViewState {
  tree: TreeData | null;
  revision: number;
  cartan: number[][] | null;
  history: number[];
  selectedVertex: string | null;
  wizard: WizardState | null;
  busy: boolean;
  toasts: Toast[];
}

type Listener = (state: ViewState) => void;

export class ExplorerStore {
  state: ViewState = {
    tree: null,
    revision: 0,
    cartan: null,
    history: [],
    selectedVertex: null,
    wizard: null,
    busy: false,
    toasts: [],
  };

  private listeners = new Set<Listener>();
  private queue: Promise<void> = Promise.resolve();

  constructor(private readonly api: ApiClient) {}

  subscribe(fn: Listener): () => void {
    this.listeners.add(fn);
    return () => this.listeners.delete(fn);
  }

  private emit(): void {
    for (const fn of this.listeners) {
      fn(this.state);
    }
  }

  private set(patch: Partial<ViewState>): void {
    this.state = { ...this.state, ...patch };
    this.emit();
  }

  private toast(kind: Toast["kind"], message: string): void {
    this.set({ toasts: [...this.state.toasts, { kind, message }] });
  }

  /** Serialize state-changing gestures: one in-flight request at a time. */
  private enqueue(job: () => Promise<void>): Promise<void> {
    this.queue = this.queue.then(async () => {
      this.set({ busy: true });
      try {
        await job();
      } finally {
        this.set({ busy: false });
      }
    });
    return this.queue;
  }

  async load(): Promise<void> {
    const [treeResp, cartanResp, historyResp] = await Promise.all([
      this.api.getTree(),
      this.api.getCartan(),
      this.api.getHistory(),
    ]);
    this.set({
      tree: treeResp.tree,
      revision: treeResp.revision,
      cartan: cartanResp.cartan,
      history: historyResp.history.map((h) => h.edge),
    });
  }

  clickEdge(edge: number): Promise<void> {
    return this.enqueue(async () => {
      try {
        const resp = await this.api.mutate(edge);
        const wizard = this.advanceWizard(edge);
        this.set({
          tree: resp.tree,
          revision: resp.revision,
          cartan: resp.cartan,
          history: [...this.state.history, edge],
          wizard,
        });
      } catch (err) {
        this.surface(err);
      }
    });
  }

  undo(): Promise<void> {
    return this.enqueue(async () => {
      try {
        const resp = await this.api.undo();
        this.set({
          tree: resp.tree,
          revision: resp.revision,
          cartan: resp.cartan,
          history: this.state.history.slice(0, -1),
          wizard: null, // the suggestion was computed for the undone tree
        });
      } catch (err) {
        this.surface(err);
      }
    });
  }

  selectVertex(vertex: string): Promise<void> {
    return this.enqueue(async () => {
      try {
        const resp = await this.api.toStar(vertex);
        this.set({
          selectedVertex: vertex,
          wizard: { vertex, sequence: resp.sequence, step: 0 },
        });
      } catch (err) {
        this.surface(err);
      }
    });
  }

  private advanceWizard(clicked: number): WizardState | null {
    const w = this.state.wizard;
    if (!w) {
      return null;
    }
    if (w.sequence[w.step] === clicked) {
      return { ...w, step: w.step + 1 };
    }
    return null; // off-script click invalidates the precomputed sequence
  }

  private surface(err: unknown): void {
    if (err instanceof ApiError) {
      this.toast("error", `${err.status}: ${err.message}`);
    } else {
      this.toast("error", String(err));
    }
  }
}

/** True when every edge of the tree touches the vertex. */
export function isStarAt(tree: TreeData, vertex: string): boolean {
  const v = tree.vertices.find((w) => w.id === vertex);
  if (!v) {
    return false;
  }
  const edgeCount =
    tree.vertices.reduce((acc, w) => acc + w.cyclic.length, 0) / 2;
  return v.cyclic.length === edgeCount;
}
