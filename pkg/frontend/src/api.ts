/** Typed client for the session server's JSON API. */

export interface TreeVertex {
  id: string;
  multiplicity: number;
  cyclic: number[];
}

export interface TreeData {
  vertices: TreeVertex[];
}

export interface TreeResponse {
  revision: number;
  tree: TreeData;
}

export interface MutateResponse extends TreeResponse {
  cartan: number[][];
}

export interface ToStarResponse {
  revision: number;
  vertex: string;
  sequence: number[];
}

export interface HistoryResponse {
  revision: number;
  history: { edge: number }[];
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private readonly fetchImpl: FetchLike;

  constructor(
    private readonly base: string = "",
    fetchImpl?: FetchLike,
  ) {
    this.fetchImpl = fetchImpl ?? ((input, init) => fetch(input, init));
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const resp = await this.fetchImpl(this.base + path, init);
    const body = await resp.json().catch(() => ({}));
    if (!resp.ok) {
      const message =
        typeof body === "object" && body !== null && "error" in body
          ? String((body as { error: unknown }).error)
          : `request failed with status ${resp.status}`;
      throw new ApiError(resp.status, message);
    }
    return body as T;
  }

  private post<T>(path: string, payload: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  getTree(): Promise<TreeResponse> {
    return this.request<TreeResponse>("/api/tree");
  }

  getCartan(): Promise<{ revision: number; cartan: number[][] }> {
    return this.request("/api/cartan");
  }

  getHistory(): Promise<HistoryResponse> {
    return this.request<HistoryResponse>("/api/history");
  }

  mutate(edge: number): Promise<MutateResponse> {
    return this.post<MutateResponse>("/api/mutate", { edge });
  }

  undo(): Promise<MutateResponse> {
    return this.post<MutateResponse>("/api/undo", {});
  }

  toStar(vertex: string): Promise<ToStarResponse> {
    return this.post<ToStarResponse>("/api/to-star", { vertex });
  }
}
