/** Typed client for the /api/v1 annotation endpoints. */

export interface Task {
  segment_id: number;
  source_text: string;
  hypothesis_text: string;
  /** Real system name; must be echoed back in the judgment but never rendered. */
  system: string;
  blinded_label: string;
  done: number;
  total: number;
}

export interface ParameterInfo {
  /** The ten adequacy parameter labels, in fixed order. */
  parameters: string[];
  /** The five 0-4 scale labels ("Not Acceptable (0)" ... "Ideal (4)"). */
  scale: string[];
}

export interface JudgmentPayload {
  segment_id: number;
  system: string;
  annotator: string;
  scores: number[];
  timestamp: string;
}

export type SubmitResult =
  | { kind: "stored" }
  | { kind: "duplicate"; message: string }
  | { kind: "invalid"; field: string; message: string };

/** The server never responded (connection refused, timeout, offline). */
export class NetworkError extends Error {}

/** The server responded with an unexpected status. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

export type FetchFn = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private readonly fetchFn: FetchFn;

  constructor(
    private readonly baseUrl = "",
    fetchFn?: FetchFn,
  ) {
    this.fetchFn = fetchFn ?? ((input, init) => fetch(input, init));
  }

  private async request(path: string, init?: RequestInit): Promise<Response> {
    try {
      return await this.fetchFn(this.baseUrl + path, init);
    } catch (cause) {
      throw new NetworkError(`cannot reach annotation service: ${String(cause)}`);
    }
  }

  async fetchParameters(): Promise<ParameterInfo> {
    const response = await this.request("/api/v1/parameters");
    if (!response.ok) {
      throw new ApiError(response.status, "failed to load parameter labels");
    }
    return (await response.json()) as ParameterInfo;
  }

  /** Next unjudged task for this annotator, or null when everything is done. */
  async fetchNextTask(annotator: string): Promise<Task | null> {
    const response = await this.request(
      `/api/v1/tasks/next?annotator=${encodeURIComponent(annotator)}`,
    );
    if (response.status === 204) {
      return null;
    }
    if (!response.ok) {
      throw new ApiError(response.status, "failed to load the next task");
    }
    return (await response.json()) as Task;
  }

  async submitJudgment(payload: JudgmentPayload): Promise<SubmitResult> {
    const response = await this.request("/api/v1/judgments", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
    });
    if (response.status === 201) {
      return { kind: "stored" };
    }
    if (response.status === 409) {
      const body = (await response.json()) as { detail?: string };
      return { kind: "duplicate", message: body.detail ?? "already judged" };
    }
    if (response.status === 400) {
      const body = (await response.json()) as {
        detail?: { field?: string; message?: string };
      };
      return {
        kind: "invalid",
        field: body.detail?.field ?? "body",
        message: body.detail?.message ?? "invalid judgment",
      };
    }
    throw new ApiError(response.status, "unexpected response storing judgment");
  }
}
