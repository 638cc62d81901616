/** Typed client for the annotation service.
 *
 * The fetch implementation is injected so tests can run against a
 * fake; errors carry the server's `detail` message when present and
 * are surfaced to the caller rather than retried.
 */

import type {
  FrequenciesResponse,
  NextResponse,
  PairView,
  SubmitResponse,
} from "./types.js";

export type FetchLike = (
  input: string,
  init?: { method?: string; headers?: Record<string, string>; body?: string },
) => Promise<{ ok: boolean; status: number; json(): Promise<unknown> }>;

export class ApiError extends Error {
  readonly status: number;

  constructor(status: number, message: string) {
    super(message);
    this.status = status;
  }
}

async function errorMessage(
  status: number,
  response: { json(): Promise<unknown> },
): Promise<string> {
  try {
    const body = (await response.json()) as { detail?: unknown };
    if (body && typeof body.detail === "string") {
      return body.detail;
    }
  } catch {
    // fall through to the generic message
  }
  return `request failed with status ${status}`;
}

export class ApiClient {
  private readonly baseUrl: string;
  private readonly fetchImpl: FetchLike;

  constructor(baseUrl: string, fetchImpl: FetchLike) {
    this.baseUrl = baseUrl.replace(/\/$/, "");
    this.fetchImpl = fetchImpl;
  }

  private async request<T>(path: string, init?: Parameters<FetchLike>[1]): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    if (!response.ok) {
      throw new ApiError(response.status, await errorMessage(response.status, response));
    }
    return (await response.json()) as T;
  }

  fetchNext(): Promise<NextResponse> {
    return this.request<NextResponse>("/api/next");
  }

  fetchPair(pairId: string): Promise<PairView> {
    return this.request<PairView>(`/api/pairs/${encodeURIComponent(pairId)}`);
  }

  submitAnnotation(
    pairId: string,
    categories: string[],
    annotator = "default",
  ): Promise<SubmitResponse> {
    return this.request<SubmitResponse>("/api/annotations", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ pair_id: pairId, categories, annotator }),
    });
  }

  fetchFrequencies(): Promise<FrequenciesResponse> {
    return this.request<FrequenciesResponse>("/api/frequencies");
  }
}
