/** Thin client for the analysis service; in-flight chord fetches are
 * cancelled when a newer one starts. */

import type { ChainPayload, ChordPayload } from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(message: string, readonly status: number | null = null) {
    super(message);
  }
}

export class ApiClient {
  private inFlight: AbortController | null = null;

  constructor(
    readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async getJson<T>(path: string, signal?: AbortSignal): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchImpl(`${this.baseUrl}${path}`, { signal });
    } catch (error) {
      if (error instanceof DOMException && error.name === "AbortError") throw error;
      throw new ApiError(`service unreachable: ${String(error)}`);
    }
    if (!response.ok) {
      let detail = response.statusText;
      try {
        const body = (await response.json()) as { detail?: string };
        if (body.detail) detail = body.detail;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(detail, response.status);
    }
    return (await response.json()) as T;
  }

  /** Fetch a chord, aborting any previous chord fetch still in flight. */
  chord(id: string, baseNote = 60): Promise<ChordPayload> {
    this.inFlight?.abort();
    const controller = new AbortController();
    this.inFlight = controller;
    const path = `/api/chord/${encodeURIComponent(id)}?base_note=${baseNote}`;
    return this.getJson<ChordPayload>(path, controller.signal);
  }

  chain(n: number, limit: number): Promise<ChainPayload> {
    return this.getJson<ChainPayload>(`/api/chain?n=${n}&limit=${limit}`);
  }
}

/** Service location: ?api=… query parameter, else same-host port 8000. */
export function defaultBaseUrl(location: Location): string {
  const override = new URLSearchParams(location.search).get("api");
  if (override) return override.replace(/\/$/, "");
  const host = location.hostname || "127.0.0.1";
  return `${location.protocol === "https:" ? "https" : "http"}://${host}:8000`;
}
