/** Thin fetch client for the /v1 endpoints, with an injectable transport. */

import {
  ApiError,
  CatalogFamily,
  CreateResponse,
  SessionSpec,
  StateView,
} from "./types.js";

export type Transport = (
  url: string,
  init: { method: string; body?: string; headers?: Record<string, string> },
) => Promise<{ status: number; json: () => Promise<unknown> }>;

const defaultTransport: Transport = (url, init) =>
  fetch(url, {
    ...init,
    headers: { "content-type": "application/json", ...init.headers },
  });

async function unwrap<T>(
  response: Awaited<ReturnType<Transport>>,
): Promise<T> {
  const body = (await response.json()) as Record<string, unknown>;
  if (response.status >= 400) {
    const detail =
      typeof body?.detail === "string"
        ? body.detail
        : JSON.stringify(body?.detail ?? body);
    throw new ApiError(response.status, detail);
  }
  return body as T;
}

export class SessionApi {
  constructor(
    private readonly base: string = "",
    private readonly transport: Transport = defaultTransport,
  ) {}

  private url(path: string): string {
    return `${this.base}/v1${path}`;
  }

  async catalog(): Promise<CatalogFamily[]> {
    const data = await unwrap<{ families: CatalogFamily[] }>(
      await this.transport(this.url("/catalog"), { method: "GET" }),
    );
    return data.families;
  }

  async createSession(spec: SessionSpec): Promise<CreateResponse> {
    return unwrap(
      await this.transport(this.url("/sessions"), {
        method: "POST",
        body: JSON.stringify(spec),
      }),
    );
  }

  async getState(id: string): Promise<StateView> {
    return unwrap(
      await this.transport(this.url(`/sessions/${id}`), { method: "GET" }),
    );
  }

  async fire(id: string, vertex: number): Promise<StateView> {
    return unwrap(
      await this.transport(this.url(`/sessions/${id}/fire`), {
        method: "POST",
        body: JSON.stringify({ vertex }),
      }),
    );
  }

  async undo(id: string): Promise<StateView> {
    return unwrap(
      await this.transport(this.url(`/sessions/${id}/undo`), {
        method: "POST",
        body: JSON.stringify({}),
      }),
    );
  }

  async autoPlay(
    id: string,
    strategy: "lowest" | "highest" | "random",
    steps: number,
    seed = 0,
  ): Promise<StateView> {
    return unwrap(
      await this.transport(this.url(`/sessions/${id}/auto`), {
        method: "POST",
        body: JSON.stringify({ strategy, steps, seed }),
      }),
    );
  }
}
