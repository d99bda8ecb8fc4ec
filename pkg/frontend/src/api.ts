// Thin typed client over the planning service. Every user action maps to
// exactly one call here; all numbers come back from the server untouched.

import type {
  BaselinesPayload,
  FeatureValuesPayload,
  ParetoPayload,
  SolveReportPayload,
  SolveRequest,
  WhatifRequest,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
    readonly errors: string[] = [],
  ) {
    super(`${status}: ${detail}`);
  }
}

async function parseError(response: Response): Promise<never> {
  let detail = response.statusText;
  let errors: string[] = [];
  try {
    const body = await response.json();
    if (typeof body.detail === "string") detail = body.detail;
    if (Array.isArray(body.errors)) errors = body.errors;
  } catch {
    // non-JSON error body; keep the status text
  }
  throw new ApiError(response.status, detail, errors);
}

export class ApiClient {
  constructor(
    readonly baseUrl: string = "",
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, init);
    if (!response.ok) await parseError(response);
    return (await response.json()) as T;
  }

  private post<T>(path: string, body: unknown, signal?: AbortSignal): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
      signal,
    });
  }

  health(): Promise<{ status: string }> {
    return this.request("/api/health");
  }

  uploadDataset(dataset: unknown): Promise<{ id: string }> {
    return this.post("/api/datasets", dataset);
  }

  getFeatures(datasetId: string): Promise<FeatureValuesPayload> {
    return this.request(`/api/datasets/${datasetId}/features`);
  }

  solve(datasetId: string, body: SolveRequest): Promise<ParetoPayload> {
    return this.post(`/api/datasets/${datasetId}/solve`, body);
  }

  whatif(datasetId: string, body: WhatifRequest, signal?: AbortSignal): Promise<SolveReportPayload> {
    return this.post(`/api/datasets/${datasetId}/whatif`, body, signal);
  }

  baselines(
    datasetId: string,
    body: { heuristics?: string[]; random_reps?: number; seed?: number },
  ): Promise<BaselinesPayload> {
    return this.post(`/api/datasets/${datasetId}/baselines`, body);
  }
}
