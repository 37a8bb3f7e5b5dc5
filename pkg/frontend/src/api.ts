// Fetch wrappers for the read-only /api/v1 endpoints. At most one graph
// request is in flight: issuing a new one aborts the previous.

import type {
  ApiErrorBody,
  CorpusStats,
  StatementDetail,
  ViewParams,
  ViewPayload,
} from "./types";
import { validatePayload } from "./validate";

export class ApiError extends Error {
  constructor(
    public status: number,
    public reason: string,
    detail: string,
  ) {
    super(detail);
  }
}

export function graphUrl(params: ViewParams): string {
  if (params.kind === "macro") {
    const q = new URLSearchParams({
      role: params.role,
      sample: String(params.sample),
      seed: String(params.seed),
      minWeight: String(params.minWeight),
    });
    return `/api/v1/graph/macro?${q}`;
  }
  if (params.kind === "micro") {
    const q = new URLSearchParams({
      cause: params.causeQuery,
      seed: String(params.seed),
      minWeight: String(params.minWeight),
    });
    return `/api/v1/graph/micro?${q}`;
  }
  const q = new URLSearchParams({
    userA: params.userA,
    userB: params.userB,
    role: params.role,
    seed: String(params.seed),
    minWeight: String(params.minWeight),
  });
  return `/api/v1/graph/overlay?${q}`;
}

export function statementUrl(key: string): string {
  return `/api/v1/statements/${encodeURIComponent(key)}`;
}

async function throwApiError(response: Response): Promise<never> {
  let reason = "http_error";
  let detail = `request failed with status ${response.status}`;
  try {
    const body = (await response.json()) as ApiErrorBody;
    if (body?.error) {
      reason = body.error.reason;
      detail = body.error.detail;
    }
  } catch {
    // non-JSON error body: keep the generic detail
  }
  throw new ApiError(response.status, reason, detail);
}

let inflight: AbortController | null = null;

/** Fetch and validate a graph view; a newer call aborts an older one. */
export async function fetchGraph(
  params: ViewParams,
  fetchImpl: typeof fetch = fetch,
): Promise<ViewPayload> {
  inflight?.abort();
  const controller = new AbortController();
  inflight = controller;
  try {
    const response = await fetchImpl(graphUrl(params), {
      signal: controller.signal,
    });
    if (!response.ok) await throwApiError(response);
    return validatePayload(await response.json());
  } finally {
    if (inflight === controller) inflight = null;
  }
}

export async function fetchStatement(
  key: string,
  fetchImpl: typeof fetch = fetch,
): Promise<StatementDetail> {
  const response = await fetchImpl(statementUrl(key));
  if (!response.ok) await throwApiError(response);
  return (await response.json()) as StatementDetail;
}

export async function fetchStats(
  fetchImpl: typeof fetch = fetch,
): Promise<CorpusStats> {
  const response = await fetchImpl("/api/v1/corpus/stats");
  if (!response.ok) await throwApiError(response);
  return (await response.json()) as CorpusStats;
}

export async function fetchTopCommenters(
  k: number,
  fetchImpl: typeof fetch = fetch,
): Promise<string[]> {
  const response = await fetchImpl(`/api/v1/commenters/top?k=${k}`);
  if (!response.ok) await throwApiError(response);
  const body = (await response.json()) as { commenters: string[] };
  return body.commenters;
}
