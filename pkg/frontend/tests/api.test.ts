import { describe, expect, it } from "vitest";

import {
  ApiError,
  fetchGraph,
  fetchStatement,
  graphUrl,
  statementUrl,
} from "../src/api";
import type { ViewParams } from "../src/types";
import { PayloadError } from "../src/validate";

const base: ViewParams = {
  kind: "macro",
  role: "cause",
  sample: 0.1,
  seed: 42,
  causeQuery: "",
  userA: "",
  userB: "",
  minWeight: 1,
};

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

const emptyPayload = {
  nodes: [],
  edges: [],
  meta: {
    kind: "MACRO", role: "CAUSE", sampleFraction: 0.1, seed: 42,
    causeQuery: null, userA: null, userB: null, minWeight: 1,
    nodeCount: 0, edgeCount: 0,
  },
};

describe("url building", () => {
  it("macro carries role/sample/seed/minWeight", () => {
    expect(graphUrl(base)).toBe(
      "/api/v1/graph/macro?role=cause&sample=0.1&seed=42&minWeight=1",
    );
  });

  it("micro encodes the cause query", () => {
    const url = graphUrl({ ...base, kind: "micro", causeQuery: "nuclear power" });
    expect(url).toBe("/api/v1/graph/micro?cause=nuclear+power&seed=42&minWeight=1");
  });

  it("overlay carries both users", () => {
    const url = graphUrl({ ...base, kind: "overlay", userA: "u1", userB: "u2" });
    expect(url).toContain("userA=u1");
    expect(url).toContain("userB=u2");
  });

  it("statement keys are percent-encoded", () => {
    expect(statementUrl("jam␟traffic")).toBe(
      "/api/v1/statements/jam%E2%90%9Ftraffic",
    );
  });
});

describe("fetchGraph", () => {
  it("returns a validated payload", async () => {
    const payload = await fetchGraph(base, async () => jsonResponse(emptyPayload));
    expect(payload.nodes).toEqual([]);
  });

  it("raises ApiError with the server reason", async () => {
    const failing = async () =>
      jsonResponse(
        { error: { reason: "graph_too_large", detail: "lower the sample" } },
        413,
      );
    await expect(fetchGraph(base, failing)).rejects.toMatchObject({
      status: 413,
      reason: "graph_too_large",
    });
  });

  it("raises PayloadError on malformed bodies", async () => {
    const malformed = async () => jsonResponse({ nodes: "wat" });
    await expect(fetchGraph(base, malformed)).rejects.toBeInstanceOf(PayloadError);
  });

  it("a newer request aborts the older one", async () => {
    let firstSignal: AbortSignal | undefined;
    const slowThenFast: typeof fetch = (_url, init) => {
      const signal = init?.signal ?? undefined;
      if (!firstSignal) {
        firstSignal = signal;
        return new Promise((_resolve, reject) => {
          signal?.addEventListener("abort", () =>
            reject(new DOMException("aborted", "AbortError")),
          );
        });
      }
      return Promise.resolve(jsonResponse(emptyPayload));
    };
    const first = fetchGraph(base, slowThenFast);
    const second = fetchGraph({ ...base, seed: 7 }, slowThenFast);
    await expect(second).resolves.toBeTruthy();
    await expect(first).rejects.toHaveProperty("name", "AbortError");
    expect(firstSignal?.aborted).toBe(true);
  });
});

describe("fetchStatement", () => {
  it("propagates 404 as ApiError for the stale-view path", async () => {
    const missing = async () =>
      jsonResponse({ error: { reason: "unknown_statement", detail: "gone" } }, 404);
    await expect(fetchStatement("k", missing)).rejects.toBeInstanceOf(ApiError);
    await expect(fetchStatement("k", missing)).rejects.toMatchObject({
      status: 404,
    });
  });
});
