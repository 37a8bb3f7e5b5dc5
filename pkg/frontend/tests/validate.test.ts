import { describe, expect, it } from "vitest";

import type { ViewParams } from "../src/types";
import { paramProblems, PayloadError, validatePayload } from "../src/validate";

const meta = {
  kind: "MACRO",
  role: "CAUSE",
  sampleFraction: 0.1,
  seed: 42,
  causeQuery: null,
  userA: null,
  userB: null,
  minWeight: 1,
  nodeCount: 2,
  edgeCount: 1,
};

function goodPayload() {
  return {
    nodes: [
      { id: "a", label: "coal", x: 0, y: 0, color: null, frequency: 2, displayText: "coal plants" },
      { id: "b", label: "smog", x: 1, y: 1, color: null, frequency: 1, displayText: "smog" },
    ],
    edges: [{ source: "a", target: "b", weight: 1 }],
    meta,
  };
}

describe("validatePayload", () => {
  it("accepts a well-formed payload", () => {
    const payload = validatePayload(goodPayload());
    expect(payload.nodes).toHaveLength(2);
    expect(payload.edges).toHaveLength(1);
  });

  it("rejects non-objects", () => {
    expect(() => validatePayload(null)).toThrow(PayloadError);
    expect(() => validatePayload("nope")).toThrow(PayloadError);
  });

  it("rejects missing node ids", () => {
    const bad = goodPayload();
    // @ts-expect-error deliberately malformed
    delete bad.nodes[0].id;
    expect(() => validatePayload(bad)).toThrow(PayloadError);
  });

  it("rejects non-finite coordinates", () => {
    const bad = goodPayload();
    bad.nodes[0].x = Number.NaN;
    expect(() => validatePayload(bad)).toThrow(PayloadError);
  });

  it("rejects duplicate node ids", () => {
    const bad = goodPayload();
    bad.nodes[1].id = "a";
    expect(() => validatePayload(bad)).toThrow(PayloadError);
  });

  it("rejects edges pointing at unknown nodes", () => {
    const bad = goodPayload();
    bad.edges[0].target = "ghost";
    expect(() => validatePayload(bad)).toThrow(PayloadError);
  });

  it("rejects non-positive edge weights", () => {
    const bad = goodPayload();
    bad.edges[0].weight = 0;
    expect(() => validatePayload(bad)).toThrow(PayloadError);
  });
});

describe("paramProblems", () => {
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

  it("accepts valid macro params", () => {
    expect(paramProblems(base)).toEqual([]);
  });

  it("rejects out-of-range sample", () => {
    expect(paramProblems({ ...base, sample: 0 })).not.toEqual([]);
    expect(paramProblems({ ...base, sample: 1.2 })).not.toEqual([]);
  });

  it("micro requires a query", () => {
    expect(paramProblems({ ...base, kind: "micro" })).not.toEqual([]);
    expect(
      paramProblems({ ...base, kind: "micro", causeQuery: "nuclear power" }),
    ).toEqual([]);
  });

  it("overlay requires both users", () => {
    expect(paramProblems({ ...base, kind: "overlay", userA: "u1" })).not.toEqual([]);
    expect(
      paramProblems({ ...base, kind: "overlay", userA: "u1", userB: "u2" }),
    ).toEqual([]);
  });

  it("rejects fractional seeds and weights", () => {
    expect(paramProblems({ ...base, seed: 1.5 })).not.toEqual([]);
    expect(paramProblems({ ...base, minWeight: 0 })).not.toEqual([]);
  });
});
