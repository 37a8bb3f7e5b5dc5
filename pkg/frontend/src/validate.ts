// Payload and parameter validation. Malformed server payloads surface as a
// user-visible error panel, never a crash; parameter checks mirror the
// server's rules so the client only issues requests that can succeed.

import type { GraphEdge, GraphNode, ViewParams, ViewPayload } from "./types";

export class PayloadError extends Error {}

function isFiniteNumber(v: unknown): v is number {
  return typeof v === "number" && Number.isFinite(v);
}

function checkNode(raw: unknown, i: number): GraphNode {
  if (typeof raw !== "object" || raw === null) {
    throw new PayloadError(`node ${i} is not an object`);
  }
  const node = raw as Record<string, unknown>;
  if (typeof node.id !== "string" || node.id === "") {
    throw new PayloadError(`node ${i} has no id`);
  }
  if (!isFiniteNumber(node.x) || !isFiniteNumber(node.y)) {
    throw new PayloadError(`node ${node.id} has non-finite coordinates`);
  }
  if (typeof node.label !== "string") {
    throw new PayloadError(`node ${node.id} has no label`);
  }
  if (!isFiniteNumber(node.frequency) || node.frequency < 0) {
    throw new PayloadError(`node ${node.id} has a bad frequency`);
  }
  return raw as unknown as GraphNode;
}

function checkEdge(raw: unknown, ids: Set<string>, i: number): GraphEdge {
  if (typeof raw !== "object" || raw === null) {
    throw new PayloadError(`edge ${i} is not an object`);
  }
  const edge = raw as Record<string, unknown>;
  if (typeof edge.source !== "string" || typeof edge.target !== "string") {
    throw new PayloadError(`edge ${i} is missing endpoints`);
  }
  if (!ids.has(edge.source) || !ids.has(edge.target)) {
    throw new PayloadError(`edge ${i} references an unknown node`);
  }
  if (!isFiniteNumber(edge.weight) || edge.weight <= 0) {
    throw new PayloadError(`edge ${i} has a bad weight`);
  }
  return raw as unknown as GraphEdge;
}

/** Validate a /graph response body. Throws PayloadError when malformed. */
export function validatePayload(raw: unknown): ViewPayload {
  if (typeof raw !== "object" || raw === null) {
    throw new PayloadError("payload is not an object");
  }
  const doc = raw as Record<string, unknown>;
  if (!Array.isArray(doc.nodes) || !Array.isArray(doc.edges)) {
    throw new PayloadError("payload is missing nodes or edges");
  }
  if (typeof doc.meta !== "object" || doc.meta === null) {
    throw new PayloadError("payload is missing meta");
  }
  const nodes = doc.nodes.map(checkNode);
  const ids = new Set(nodes.map((n) => n.id));
  if (ids.size !== nodes.length) {
    throw new PayloadError("duplicate node ids");
  }
  const edges = doc.edges.map((e, i) => checkEdge(e, ids, i));
  return { nodes, edges, meta: doc.meta as ViewPayload["meta"] };
}

/** Client-side mirror of the server's ViewSpec rules. Returns a list of
 * human-readable problems; empty means the request may be issued. */
export function paramProblems(params: ViewParams): string[] {
  const problems: string[] = [];
  if (!(params.sample > 0 && params.sample <= 1)) {
    problems.push("sample must be in (0, 1]");
  }
  if (!Number.isInteger(params.seed)) {
    problems.push("seed must be an integer");
  }
  if (!Number.isInteger(params.minWeight) || params.minWeight < 1) {
    problems.push("min weight must be a positive integer");
  }
  if (params.kind === "micro" && params.causeQuery.trim() === "") {
    problems.push("micro view needs a cause query");
  }
  if (params.kind === "overlay" && (!params.userA || !params.userB)) {
    problems.push("overlay view needs two commenters");
  }
  return problems;
}
