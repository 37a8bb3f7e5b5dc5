// Wire types for the /api/v1 endpoints. The server is the single source of
// truth: the client never recomputes weights, labels or colors.

export type ViewKind = "macro" | "micro" | "overlay";

export type NodeColor = "USER_A" | "USER_B" | "SHARED" | "NEUTRAL" | null;

export interface GraphNode {
  id: string;
  label: string;
  x: number;
  y: number;
  color: NodeColor;
  frequency: number;
  displayText: string;
}

export interface GraphEdge {
  source: string;
  target: string;
  weight: number;
}

export interface ViewMeta {
  kind: string;
  role: string;
  sampleFraction: number;
  seed: number;
  causeQuery: string | null;
  userA: string | null;
  userB: string | null;
  minWeight: number;
  nodeCount: number;
  edgeCount: number;
}

export interface ViewPayload {
  nodes: GraphNode[];
  edges: GraphEdge[];
  meta: ViewMeta;
}

export interface StatementRelation {
  utterance: string;
  commentId: string;
  commenterId: string;
}

export interface StatementDetail {
  displayText: string;
  lemmas: string[];
  relations: StatementRelation[];
}

export interface CorpusStats {
  articles: number;
  comments: number;
  commenters: number;
  relations: number;
}

export interface ApiErrorBody {
  error: { reason: string; detail: string };
}

/** Parameters the user can steer; mirrors the server's view validation. */
export interface ViewParams {
  kind: ViewKind;
  role: "cause" | "effect";
  sample: number;
  seed: number;
  causeQuery: string;
  userA: string;
  userB: string;
  minWeight: number;
}
