// Scene assembly: a pure function of (payload, camera, viewport, selection)
// producing exactly what the renderer draws. Overlay colors follow the
// red/blue/green convention (first user red, second blue, shared green);
// label density adapts to the zoom level instead of any server-side label
// adjustment.

import type { Camera, Viewport } from "./camera";
import { worldToScreen } from "./camera";
import type { NodeColor, ViewPayload } from "./types";

export const NODE_COLORS: Record<string, string> = {
  USER_A: "rgb(227,26,28)", // red — first user, per the body-text convention
  USER_B: "rgb(31,120,180)", // blue — second user
  SHARED: "rgb(51,160,44)", // green — shared beliefs
  NEUTRAL: "rgb(105,115,125)",
};

export interface SceneNode {
  key: string;
  x: number;
  y: number;
  radius: number;
  fill: string;
  label: string | null;
  selected: boolean;
}

export interface SceneEdge {
  x1: number;
  y1: number;
  x2: number;
  y2: number;
  width: number;
}

export interface Scene {
  nodes: SceneNode[];
  edges: SceneEdge[];
  labelCount: number;
}

export function colorFor(color: NodeColor): string {
  return NODE_COLORS[color ?? "NEUTRAL"] ?? NODE_COLORS.NEUTRAL;
}

export function nodeRadius(frequency: number, scale: number): number {
  const base = 2.5 + 1.8 * Math.sqrt(Math.max(frequency, 1));
  return Math.min(24, base * Math.min(Math.max(scale, 0.4), 2.5));
}

/** How many labels to show at a zoom level: a handful when zoomed out,
 * everything when zoomed in. Deterministic in (scale, nodeCount). */
export function visibleLabelCount(scale: number, nodeCount: number): number {
  if (nodeCount === 0) return 0;
  const budget = Math.round(12 * Math.pow(Math.max(scale, 0.01), 1.5));
  return Math.max(Math.min(nodeCount, 4), Math.min(nodeCount, budget));
}

export function buildScene(
  payload: ViewPayload,
  camera: Camera,
  viewport: Viewport,
  selection: string | null,
): Scene {
  const labelBudget = visibleLabelCount(camera.scale, payload.nodes.length);
  // rank by frequency (stable: server sends deterministic order)
  const byFrequency = [...payload.nodes]
    .sort((a, b) => b.frequency - a.frequency || (a.id < b.id ? -1 : 1))
    .slice(0, labelBudget);
  const labelled = new Set(byFrequency.map((n) => n.id));
  if (selection !== null) labelled.add(selection);

  const screenPos = new Map<string, { x: number; y: number }>();
  const nodes: SceneNode[] = payload.nodes.map((node) => {
    const pos = worldToScreen(node.x, node.y, camera, viewport);
    screenPos.set(node.id, pos);
    return {
      key: node.id,
      x: pos.x,
      y: pos.y,
      radius: nodeRadius(node.frequency, camera.scale),
      fill: colorFor(node.color),
      label: labelled.has(node.id) ? node.label : null,
      selected: node.id === selection,
    };
  });

  const edges: SceneEdge[] = payload.edges.map((edge) => {
    const a = screenPos.get(edge.source)!;
    const b = screenPos.get(edge.target)!;
    return {
      x1: a.x,
      y1: a.y,
      x2: b.x,
      y2: b.y,
      width: Math.min(4, 0.5 + 0.5 * Math.sqrt(edge.weight)),
    };
  });

  return { nodes, edges, labelCount: labelled.size };
}

/** Topmost node whose disc contains (sx, sy), or null. */
export function hitTest(scene: Scene, sx: number, sy: number): string | null {
  for (let i = scene.nodes.length - 1; i >= 0; i--) {
    const node = scene.nodes[i];
    const dx = node.x - sx;
    const dy = node.y - sy;
    if (dx * dx + dy * dy <= node.radius * node.radius) return node.key;
  }
  return null;
}
