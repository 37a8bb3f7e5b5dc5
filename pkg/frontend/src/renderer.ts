// Thin canvas renderer: draws a prebuilt Scene. Kept free of layout or
// state logic so tests can drive it with a recording context.

import type { Scene } from "./scene";

// the subset of CanvasRenderingContext2D the renderer touches
export interface Canvas2D {
  clearRect(x: number, y: number, w: number, h: number): void;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  arc(x: number, y: number, r: number, a0: number, a1: number): void;
  fill(): void;
  stroke(): void;
  fillText(text: string, x: number, y: number): void;
  strokeStyle: string | CanvasGradient | CanvasPattern;
  fillStyle: string | CanvasGradient | CanvasPattern;
  lineWidth: number;
  font: string;
  textAlign: CanvasTextAlign;
  globalAlpha: number;
}

export function render(
  ctx: Canvas2D,
  scene: Scene,
  width: number,
  height: number,
): void {
  ctx.clearRect(0, 0, width, height);

  ctx.globalAlpha = 0.35;
  ctx.strokeStyle = "#8899aa";
  for (const edge of scene.edges) {
    ctx.lineWidth = edge.width;
    ctx.beginPath();
    ctx.moveTo(edge.x1, edge.y1);
    ctx.lineTo(edge.x2, edge.y2);
    ctx.stroke();
  }

  ctx.globalAlpha = 1;
  for (const node of scene.nodes) {
    ctx.fillStyle = node.fill;
    ctx.beginPath();
    ctx.arc(node.x, node.y, node.radius, 0, Math.PI * 2);
    ctx.fill();
    if (node.selected) {
      ctx.strokeStyle = "#111111";
      ctx.lineWidth = 2;
      ctx.beginPath();
      ctx.arc(node.x, node.y, node.radius + 2.5, 0, Math.PI * 2);
      ctx.stroke();
    }
  }

  ctx.fillStyle = "#1b2733";
  ctx.font = "12px system-ui, sans-serif";
  ctx.textAlign = "center";
  for (const node of scene.nodes) {
    if (node.label !== null) {
      ctx.fillText(node.label, node.x, node.y - node.radius - 4);
    }
  }
}
