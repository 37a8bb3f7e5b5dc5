import { describe, expect, it } from "vitest";

import {
  fitCamera,
  pan,
  screenToWorld,
  worldToScreen,
  zoomAt,
  type Camera,
  type Viewport,
} from "../src/camera";

const viewport: Viewport = { width: 800, height: 600 };
const camera: Camera = { x: 10, y: -4, scale: 2 };

describe("camera transforms", () => {
  it("screenToWorld inverts worldToScreen", () => {
    for (const [wx, wy] of [[0, 0], [13.5, -7.25], [-120, 44]]) {
      const s = worldToScreen(wx, wy, camera, viewport);
      const w = screenToWorld(s.x, s.y, camera, viewport);
      expect(w.x).toBeCloseTo(wx, 10);
      expect(w.y).toBeCloseTo(wy, 10);
    }
  });

  it("camera centre maps to viewport centre", () => {
    const s = worldToScreen(camera.x, camera.y, camera, viewport);
    expect(s).toEqual({ x: 400, y: 300 });
  });

  it("pan moves content with the pointer", () => {
    const before = worldToScreen(0, 0, camera, viewport);
    const moved = pan(camera, 25, -10);
    const after = worldToScreen(0, 0, moved, viewport);
    expect(after.x - before.x).toBeCloseTo(25, 10);
    expect(after.y - before.y).toBeCloseTo(-10, 10);
  });

  it("zoomAt keeps the anchor point fixed on screen", () => {
    const anchorScreen = { x: 215, y: 480 };
    const anchorWorld = screenToWorld(anchorScreen.x, anchorScreen.y, camera, viewport);
    const zoomed = zoomAt(camera, 1.75, anchorScreen.x, anchorScreen.y, viewport);
    const after = worldToScreen(anchorWorld.x, anchorWorld.y, zoomed, viewport);
    expect(after.x).toBeCloseTo(anchorScreen.x, 8);
    expect(after.y).toBeCloseTo(anchorScreen.y, 8);
    expect(zoomed.scale).toBeCloseTo(3.5, 10);
  });

  it("zoom clamps to sane bounds", () => {
    const tiny = zoomAt(camera, 1e-9, 0, 0, viewport);
    expect(tiny.scale).toBeGreaterThan(0);
    const huge = zoomAt(tiny, 1e12, 0, 0, viewport);
    expect(huge.scale).toBeLessThanOrEqual(40);
  });

  it("fitCamera contains every node with margin", () => {
    const points = [
      { x: -50, y: -20 },
      { x: 70, y: 10 },
      { x: 0, y: 90 },
    ];
    const fitted = fitCamera(points, viewport, 40);
    for (const p of points) {
      const s = worldToScreen(p.x, p.y, fitted, viewport);
      expect(s.x).toBeGreaterThanOrEqual(40 - 1e-6);
      expect(s.x).toBeLessThanOrEqual(viewport.width - 40 + 1e-6);
      expect(s.y).toBeGreaterThanOrEqual(40 - 1e-6);
      expect(s.y).toBeLessThanOrEqual(viewport.height - 40 + 1e-6);
    }
  });

  it("fitCamera of nothing is the identity view", () => {
    expect(fitCamera([], viewport)).toEqual({ x: 0, y: 0, scale: 1 });
  });
});
