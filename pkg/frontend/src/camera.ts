// Pan/zoom camera math. World coordinates are the server's layout
// positions; the camera maps them onto the canvas. All pure functions.

export interface Camera {
  x: number; // world coordinate at the viewport centre
  y: number;
  scale: number; // screen pixels per world unit
}

export interface Viewport {
  width: number;
  height: number;
}

export const MIN_SCALE = 0.05;
export const MAX_SCALE = 40;

export function worldToScreen(
  wx: number,
  wy: number,
  camera: Camera,
  viewport: Viewport,
): { x: number; y: number } {
  return {
    x: (wx - camera.x) * camera.scale + viewport.width / 2,
    y: (wy - camera.y) * camera.scale + viewport.height / 2,
  };
}

export function screenToWorld(
  sx: number,
  sy: number,
  camera: Camera,
  viewport: Viewport,
): { x: number; y: number } {
  return {
    x: (sx - viewport.width / 2) / camera.scale + camera.x,
    y: (sy - viewport.height / 2) / camera.scale + camera.y,
  };
}

export function pan(camera: Camera, dxPixels: number, dyPixels: number): Camera {
  return {
    x: camera.x - dxPixels / camera.scale,
    y: camera.y - dyPixels / camera.scale,
    scale: camera.scale,
  };
}

/** Zoom by `factor`, keeping the world point under (sx, sy) fixed. */
export function zoomAt(
  camera: Camera,
  factor: number,
  sx: number,
  sy: number,
  viewport: Viewport,
): Camera {
  const scale = Math.min(MAX_SCALE, Math.max(MIN_SCALE, camera.scale * factor));
  if (scale === camera.scale) return camera;
  const anchor = screenToWorld(sx, sy, camera, viewport);
  const ratio = camera.scale / scale;
  return {
    x: anchor.x + (camera.x - anchor.x) * ratio,
    y: anchor.y + (camera.y - anchor.y) * ratio,
    scale,
  };
}

/** Camera that fits every node with a margin; identity view for no nodes. */
export function fitCamera(
  points: Array<{ x: number; y: number }>,
  viewport: Viewport,
  margin = 40,
): Camera {
  if (points.length === 0) return { x: 0, y: 0, scale: 1 };
  let minX = Infinity;
  let maxX = -Infinity;
  let minY = Infinity;
  let maxY = -Infinity;
  for (const p of points) {
    minX = Math.min(minX, p.x);
    maxX = Math.max(maxX, p.x);
    minY = Math.min(minY, p.y);
    maxY = Math.max(maxY, p.y);
  }
  const spanX = Math.max(maxX - minX, 1e-6);
  const spanY = Math.max(maxY - minY, 1e-6);
  const scale = Math.min(
    (viewport.width - 2 * margin) / spanX,
    (viewport.height - 2 * margin) / spanY,
  );
  return {
    x: (minX + maxX) / 2,
    y: (minY + maxY) / 2,
    scale: Math.min(MAX_SCALE, Math.max(MIN_SCALE, scale)),
  };
}
