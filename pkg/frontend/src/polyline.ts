import type { Point } from "./types.js";

function pointSegmentDistance(p: Point, a: Point, b: Point): number {
  const abx = b[0] - a[0];
  const aby = b[1] - a[1];
  const denom = abx * abx + aby * aby;
  let t = denom > 0 ? ((p[0] - a[0]) * abx + (p[1] - a[1]) * aby) / denom : 0;
  t = Math.max(0, Math.min(1, t));
  const dx = a[0] + t * abx - p[0];
  const dy = a[1] + t * aby - p[1];
  return Math.hypot(dx, dy);
}

function douglasPeucker(points: Point[], epsilon: number): Point[] {
  if (points.length <= 2) return points.slice();
  let worst = 0;
  let index = 0;
  const a = points[0];
  const b = points[points.length - 1];
  for (let i = 1; i < points.length - 1; i++) {
    const d = pointSegmentDistance(points[i], a, b);
    if (d > worst) {
      worst = d;
      index = i;
    }
  }
  if (worst <= epsilon) return [a, b];
  const left = douglasPeucker(points.slice(0, index + 1), epsilon);
  const right = douglasPeucker(points.slice(index), epsilon);
  return left.slice(0, -1).concat(right);
}

/**
 * Reduce a pointer path to at most maxPoints vertices. Starts at epsilon
 * 0.25 px and doubles until the simplification fits, so short drags keep
 * their shape and dense drags stay within a ~1 px Hausdorff band.
 */
export function decimate(points: Point[], maxPoints = 64): Point[] {
  if (points.length === 0) return [];
  let epsilon = 0.25;
  let out = douglasPeucker(points, epsilon);
  while (out.length > maxPoints) {
    epsilon *= 2;
    out = douglasPeucker(points, epsilon);
  }
  return out;
}

/** Max distance from any raw sample to the simplified polyline. */
export function hausdorffToPath(raw: Point[], simplified: Point[]): number {
  if (simplified.length === 0) return Infinity;
  if (simplified.length === 1) {
    return Math.max(...raw.map((p) => Math.hypot(p[0] - simplified[0][0], p[1] - simplified[0][1])));
  }
  let worst = 0;
  for (const p of raw) {
    let best = Infinity;
    for (let i = 0; i + 1 < simplified.length; i++) {
      best = Math.min(best, pointSegmentDistance(p, simplified[i], simplified[i + 1]));
    }
    worst = Math.max(worst, best);
  }
  return worst;
}

export function clampToFrame(points: Point[], width: number, height: number): Point[] {
  return points.map(([x, y]) => [
    Math.min(Math.max(x, 0), width),
    Math.min(Math.max(y, 0), height),
  ]);
}

/** Canvas CSS coordinates -> image pixel coordinates (pixel-center space). */
export function canvasToImage(
  clientX: number,
  clientY: number,
  rect: { left: number; top: number; width: number; height: number },
  imageWidth: number,
  imageHeight: number,
): Point {
  return [
    ((clientX - rect.left) / rect.width) * imageWidth,
    ((clientY - rect.top) / rect.height) * imageHeight,
  ];
}
