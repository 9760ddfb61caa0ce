import type { Point } from "./types.js";

export interface DecodedMask {
  entityId: number;
  bits: Uint8Array; // h*w, row-major
}

/**
 * Entity under an image-space point, or null for background.
 * Higher entity id wins on overlap, matching the server's z-order.
 */
export function hitTest(
  masks: DecodedMask[],
  point: Point,
  height: number,
  width: number,
): number | null {
  const col = Math.floor(point[0]);
  const row = Math.floor(point[1]);
  if (row < 0 || row >= height || col < 0 || col >= width) {
    return null;
  }
  let best: number | null = null;
  for (const mask of masks) {
    if (mask.bits[row * width + col] && (best === null || mask.entityId > best)) {
      best = mask.entityId;
    }
  }
  return best;
}

/** True when the point lies on the given entity's mask. */
export function insideMask(
  masks: DecodedMask[],
  entityId: number,
  point: Point,
  height: number,
  width: number,
): boolean {
  const mask = masks.find((m) => m.entityId === entityId);
  if (!mask) return false;
  const col = Math.floor(point[0]);
  const row = Math.floor(point[1]);
  if (row < 0 || row >= height || col < 0 || col >= width) return false;
  return mask.bits[row * width + col] === 1;
}
