import type { Rle } from "./types.js";

/** Decode row-major run-length encoding (runs alternate, background first). */
export function decodeRle(rle: Rle): Uint8Array {
  const [h, w] = rle.size;
  const total = h * w;
  const out = new Uint8Array(total);
  let pos = 0;
  for (let i = 0; i < rle.counts.length; i++) {
    const run = rle.counts[i];
    if (pos + run > total) {
      throw new Error("RLE counts exceed raster size");
    }
    if (i % 2 === 1) {
      out.fill(1, pos, pos + run);
    }
    pos += run;
  }
  if (pos !== total) {
    throw new Error(`RLE counts sum to ${pos}, expected ${total}`);
  }
  return out;
}
