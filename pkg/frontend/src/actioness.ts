import { TruncationError } from "./errors.js";

/** Per-scene score block: pointScore[p] and viewScore[p][v]. */
export interface ActionessBlock {
  pointCount: number;
  viewCount: number;
  pointScore: Float32Array;
  /** Row-major (pointCount x viewCount). */
  viewScore: Float32Array;
}

/** Decode a score file: u32 P, u32 V, f32 sP[P], f32 sV[P*V], little-endian. */
export function decodeActioness(buf: Uint8Array, label = "actioness"): ActionessBlock {
  if (buf.length < 8) {
    throw new TruncationError(`${label}: shorter than its header`);
  }
  const view = new DataView(buf.buffer, buf.byteOffset, buf.byteLength);
  const pointCount = view.getUint32(0, true);
  const viewCount = view.getUint32(4, true);
  const expected = 8 + 4 * pointCount + 4 * pointCount * viewCount;
  if (buf.length !== expected) {
    throw new TruncationError(`${label}: expected ${expected} bytes, got ${buf.length}`);
  }
  const pointScore = new Float32Array(pointCount);
  const viewScore = new Float32Array(pointCount * viewCount);
  for (let i = 0; i < pointCount; i++) {
    pointScore[i] = view.getFloat32(8 + 4 * i, true);
  }
  const base = 8 + 4 * pointCount;
  for (let i = 0; i < viewScore.length; i++) {
    viewScore[i] = view.getFloat32(base + 4 * i, true);
  }
  return { pointCount, viewCount, pointScore, viewScore };
}
