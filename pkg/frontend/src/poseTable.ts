import { ArchiveError, TruncationError, VersionError } from "./errors.js";

export const MAGIC = "PPOSETAB";
export const FORMAT_VERSION = 1;
export const RECORD_SIZE = 50;
export const HEADER_SIZE = 16;

/** One decoded pose record (little-endian fixed layout, 50 bytes). */
export interface PoseRecord {
  pointIndex: number;
  viewIndex: number;
  depthIndex: number;
  /** (w, x, y, z) */
  quat: [number, number, number, number];
  translation: [number, number, number];
  width: number;
  quality: number;
  reasonable: boolean;
  collisionFree: boolean;
}

function decodeRecord(view: DataView, offset: number): PoseRecord {
  return {
    pointIndex: view.getUint32(offset, true),
    viewIndex: view.getUint32(offset + 4, true),
    depthIndex: view.getUint8(offset + 8),
    quat: [
      view.getFloat32(offset + 9, true),
      view.getFloat32(offset + 13, true),
      view.getFloat32(offset + 17, true),
      view.getFloat32(offset + 21, true),
    ],
    translation: [
      view.getFloat32(offset + 25, true),
      view.getFloat32(offset + 29, true),
      view.getFloat32(offset + 33, true),
    ],
    width: view.getFloat32(offset + 37, true),
    quality: view.getFloat32(offset + 41, true),
    reasonable: view.getUint8(offset + 45) !== 0,
    collisionFree: view.getUint8(offset + 46) !== 0,
  };
}

/** Validate the 16-byte header and return the record count. */
export function tableRecordCount(buf: Uint8Array, label = "pose table"): number {
  if (buf.length < HEADER_SIZE) {
    throw new TruncationError(`${label}: shorter than its 16-byte header`);
  }
  const magic = new TextDecoder("ascii").decode(buf.subarray(0, 8));
  if (magic !== MAGIC) {
    throw new ArchiveError(`${label}: not a pose table (bad magic)`);
  }
  const view = new DataView(buf.buffer, buf.byteOffset, buf.byteLength);
  const version = view.getUint32(8, true);
  if (version !== FORMAT_VERSION) {
    throw new VersionError(
      `${label}: unsupported table version ${version} (expected ${FORMAT_VERSION})`,
    );
  }
  const count = view.getUint32(12, true);
  const body = buf.length - HEADER_SIZE;
  if (body !== count * RECORD_SIZE) {
    throw new TruncationError(
      `${label}: expected ${count} records (${count * RECORD_SIZE} bytes), got ${body} bytes`,
    );
  }
  return count;
}

/** Decode every record of a pose-table buffer, in file order. */
export function* iterTableRecords(
  buf: Uint8Array,
  label = "pose table",
): Generator<PoseRecord> {
  const count = tableRecordCount(buf, label);
  const view = new DataView(buf.buffer, buf.byteOffset, buf.byteLength);
  for (let i = 0; i < count; i++) {
    yield decodeRecord(view, HEADER_SIZE + i * RECORD_SIZE);
  }
}
