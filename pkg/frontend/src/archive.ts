import { createHash } from "node:crypto";
import { existsSync, readFileSync } from "node:fs";
import { join } from "node:path";

import { ActionessBlock, decodeActioness } from "./actioness.js";
import { ArchiveError, ChecksumError, TruncationError, VersionError } from "./errors.js";
import { FORMAT_VERSION, PoseRecord, iterTableRecords } from "./poseTable.js";

export interface SceneEntry {
  index: number;
  targetPart: number;
  [key: string]: unknown;
}

export interface Manifest {
  format_version: number;
  pose_counts: Record<string, number>;
  scenes: SceneEntry[];
  checksums: Record<string, string>;
  [key: string]: unknown;
}

/** Read-only handle on an archive directory; files verified on access. */
export class ArchiveView {
  constructor(
    readonly root: string,
    readonly manifest: Manifest,
  ) {}

  partIds(): string[] {
    return Object.keys(this.manifest.pose_counts ?? {});
  }

  poseCount(partId: string): number {
    const count = (this.manifest.pose_counts ?? {})[partId];
    if (count === undefined) {
      throw new ArchiveError(`unknown part: ${partId}`);
    }
    return count;
  }

  /** Decode a part's pose table, newest bytes, checksum-verified. */
  *iterPoses(partId: string): Generator<PoseRecord> {
    const count = this.poseCount(partId);
    const rel = `parts/${partId}.poses`;
    const buf = this.readVerified(rel);
    let seen = 0;
    for (const record of iterTableRecords(buf, rel)) {
      seen++;
      yield record;
    }
    if (seen !== count) {
      throw new TruncationError(`${rel}: manifest says ${count} records, table has ${seen}`);
    }
  }

  readPoses(partId: string): PoseRecord[] {
    return Array.from(this.iterPoses(partId));
  }

  sceneIndices(): number[] {
    return (this.manifest.scenes ?? []).map((s) => s.index);
  }

  readActioness(sceneIndex: number): ActionessBlock {
    const rel = `scenes/${sceneIndex}/actioness.bin`;
    return decodeActioness(this.readVerified(rel), rel);
  }

  /** Raw archive file with its manifest checksum enforced (when listed). */
  readVerified(rel: string): Uint8Array {
    const path = join(this.root, rel);
    if (!existsSync(path)) {
      throw new ArchiveError(`missing archive file: ${rel}`);
    }
    const buf = new Uint8Array(readFileSync(path));
    const expected = (this.manifest.checksums ?? {})[rel];
    if (expected !== undefined) {
      const actual = createHash("sha256").update(buf).digest("hex");
      if (actual !== expected) {
        throw new ChecksumError(`${rel}: checksum mismatch (${actual} != ${expected})`);
      }
    }
    return buf;
  }
}

/** Open an archive directory and validate its manifest. */
export function open(root: string): ArchiveView {
  const manifestPath = join(root, "manifest.json");
  if (!existsSync(manifestPath)) {
    throw new ArchiveError(`missing manifest.json in ${root}`);
  }
  const manifest = JSON.parse(readFileSync(manifestPath, "utf8")) as Manifest;
  if (manifest.format_version !== FORMAT_VERSION) {
    throw new VersionError(
      `unsupported archive version ${manifest.format_version} (expected ${FORMAT_VERSION})`,
    );
  }
  return new ArchiveView(root, manifest);
}
