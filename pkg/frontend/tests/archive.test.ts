import { cpSync, mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, describe, expect, it } from "vitest";

import {
  ArchiveError,
  ChecksumError,
  HEADER_SIZE,
  MAGIC,
  RECORD_SIZE,
  TruncationError,
  VersionError,
  decodeActioness,
  iterTableRecords,
  open,
} from "../src/index.js";

const FIXTURE = join(__dirname, "fixture");
const ARCHIVE = join(FIXTURE, "archive");

interface RecordDump {
  pointIndex: number;
  viewIndex: number;
  depthIndex: number;
  quat: number[];
  translation: number[];
  width: number;
  quality: number;
  reasonable: boolean;
  collisionFree: boolean;
}

interface Dump {
  parts: Record<string, RecordDump[]>;
  scenes: Record<string, { pointScore: number[]; viewScore: number[] }>;
}

const dump: Dump = JSON.parse(readFileSync(join(FIXTURE, "records.json"), "utf8"));

const tmpDirs: string[] = [];
function tamperedCopy(mutate: (root: string) => void): string {
  const root = mkdtempSync(join(tmpdir(), "archive-"));
  tmpDirs.push(root);
  cpSync(ARCHIVE, root, { recursive: true });
  mutate(root);
  return root;
}
afterAll(() => {
  for (const dir of tmpDirs) rmSync(dir, { recursive: true, force: true });
});

function emptyTable(): Uint8Array {
  const buf = new Uint8Array(HEADER_SIZE);
  new TextEncoder().encodeInto(MAGIC, buf);
  new DataView(buf.buffer).setUint32(8, 1, true);
  return buf;
}

describe("open", () => {
  it("validates counts against the manifest", () => {
    const view = open(ARCHIVE);
    expect(view.partIds()).toEqual(Object.keys(dump.parts));
    for (const partId of view.partIds()) {
      expect(view.readPoses(partId)).toHaveLength(view.poseCount(partId));
    }
  });

  it("rejects a directory without a manifest", () => {
    expect(() => open(FIXTURE)).toThrow(ArchiveError);
  });

  it("rejects an unsupported manifest version", () => {
    const root = tamperedCopy((r) => {
      const manifest = JSON.parse(readFileSync(join(r, "manifest.json"), "utf8"));
      manifest.format_version = 999;
      writeFileSync(join(r, "manifest.json"), JSON.stringify(manifest));
    });
    expect(() => open(root)).toThrow(VersionError);
  });
});

describe("iterPoses", () => {
  it("matches the writer-side decoder field for field", () => {
    const view = open(ARCHIVE);
    for (const [partId, expected] of Object.entries(dump.parts)) {
      const records = view.readPoses(partId);
      expect(records).toHaveLength(expected.length);
      records.forEach((rec, i) => {
        const want = expected[i];
        expect(rec.pointIndex).toBe(want.pointIndex);
        expect(rec.viewIndex).toBe(want.viewIndex);
        expect(rec.depthIndex).toBe(want.depthIndex);
        expect(Array.from(rec.quat)).toEqual(want.quat);
        expect(Array.from(rec.translation)).toEqual(want.translation);
        expect(rec.width).toBe(want.width);
        expect(rec.quality).toBe(want.quality);
        expect(rec.reasonable).toBe(want.reasonable);
        expect(rec.collisionFree).toBe(want.collisionFree);
      });
    }
  });

  it("rejects an unknown part", () => {
    expect(() => open(ARCHIVE).readPoses("nope")).toThrow(ArchiveError);
  });

  it("yields nothing for a zero-row table", () => {
    expect(Array.from(iterTableRecords(emptyTable()))).toEqual([]);
  });

  it("detects a truncated table", () => {
    const root = tamperedCopy((r) => {
      const partId = Object.keys(dump.parts)[0];
      const path = join(r, "parts", `${partId}.poses`);
      const raw = new Uint8Array(readFileSync(path));
      const manifest = JSON.parse(readFileSync(join(r, "manifest.json"), "utf8"));
      delete manifest.checksums; // isolate the length check from the checksum check
      writeFileSync(join(r, "manifest.json"), JSON.stringify(manifest));
      writeFileSync(path, raw.subarray(0, raw.length - RECORD_SIZE + 1));
    });
    const partId = Object.keys(dump.parts)[0];
    expect(() => open(root).readPoses(partId)).toThrow(TruncationError);
  });

  it("detects a tampered byte via the manifest checksum", () => {
    const partId = Object.keys(dump.parts)[0];
    const root = tamperedCopy((r) => {
      const path = join(r, "parts", `${partId}.poses`);
      const raw = new Uint8Array(readFileSync(path));
      raw[HEADER_SIZE + 20] ^= 0xff;
      writeFileSync(path, raw);
    });
    expect(() => open(root).readPoses(partId)).toThrow(ChecksumError);
  });
});

describe("actioness", () => {
  it("matches the writer-side decoder exactly", () => {
    const view = open(ARCHIVE);
    for (const index of view.sceneIndices()) {
      const block = view.readActioness(index);
      const want = dump.scenes[String(index)];
      expect(block.pointCount).toBe(want.pointScore.length);
      expect(block.pointCount * block.viewCount).toBe(want.viewScore.length);
      expect(Array.from(block.pointScore)).toEqual(want.pointScore);
      expect(Array.from(block.viewScore)).toEqual(want.viewScore);
    }
  });

  it("detects truncation", () => {
    expect(() => decodeActioness(new Uint8Array(4))).toThrow(TruncationError);
  });
});
