export { ArchiveError, ChecksumError, TruncationError, VersionError } from "./errors.js";
export {
  FORMAT_VERSION,
  HEADER_SIZE,
  MAGIC,
  RECORD_SIZE,
  iterTableRecords,
  tableRecordCount,
} from "./poseTable.js";
export type { PoseRecord } from "./poseTable.js";
export { decodeActioness } from "./actioness.js";
export type { ActionessBlock } from "./actioness.js";
export { ArchiveView, open } from "./archive.js";
export type { Manifest, SceneEntry } from "./archive.js";
