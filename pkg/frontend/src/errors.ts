/** Error taxonomy mirroring the archive writer's reader. */

export class ArchiveError extends Error {
  constructor(message: string) {
    super(message);
    this.name = new.target.name;
  }
}

/** Unsupported format version in a manifest or table header. */
export class VersionError extends ArchiveError {}

/** File shorter (or longer) than its header or manifest promises. */
export class TruncationError extends ArchiveError {}

/** File bytes do not match the manifest's sha256 entry. */
export class ChecksumError extends ArchiveError {}
