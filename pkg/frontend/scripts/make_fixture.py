#!/usr/bin/env python3
"""Build the vitest fixture: a small archive written by the partpose CLI plus
a JSON dump of the same records decoded by the Python reader, so the
TypeScript reader can be checked for field-exact equality."""

import json
import sys
from pathlib import Path

import numpy as np

from partpose.archive import read_actioness, read_archive
from partpose.cli import main
from partpose.mesh import TriMesh, save_obj

BOX_FACES = [
    [0, 1, 3], [0, 3, 2], [4, 6, 7], [4, 7, 5],
    [0, 4, 5], [0, 5, 1], [2, 3, 7], [2, 7, 6],
    [0, 2, 6], [0, 6, 4], [1, 5, 7], [1, 7, 3],
]


def box(center, size):
    c = np.asarray(center, float)
    s = np.asarray(size, float) / 2
    v = np.array([[x, y, z] for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)]) * s + c
    return TriMesh(v, np.array(BOX_FACES))


def write_asset(directory: Path) -> Path:
    save_obj(box([0, 0, 0.25], [0.4, 0.4, 0.5]), directory / "base.obj")
    save_obj(box([0, 0, 0], [0.02, 0.12, 0.02]), directory / "handle.obj")
    origin = np.eye(4)
    origin[0, 3] = 0.22
    origin[2, 3] = 0.25
    doc = {
        "asset_id": "fixture-cabinet",
        "root": "base",
        "links": [{"name": "base", "meshes": ["base.obj"]},
                  {"name": "drawer", "meshes": []}],
        "joints": [{"name": "slide", "kind": "prismatic", "parent": "base",
                    "child": "drawer", "axis": [1, 0, 0],
                    "origin": origin.flatten().tolist(), "limits": [0.0, 0.2]}],
        "parts": [{"part_id": "h1", "semantic_class": "line-fixed-handle",
                   "owning_link": "drawer", "meshes": ["handle.obj"]}],
    }
    path = directory / "asset.json"
    path.write_text(json.dumps(doc))
    return path


def dump_records(arc_dir: Path, out_path: Path) -> None:
    arc = read_archive(arc_dir, load_scenes=False)
    dump = {"parts": {}, "scenes": {}}
    for part_id, batch in arc.part_poses.items():
        dump["parts"][part_id] = [
            {
                "pointIndex": int(batch.point_index[i]),
                "viewIndex": int(batch.view_index[i]),
                "depthIndex": int(batch.depth_index[i]),
                "quat": [float(x) for x in batch.quat[i]],
                "translation": [float(x) for x in batch.translation[i]],
                "width": float(batch.width[i]),
                "quality": float(batch.quality[i]),
                "reasonable": bool(batch.reasonable[i]),
                "collisionFree": bool(batch.collision_free[i]),
            }
            for i in range(len(batch))
        ]
    for entry in arc.manifest.get("scenes", []):
        sp, sv = read_actioness(arc_dir / "scenes" / str(entry["index"]) / "actioness.bin")
        dump["scenes"][str(entry["index"])] = {
            "pointScore": [float(x) for x in sp],
            "viewScore": [float(x) for x in sv.ravel()],
        }
    out_path.write_text(json.dumps(dump))


def build(fixture_dir: Path) -> None:
    fixture_dir.mkdir(parents=True, exist_ok=True)
    asset = write_asset(fixture_dir)
    arc = fixture_dir / "archive"
    flags = ["--n", "4", "--views", "4", "--angles", "2", "--depths", "2",
             "--depth-values", "0.01", "0.02", "--seed", "11"]
    code = main(["annotate-part", "--asset", str(asset), "--part", "h1",
                 "--out", str(arc), *flags])
    assert code == 0, "annotate-part failed"
    code = main(["annotate-scene", "--asset", str(asset), "--archive", str(arc),
                 "--part", "h1", "--scenes", "1", *flags])
    assert code == 0, "annotate-scene failed"
    dump_records(arc, fixture_dir / "records.json")
    print(f"fixture written to {fixture_dir}")


if __name__ == "__main__":
    build(Path(sys.argv[1] if len(sys.argv) > 1 else "tests/fixture"))
