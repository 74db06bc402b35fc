"""Wavefront OBJ export for human inspection.

This is the only lossy corner of the package: vertices are written as
17-significant-digit decimals.  Faces are grouped under the given names.
"""

from __future__ import annotations

from typing import Dict, List, Sequence

from .exactgeom import Triangle


def write_obj(path, groups: Dict[str, Sequence[Triangle]]) -> None:
    """Write named triangle groups to an OBJ file (deterministic output)."""
    lines: List[str] = []
    index: Dict[tuple, int] = {}
    verts: List[tuple] = []

    def vid(p) -> int:
        key = p.coords()
        k = index.get(key)
        if k is None:
            k = len(verts) + 1
            index[key] = k
            verts.append(key)
        return k

    faces_by_group = []
    for name, tris in groups.items():
        faces = []
        for t in tris:
            faces.append((vid(t.p), vid(t.q), vid(t.r)))
        faces_by_group.append((name, faces))
    for v in verts:
        lines.append("v " + " ".join(format(float(c), ".17g") for c in v))
    for name, faces in faces_by_group:
        lines.append(f"g {name}")
        for f in faces:
            lines.append("f %d %d %d" % f)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
