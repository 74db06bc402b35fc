"""JSON serialization: rationals, embeddings, configs, and reports.

Rationals are serialized as two-integer ``[numerator, denominator]`` pairs so
every round trip is bit-exact.  All writers emit canonical JSON (sorted keys,
fixed separators) so identical inputs produce byte-identical documents.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import List

from .errors import ConfigError
from .exactgeom import ExactPoint


def rat_to_json(x: Fraction) -> List[int]:
    return [x.numerator, x.denominator]


def rat_from_json(obj, field: str = "rational") -> Fraction:
    if not (isinstance(obj, list) and len(obj) == 2 and all(isinstance(v, int) for v in obj)):
        raise ConfigError("expected a [numerator, denominator] integer pair", field)
    if obj[1] == 0:
        raise ConfigError("zero denominator", field)
    return Fraction(obj[0], obj[1])


def point_to_json(p: ExactPoint) -> List[List[int]]:
    return [rat_to_json(p.x), rat_to_json(p.y), rat_to_json(p.z)]


def point_from_json(obj, field: str = "point") -> ExactPoint:
    if not (isinstance(obj, list) and len(obj) == 3):
        raise ConfigError("expected three rational pairs", field)
    return ExactPoint(*(rat_from_json(c, f"{field}[{i}]") for i, c in enumerate(obj)))


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def write_canonical(path, obj) -> bytes:
    data = (canonical_dumps(obj) + "\n").encode("utf-8")
    with open(path, "wb") as fh:
        fh.write(data)
    return data


def content_hash(obj) -> str:
    return hashlib.sha256(canonical_dumps(obj).encode("utf-8")).hexdigest()


# ---------------------------------------------------------------------------
# Graph embeddings
# ---------------------------------------------------------------------------

def embedding_to_json(e) -> dict:
    """Schema: vertices: [{id, pos: [[n,d],[n,d],[n,d]]}], edges: [[id,id]]."""
    verts = []
    for v in sorted(e.graph.vertices, key=lambda u: (str(type(u).__name__), str(u))):
        verts.append({"id": v, "pos": point_to_json(e.position[v])})
    edges = sorted(
        (sorted(tuple(ed), key=str) for ed in e.graph.edges),
        key=lambda pair: [str(x) for x in pair],
    )
    return {"vertices": verts, "edges": [list(ed) for ed in edges]}


def embedding_from_json(obj) -> "LinearEmbedding":
    from .graphs import LinearEmbedding, SpatialGraph

    if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
        raise ConfigError("embedding document needs 'vertices' and 'edges'", "embedding")
    position = {}
    ids = []
    for k, rec in enumerate(obj["vertices"]):
        if not isinstance(rec, dict) or "id" not in rec or "pos" not in rec:
            raise ConfigError("vertex records need 'id' and 'pos'", f"vertices[{k}]")
        vid = rec["id"]
        if not isinstance(vid, (str, int)):
            raise ConfigError("vertex ids must be strings or integers", f"vertices[{k}].id")
        if vid in position:
            raise ConfigError(f"duplicate vertex id {vid!r}", f"vertices[{k}].id")
        ids.append(vid)
        position[vid] = point_from_json(rec["pos"], f"vertices[{k}].pos")
    edges = []
    for k, pair in enumerate(obj["edges"]):
        if not (isinstance(pair, list) and len(pair) == 2):
            raise ConfigError("edges must be [id, id] pairs", f"edges[{k}]")
        for vid in pair:
            if vid not in position:
                raise ConfigError(f"edge endpoint {vid!r} is not a declared vertex", f"edges[{k}]")
        edges.append(tuple(pair))
    return LinearEmbedding(SpatialGraph(ids, edges), position)
