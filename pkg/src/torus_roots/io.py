"""JSON documents: fans in, reports out (schema ``torus-roots/1``)."""
from __future__ import annotations

import hashlib
import json
import warnings
from dataclasses import dataclass, field

from .cones import Cone, cone_from_rays
from .exact_linalg import Sublattice, primitive
from .fans import Fan, validate_fan
from .lattice_sets import ConicLatticeSet, SlicePiece

SCHEMA_VERSION = "torus-roots/1"


class ParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None, col: int | None = None,
                 path: str | None = None):
        self.msg, self.line, self.col, self.path = msg, line, col, path
        where = []
        if line is not None:
            where.append(f"line {line}, column {col}")
        if path is not None:
            where.append(f"at {path}")
        super().__init__(f"{msg} ({'; '.join(where)})" if where else msg)


class NormalizationWarning(UserWarning):
    pass


@dataclass(frozen=True)
class FanDocument:
    lattice_rank: int
    rays: tuple
    max_cones: tuple
    metadata: dict = field(default_factory=dict, compare=False)
    schema_version: str = SCHEMA_VERSION

    def to_json(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "lattice_rank": self.lattice_rank,
            "rays": [list(r) for r in self.rays],
            "max_cones": [list(c) for c in self.max_cones],
            "metadata": dict(self.metadata),
        }


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_fan_document(text: str) -> FanDocument:
    """Parse and validate a fan document; non-primitive rays are normalized with a warning."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, col=exc.colno) from None
    return fan_document_from_json(raw)


def fan_document_from_json(raw) -> FanDocument:
    if not isinstance(raw, dict):
        raise ParseError("expected a JSON object", path="$")
    for key in ("schema_version", "lattice_rank", "rays", "max_cones"):
        if key not in raw:
            raise ParseError(f"missing field {key!r}", path="$")
    if raw["schema_version"] != SCHEMA_VERSION:
        raise ParseError(f"unsupported schema_version {raw['schema_version']!r}",
                         path="$.schema_version")
    n = raw["lattice_rank"]
    if not _is_int(n) or n < 1:
        raise ParseError("lattice_rank must be a positive integer", path="$.lattice_rank")
    if not isinstance(raw["rays"], list):
        raise ParseError("rays must be a list", path="$.rays")
    rays = []
    for i, r in enumerate(raw["rays"]):
        p = f"$.rays[{i}]"
        if not isinstance(r, list) or len(r) != n:
            raise ParseError(f"ray must be a list of {n} integers", path=p)
        for j, x in enumerate(r):
            if not _is_int(x):
                raise ParseError("ray entries must be integers", path=f"{p}[{j}]")
        if not any(r):
            raise ParseError("zero ray", path=p)
        v = primitive(r)
        if list(v) != r:
            warnings.warn(f"{p} = {r} is not primitive; using {list(v)}", NormalizationWarning,
                          stacklevel=2)
        rays.append(v)
    if not isinstance(raw["max_cones"], list) or not raw["max_cones"]:
        raise ParseError("max_cones must be a nonempty list", path="$.max_cones")
    cones = []
    for i, c in enumerate(raw["max_cones"]):
        p = f"$.max_cones[{i}]"
        if not isinstance(c, list):
            raise ParseError("cone must be a list of ray indices", path=p)
        for j, k in enumerate(c):
            if not _is_int(k) or not 0 <= k < len(rays):
                raise ParseError(f"ray index {k!r} out of range", path=f"{p}[{j}]")
        cones.append(tuple(c))
    meta = raw.get("metadata", {})
    if not isinstance(meta, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in meta.items()):
        raise ParseError("metadata must map strings to strings", path="$.metadata")
    return FanDocument(n, tuple(rays), tuple(cones), dict(meta))


def document_to_fan(doc: FanDocument) -> Fan:
    n = doc.lattice_rank
    return validate_fan([cone_from_rays([doc.rays[i] for i in c], n) for c in doc.max_cones])


def fan_to_document(f: Fan, metadata: dict | None = None) -> FanDocument:
    rays = f.rays
    index = {r: i for i, r in enumerate(rays)}
    cones = tuple(tuple(sorted(index[r] for r in c.rays)) for c in f.max_cones)
    return FanDocument(f.ambient_rank, rays, cones, dict(metadata or {}))


def dump_fan_document(doc: FanDocument, pretty: bool = True) -> str:
    return dumps(doc.to_json(), pretty)


def dumps(obj, pretty: bool = True) -> str:
    if pretty:
        return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"


def digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


# serializers for results


def _rows(vs) -> list:
    return [list(v) for v in vs]


def cone_to_json(c: Cone) -> dict:
    return {"rays": _rows(c.rays), "lineality": _rows(c.lineality),
            "facets": _rows(c.facets), "equations": _rows(c.equations), "dim": c.dim}


def sublattice_to_json(s: Sublattice) -> dict:
    return {"basis": _rows(s.basis), "rank": s.rank}


def piece_to_json(p: SlicePiece) -> dict:
    return {
        "label": p.label,
        "base_cone": cone_to_json(p.base_cone),
        "level_functional": list(p.level_functional) if p.sliced else None,
        "level": p.level,
        "translation": list(p.translation),
        "interior_only": p.interior_only,
        "excluded_subspaces": [sublattice_to_json(w) for w in p.excluded_subspaces],
        "lattice": sublattice_to_json(p.lattice),
    }


def set_to_json(s: ConicLatticeSet) -> dict:
    return {"ambient_rank": s.ambient_rank, "pieces": [piece_to_json(p) for p in s.pieces]}


def semigroup_to_json(a) -> dict:
    return {"cone": cone_to_json(a.cone), "lattice": sublattice_to_json(a.lattice)}


__all__ = [
    "SCHEMA_VERSION", "FanDocument", "NormalizationWarning", "ParseError", "cone_to_json",
    "digest", "document_to_fan", "dump_fan_document", "dumps", "fan_document_from_json",
    "fan_to_document", "parse_fan_document", "piece_to_json", "semigroup_to_json",
    "set_to_json", "sublattice_to_json",
]
