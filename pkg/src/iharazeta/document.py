"""JSON graph documents: parsing, validation with locations, and canonical dumps.

Example::

    {
      "rank": 2,
      "vertices": ["o"],
      "edges": [
        {"id": "a", "from": "o", "to": "o", "voltage": [1, 0]},
        {"id": "b", "from": "o", "to": "o", "voltage": [0, 1]}
      ]
    }

Each record is a geometric edge; both orientations are materialized, the
reverse of ``id`` being named ``id~``.  ``voltage`` may be omitted when the
rank is 0.  Optional ``vertex_weights`` / ``edge_weights`` map ids to
stabilizer orders.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .errors import InputError
from .graph import REVERSE_SUFFIX, SerreGraph, VoltageGraph


class DocumentError(InputError):
    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}")
        self.where = where


@dataclass(frozen=True)
class EdgeRecord:
    id: str
    source: str
    target: str
    voltage: tuple[int, ...]


@dataclass(frozen=True)
class GraphDocument:
    rank: int
    vertices: tuple[str, ...]
    edges: tuple[EdgeRecord, ...]
    vertex_weights: dict = field(default_factory=dict)
    edge_weights: dict = field(default_factory=dict)

    @property
    def has_weights(self) -> bool:
        return bool(self.vertex_weights or self.edge_weights)

    def voltage_graph(self) -> VoltageGraph:
        return VoltageGraph.from_geometric(
            self.vertices, [(e.id, e.source, e.target, e.voltage) for e in self.edges], self.rank
        )

    def graph(self) -> SerreGraph:
        return self.voltage_graph().base

    def weights(self) -> tuple[dict[str, int], dict[str, int]]:
        """Stabilizer orders with 1 filled in for every unlisted vertex and edge."""
        vw = {v: int(self.vertex_weights.get(v, 1)) for v in self.vertices}
        ew = {e.id: int(self.edge_weights.get(e.id, 1)) for e in self.edges}
        return vw, ew

    def to_dict(self) -> dict:
        out: dict = {
            "rank": self.rank,
            "vertices": list(self.vertices),
            "edges": [
                {"id": e.id, "from": e.source, "to": e.target, "voltage": list(e.voltage)}
                for e in self.edges
            ],
        }
        if self.vertex_weights:
            out["vertex_weights"] = dict(self.vertex_weights)
        if self.edge_weights:
            out["edge_weights"] = dict(self.edge_weights)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def digest(self) -> str:
        canonical = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode()).hexdigest()

    @classmethod
    def from_voltage_graph(cls, vg: VoltageGraph | SerreGraph) -> GraphDocument:
        if isinstance(vg, SerreGraph):
            vg = VoltageGraph.trivial(vg)
        g = vg.base
        records = []
        for eid in g.geometric_edges():
            e = g.edge(eid)
            records.append(EdgeRecord(eid, e.origin, e.terminus, tuple(vg.voltage[eid])))
        return cls(vg.rank, tuple(g.vertices), tuple(records))


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(where, f"expected an integer, got {value!r}")
    return value


def _str(value, where: str) -> str:
    if not isinstance(value, str) or not value:
        raise DocumentError(where, f"expected a non-empty string, got {value!r}")
    return value


def from_dict(data) -> GraphDocument:
    if not isinstance(data, dict):
        raise DocumentError("$", "document must be an object")
    unknown = set(data) - {"rank", "vertices", "edges", "vertex_weights", "edge_weights"}
    if unknown:
        raise DocumentError("$", f"unknown keys {sorted(unknown)}")
    rank = _int(data.get("rank", 0), "rank")
    if rank < 0:
        raise DocumentError("rank", "must be nonnegative")

    raw_vertices = data.get("vertices")
    if not isinstance(raw_vertices, list) or not raw_vertices:
        raise DocumentError("vertices", "expected a non-empty list")
    vertices = tuple(_str(v, f"vertices[{i}]") for i, v in enumerate(raw_vertices))
    if len(set(vertices)) != len(vertices):
        raise DocumentError("vertices", "duplicate vertex id")
    vset = set(vertices)

    raw_edges = data.get("edges")
    if not isinstance(raw_edges, list):
        raise DocumentError("edges", "expected a list")
    records = []
    seen: set[str] = set()
    for i, rec in enumerate(raw_edges):
        where = f"edges[{i}]"
        if not isinstance(rec, dict):
            raise DocumentError(where, "expected an object")
        eid = _str(rec.get("id"), f"{where}.id")
        if eid in seen:
            raise DocumentError(f"{where}.id", f"duplicate edge id {eid!r}")
        if eid.endswith(REVERSE_SUFFIX):
            raise DocumentError(f"{where}.id", f"ids may not end with {REVERSE_SUFFIX!r} (reserved for reversed edges)")
        seen.add(eid)
        a = _str(rec.get("from"), f"{where}.from")
        b = _str(rec.get("to"), f"{where}.to")
        for key, v in (("from", a), ("to", b)):
            if v not in vset:
                raise DocumentError(f"{where}.{key}", f"unknown vertex {v!r}")
        raw_v = rec.get("voltage", [0] * rank if rank == 0 else None)
        if not isinstance(raw_v, list):
            raise DocumentError(f"{where}.voltage", f"expected a list of {rank} integers")
        if len(raw_v) != rank:
            raise DocumentError(f"{where}.voltage", f"expected length {rank}, got {len(raw_v)}")
        volt = tuple(_int(x, f"{where}.voltage[{j}]") for j, x in enumerate(raw_v))
        records.append(EdgeRecord(eid, a, b, volt))

    weights = {}
    for key, valid in (("vertex_weights", vset), ("edge_weights", seen)):
        raw = data.get(key, {})
        if not isinstance(raw, dict):
            raise DocumentError(key, "expected an object mapping ids to stabilizer orders")
        for name, w in raw.items():
            if name not in valid:
                raise DocumentError(f"{key}.{name}", "unknown id")
            if _int(w, f"{key}.{name}") < 1:
                raise DocumentError(f"{key}.{name}", "stabilizer order must be at least 1")
        weights[key] = dict(raw)

    doc = GraphDocument(rank, vertices, tuple(records), weights["vertex_weights"], weights["edge_weights"])
    problems = doc.voltage_graph().validate()
    if problems:
        raise DocumentError("$", "; ".join(problems))
    return doc


def loads(text: str) -> GraphDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    return from_dict(data)
