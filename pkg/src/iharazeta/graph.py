"""Serre graphs, voltage graphs and non-backtracking closed walks.

A graph is a set of vertices plus oriented edges; every oriented edge ``e``
has a reverse ``ē`` (the involution) with the endpoints swapped.  A voltage
graph decorates the oriented edges with vectors in ℤ^d, antisymmetric under
reversal, and so encodes a ℤ^d-periodic covering graph with free deck action.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InputError

REVERSE_SUFFIX = "~"


@dataclass(frozen=True)
class Edge:
    id: str
    origin: str
    terminus: str


@dataclass(frozen=True, eq=False)
class SerreGraph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    involution: Mapping[str, str] = field(repr=False)

    @classmethod
    def from_geometric(
        cls, vertices: Iterable[str], edges: Iterable[tuple[str, str, str]]
    ) -> SerreGraph:
        """Build a graph from geometric edges ``(id, a, b)``; both orientations are created.

        The reverse of edge ``id`` is named ``id + "~"``.
        """
        oriented: list[Edge] = []
        inv: dict[str, str] = {}
        for eid, a, b in edges:
            rid = eid + REVERSE_SUFFIX
            oriented.append(Edge(eid, a, b))
            oriented.append(Edge(rid, b, a))
            inv[eid], inv[rid] = rid, eid
        return cls(tuple(vertices), tuple(oriented), inv)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {e.id: i for i, e in enumerate(self.edges)}

    @cached_property
    def _by_id(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def _out(self) -> dict[str, list[str]]:
        out: dict[str, list[str]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out.setdefault(e.origin, []).append(e.id)
        return out

    def edge(self, eid: str) -> Edge:
        try:
            return self._by_id[eid]
        except KeyError:
            raise InputError(f"unknown edge id {eid!r}") from None

    def index(self, eid: str) -> int:
        try:
            return self._index[eid]
        except KeyError:
            raise InputError(f"unknown edge id {eid!r}") from None

    def reverse(self, eid: str) -> str:
        return self.involution[eid]

    def origin(self, eid: str) -> str:
        return self.edge(eid).origin

    def terminus(self, eid: str) -> str:
        return self.edge(eid).terminus

    def out_edges(self, v: str) -> list[str]:
        return list(self._out.get(v, ()))

    def degree(self, v: str) -> int:
        """Number of oriented edges leaving ``v``; a loop counts twice."""
        return len(self._out.get(v, ()))

    def geometric_edges(self) -> list[str]:
        """One representative per pair ``{e, ē}``, the one listed first."""
        seen: set[str] = set()
        reps = []
        for e in self.edges:
            if e.id not in seen:
                reps.append(e.id)
                seen.add(e.id)
                seen.add(self.involution.get(e.id, e.id))
        return reps

    @property
    def num_oriented_edges(self) -> int:
        return len(self.edges)

    @property
    def num_geometric_edges(self) -> int:
        return len(self.geometric_edges())

    def euler_characteristic(self) -> int:
        return len(self.vertices) - self.num_geometric_edges

    def check(self) -> None:
        problems = validate_graph(self)
        if problems:
            raise InputError("invalid graph: " + "; ".join(problems))


def validate_graph(g: SerreGraph) -> list[str]:
    """List every violated graph invariant; an empty list means the graph is valid."""
    problems = []
    vertex_set = set(g.vertices)
    if len(vertex_set) != len(g.vertices):
        problems.append("duplicate vertex id")
    ids = [e.id for e in g.edges]
    if len(set(ids)) != len(ids):
        problems.append("duplicate edge id")
    by_id = {e.id: e for e in g.edges}
    for e in g.edges:
        if e.origin not in vertex_set or e.terminus not in vertex_set:
            problems.append(f"unknown vertex on edge {e.id}")
        r = g.involution.get(e.id)
        if r is None or r not in by_id:
            problems.append(f"involution undefined on edge {e.id}")
            continue
        if r == e.id:
            problems.append(f"fixed-point involution at edge {e.id}")
            continue
        if g.involution.get(r) != e.id:
            problems.append(f"involution not self-inverse at edge {e.id}")
        rev = by_id[r]
        if rev.origin != e.terminus or rev.terminus != e.origin:
            problems.append(f"endpoint mismatch between {e.id} and {r}")
    if len(g.edges) % 2:
        problems.append("odd number of oriented edges")
    degree = {v: 0 for v in g.vertices}
    for e in g.edges:
        if e.origin in degree:
            degree[e.origin] += 1
    for v, d in degree.items():
        if d == 0:
            problems.append(f"isolated vertex {v}")
    return problems


def reduced_successors(g: SerreGraph, eid: str) -> list[str]:
    """Edges ``e1`` with ``origin(e1) = terminus(e)`` and ``e1 != ē``."""
    e = g.edge(eid)
    back = g.reverse(eid)
    return [f for f in g._out.get(e.terminus, ()) if f != back]


@dataclass(frozen=True, eq=False)
class VoltageGraph:
    base: SerreGraph
    rank: int
    voltage: Mapping[str, tuple[int, ...]] = field(repr=False)

    @classmethod
    def from_geometric(
        cls,
        vertices: Iterable[str],
        edges: Iterable[tuple[str, str, str, Sequence[int]]],
        rank: int,
    ) -> VoltageGraph:
        """Geometric edges ``(id, a, b, voltage)``; the reverse carries the negated voltage."""
        edges = list(edges)
        base = SerreGraph.from_geometric(vertices, [(i, a, b) for i, a, b, _ in edges])
        volt: dict[str, tuple[int, ...]] = {}
        for eid, _, _, v in edges:
            v = tuple(int(x) for x in v)
            volt[eid] = v
            volt[eid + REVERSE_SUFFIX] = tuple(-x for x in v)
        return cls(base, rank, volt)

    @classmethod
    def trivial(cls, g: SerreGraph) -> VoltageGraph:
        """Rank-0 voltage graph: the cover is ``g`` itself."""
        return cls(g, 0, {e.id: () for e in g.edges})

    def validate(self) -> list[str]:
        problems = validate_graph(self.base)
        if self.rank < 0:
            problems.append("negative rank")
        for e in self.base.edges:
            v = self.voltage.get(e.id)
            if v is None:
                problems.append(f"missing voltage on edge {e.id}")
                continue
            if len(v) != self.rank:
                problems.append(f"voltage of {e.id} has length {len(v)}, expected {self.rank}")
                continue
            r = self.base.involution.get(e.id)
            rv = self.voltage.get(r) if r is not None else None
            if rv is not None and tuple(rv) != tuple(-x for x in v):
                problems.append(f"voltage not antisymmetric on {e.id}")
        return problems

    def check(self) -> None:
        problems = self.validate()
        if problems:
            raise InputError("invalid voltage graph: " + "; ".join(problems))

    def transform(self, matrix: Sequence[Sequence[int]]) -> VoltageGraph:
        """Apply an integer matrix to every voltage (a change of basis when unimodular)."""
        volt = {
            e: tuple(sum(row[j] * v[j] for j in range(self.rank)) for row in matrix)
            for e, v in self.voltage.items()
        }
        return VoltageGraph(self.base, len(matrix), volt)

    def shift_by_coboundary(self, potential: Mapping[str, Sequence[int]]) -> VoltageGraph:
        """Replace ``v(e)`` by ``v(e) + f(terminus e) - f(origin e)``; the cover is unchanged."""
        volt = {}
        for e in self.base.edges:
            a, b = potential[e.origin], potential[e.terminus]
            volt[e.id] = tuple(x + bj - aj for x, aj, bj in zip(self.voltage[e.id], a, b))
        return VoltageGraph(self.base, self.rank, volt)


def as_voltage_graph(g: SerreGraph | VoltageGraph) -> VoltageGraph:
    return g if isinstance(g, VoltageGraph) else VoltageGraph.trivial(g)


@dataclass(frozen=True)
class ClosedWalk:
    """Cyclic sequence of oriented edge ids, stored from a chosen starting edge."""

    edges: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.edges)

    def is_closed(self, g: SerreGraph) -> bool:
        n = len(self.edges)
        return n > 0 and all(
            g.terminus(self.edges[i]) == g.origin(self.edges[(i + 1) % n]) for i in range(n)
        )

    def is_cyclically_reduced(self, g: SerreGraph) -> bool:
        n = len(self.edges)
        return all(self.edges[(i + 1) % n] != g.reverse(self.edges[i]) for i in range(n))

    def total_voltage(self, vg: VoltageGraph) -> tuple[int, ...]:
        acc = [0] * vg.rank
        for e in self.edges:
            for j, x in enumerate(vg.voltage[e]):
                acc[j] += x
        return tuple(acc)

    def power(self, k: int) -> ClosedWalk:
        return ClosedWalk(self.edges * k)

    def rotate(self, shift: int) -> ClosedWalk:
        s = shift % len(self.edges)
        return ClosedWalk(self.edges[s:] + self.edges[:s])


def smallest_period(seq: Sequence) -> int:
    """Least ``p`` dividing ``len(seq)`` with ``seq`` equal to its first ``p`` items repeated."""
    n = len(seq)
    for p in range(1, n + 1):
        if n % p == 0 and all(seq[i] == seq[i - p] for i in range(p, n)):
            return p
    return n


def primitive_root(w: ClosedWalk) -> tuple[ClosedWalk, int]:
    """Split ``w`` as ``root^k`` with ``root`` not itself a proper power."""
    if not w.edges:
        raise InputError("empty walk has no root")
    p = smallest_period(w.edges)
    return ClosedWalk(w.edges[:p]), len(w.edges) // p


class _WalkTables:
    """Index-based adjacency used by the enumerators."""

    def __init__(self, vg: VoltageGraph):
        g = vg.base
        self.rank = vg.rank
        self.ids = [e.id for e in g.edges]
        self.succ = [[g.index(f) for f in reduced_successors(g, e.id)] for e in g.edges]
        self.succ_sets = [frozenset(s) for s in self.succ]
        self.volt = [tuple(vg.voltage[e.id]) for e in g.edges]
        self.step_norm = max((sum(abs(x) for x in v) for v in self.volt), default=0)


def iter_closed_nb_walks(
    vg: SerreGraph | VoltageGraph, n: int, zero_voltage_only: bool = False
) -> Iterator[tuple[int, ...]]:
    """Yield every cyclically reduced closed walk of length ``n`` as a tuple of edge indices.

    Each walk is produced once per starting edge.  The search is exhaustive;
    the only pruning besides length drops partial walks whose voltage is too
    far from zero to be cancelled by the remaining steps.
    """
    if n < 1:
        raise InputError("walk length must be at least 1")
    vg = as_voltage_graph(vg)
    t = _WalkTables(vg)
    prune = zero_voltage_only and vg.rank > 0
    zero = (0,) * vg.rank
    path: list[int] = []

    def extend(acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        depth = len(path)
        last = path[-1]
        if depth == n:
            if path[0] in t.succ_sets[last] and (not zero_voltage_only or acc == zero):
                yield tuple(path)
            return
        remaining = n - depth
        for f in t.succ[last]:
            nxt = tuple(a + b for a, b in zip(acc, t.volt[f]))
            if prune and sum(abs(x) for x in nxt) > (remaining - 1) * t.step_norm:
                continue
            path.append(f)
            yield from extend(nxt)
            path.pop()

    for start in range(len(t.ids)):
        path.append(start)
        yield from extend(t.volt[start])
        path.pop()


def closed_nb_walks(
    vg: SerreGraph | VoltageGraph, n: int, zero_voltage_only: bool = False
) -> int:
    """Number of based cyclically reduced closed walks of length ``n``."""
    return sum(1 for _ in iter_closed_nb_walks(vg, n, zero_voltage_only))


def walk_from_indices(vg: SerreGraph | VoltageGraph, idx: Iterable[int]) -> ClosedWalk:
    g = vg.base if isinstance(vg, VoltageGraph) else vg
    return ClosedWalk(tuple(g.edges[i].id for i in idx))
