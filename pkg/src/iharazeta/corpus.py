"""Named example graphs and seeded random graph generators."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import SerreGraph, VoltageGraph


def single_edge() -> SerreGraph:
    return SerreGraph.from_geometric(["x", "y"], [("e", "x", "y")])


def path(n: int = 4) -> SerreGraph:
    """Path with ``n`` vertices."""
    vs = [f"v{i}" for i in range(n)]
    return SerreGraph.from_geometric(vs, [(f"e{i}", vs[i], vs[i + 1]) for i in range(n - 1)])


def star(leaves: int = 3) -> SerreGraph:
    vs = ["c"] + [f"l{i}" for i in range(leaves)]
    return SerreGraph.from_geometric(vs, [(f"e{i}", "c", f"l{i}") for i in range(leaves)])


def cycle(n: int) -> SerreGraph:
    vs = [f"v{i}" for i in range(n)]
    return SerreGraph.from_geometric(vs, [(f"e{i}", vs[i], vs[(i + 1) % n]) for i in range(n)])


def triangle() -> SerreGraph:
    return cycle(3)


def complete(n: int = 4) -> SerreGraph:
    vs = [f"v{i}" for i in range(n)]
    return SerreGraph.from_geometric(
        vs, [(f"e{i}{j}", vs[i], vs[j]) for i, j in combinations(range(n), 2)]
    )


def bouquet(loops: int = 2) -> SerreGraph:
    names = "abcdefgh"
    return SerreGraph.from_geometric(["o"], [(names[i], "o", "o") for i in range(loops)])


def theta() -> SerreGraph:
    """Two vertices joined by three parallel edges."""
    return SerreGraph.from_geometric(["x", "y"], [(f"e{i}", "x", "y") for i in range(3)])


def grid() -> VoltageGraph:
    """Bouquet of two loops with voltages (1,0), (0,1): the square lattice ℤ²."""
    return VoltageGraph.from_geometric(
        ["o"], [("a", "o", "o", (1, 0)), ("b", "o", "o", (0, 1))], rank=2
    )


def line() -> VoltageGraph:
    """One loop with voltage (1): the cover is the bi-infinite path."""
    return VoltageGraph.from_geometric(["o"], [("a", "o", "o", (1,))], rank=1)


def rail() -> VoltageGraph:
    """Two vertices, edges of voltage (1) and (0); the cover is again a bi-infinite path."""
    return VoltageGraph.from_geometric(
        ["x", "y"], [("e", "x", "y", (1,)), ("f", "x", "y", (0,))], rank=1
    )


def ladder() -> VoltageGraph:
    """The infinite ladder: two rails (loops of voltage 1) joined by rungs."""
    return VoltageGraph.from_geometric(
        ["x", "y"],
        [("r", "x", "x", (1,)), ("s", "y", "y", (1,)), ("h", "x", "y", (0,))],
        rank=1,
    )


def honeycomb() -> VoltageGraph:
    """Two vertices, three edges with voltages 0, (1,0), (0,1): the hexagonal lattice."""
    return VoltageGraph.from_geometric(
        ["x", "y"],
        [("p", "x", "y", (0, 0)), ("q", "x", "y", (1, 0)), ("r", "x", "y", (0, 1))],
        rank=2,
    )


FINITE_CORPUS = {
    "edge": single_edge,
    "path": path,
    "star": star,
    "triangle": triangle,
    "K4": complete,
    "bouquet": bouquet,
    "theta": theta,
}

PERIODIC_CORPUS = {
    "grid": grid,
    "line": line,
    "rail": rail,
    "ladder": ladder,
    "honeycomb": honeycomb,
}


def _connected(vertices: list[str], pairs: list[tuple[str, str]]) -> bool:
    adj: dict[str, set[str]] = {v: set() for v in vertices}
    for a, b in pairs:
        adj[a].add(b)
        adj[b].add(a)
    seen = {vertices[0]}
    stack = [vertices[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


def random_graph(
    rng: random.Random, max_vertices: int = 8, max_degree: int = 5, min_vertices: int = 1
) -> SerreGraph:
    """Connected multigraph from the uniform pairing (configuration) model.

    A degree sequence is drawn, half-edges are matched uniformly, and the
    result is rejected until connected.  Loops and parallel edges are kept;
    they never force an inversion because both orientations stay distinct.
    """
    while True:
        n = rng.randint(min_vertices, max_vertices)
        degrees = [rng.randint(1, max_degree) for _ in range(n)]
        if sum(degrees) % 2:
            i = rng.randrange(n)
            degrees[i] += 1 if degrees[i] < max_degree else -1
        if sum(degrees) == 0 or sum(degrees) % 2:
            continue
        vertices = [f"v{i}" for i in range(n)]
        stubs = [vertices[i] for i, d in enumerate(degrees) for _ in range(d)]
        rng.shuffle(stubs)
        pairs = [(stubs[2 * k], stubs[2 * k + 1]) for k in range(len(stubs) // 2)]
        if not pairs or not _connected(vertices, pairs):
            continue
        return SerreGraph.from_geometric(
            vertices, [(f"e{k}", a, b) for k, (a, b) in enumerate(pairs)]
        )


def random_voltage_graph(
    rng: random.Random, rank: int, max_vertices: int = 4, max_degree: int = 4, spread: int = 1
) -> VoltageGraph:
    """Random graph with voltages drawn uniformly from ``[-spread, spread]^rank``."""
    g = random_graph(rng, max_vertices=max_vertices, max_degree=max_degree)
    edges = []
    for eid in g.geometric_edges():
        e = g.edge(eid)
        edges.append((eid, e.origin, e.terminus, [rng.randint(-spread, spread) for _ in range(rank)]))
    return VoltageGraph.from_geometric(g.vertices, edges, rank)
