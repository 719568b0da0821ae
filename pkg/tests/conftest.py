import itertools
import random

import pytest

from iharazeta import corpus
from iharazeta.graph import VoltageGraph, as_voltage_graph


def brute_closed_walks(vg, n, zero_voltage_only=False):
    """All based cyclically reduced closed walks, by filtering every edge sequence of length n."""
    vg = as_voltage_graph(vg)
    g = vg.base
    ids = [e.id for e in g.edges]
    found = []
    for seq in itertools.product(ids, repeat=n):
        ok = True
        for i in range(n):
            a, b = seq[i], seq[(i + 1) % n]
            if g.terminus(a) != g.origin(b) or b == g.reverse(a):
                ok = False
                break
        if not ok:
            continue
        if zero_voltage_only:
            total = [sum(vg.voltage[e][j] for e in seq) for j in range(vg.rank)]
            if any(total):
                continue
        found.append(seq)
    return found


def brute_cyclic_classes(vg, n):
    """Primitive zero-voltage closed walks of length n up to rotation, via canonical rotations."""
    classes = set()
    for seq in brute_closed_walks(vg, n, zero_voltage_only=True):
        rotations = {seq[i:] + seq[:i] for i in range(n)}
        if len(rotations) == n:
            classes.add(min(rotations))
    return len(classes)


@pytest.fixture
def rng():
    return random.Random(20261015)


@pytest.fixture(params=sorted(corpus.FINITE_CORPUS))
def finite_graph(request):
    return corpus.FINITE_CORPUS[request.param]()


@pytest.fixture(params=sorted(corpus.PERIODIC_CORPUS))
def periodic_graph(request):
    return corpus.PERIODIC_CORPUS[request.param]()


def relabel(vg: VoltageGraph, prefix="z") -> VoltageGraph:
    """Same voltage graph with fresh vertex/edge names and reversed geometric-edge order."""
    g = vg.base
    vmap = {v: f"{prefix}{i}" for i, v in enumerate(reversed(g.vertices))}
    edges = []
    for k, eid in enumerate(reversed(g.geometric_edges())):
        e = g.edge(eid)
        edges.append((f"{prefix}e{k}", vmap[e.origin], vmap[e.terminus], vg.voltage[eid]))
    return VoltageGraph.from_geometric([vmap[v] for v in reversed(g.vertices)], edges, vg.rank)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
