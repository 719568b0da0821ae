import random
from fractions import Fraction

import pytest

from iharazeta import corpus
from iharazeta.bareiss import bareiss_det, polynomial_entries
from iharazeta.errors import InputError
from iharazeta.finite import (
    build_operators,
    edge_pencil,
    reciprocal,
    weighted_chi,
    zeta_via_ihara,
    zeta_via_T,
)
from iharazeta.graph import closed_nb_walks
from iharazeta.matrix import cmat_mul, constant_trace
from iharazeta.series import TruncatedSeries as TS

from conftest import brute_cyclic_classes


def test_single_edge_operator_is_zero():
    ops = build_operators(corpus.single_edge())
    assert ops.T == ((0, 0), (0, 0))
    assert ops.chi == 1


def test_triangle_operator_is_a_permutation():
    ops = build_operators(corpus.triangle())
    assert len(ops.T) == 6
    assert all(sum(row) == 1 for row in ops.T)
    assert all(sum(col) == 1 for col in zip(*ops.T))


def test_k4_operators():
    ops = build_operators(corpus.complete(4))
    assert len(ops.T) == 12
    assert all(sum(row) == 2 for row in ops.T)
    assert ops.Q == tuple(tuple(2 if i == j else 0 for j in range(4)) for i in range(4))
    assert all(sum(row) == 3 for row in ops.delta)
    assert ops.chi == -2


def test_invalid_graph_rejected():
    g = corpus.single_edge()
    from iharazeta.graph import SerreGraph

    broken = SerreGraph(g.vertices + ("z",), g.edges, g.involution)
    with pytest.raises(InputError):
        build_operators(broken)


def test_tree_zeta_is_one():
    for g in (corpus.path(5), corpus.star(3), corpus.single_edge()):
        assert zeta_via_T(g, 8) == TS.one(8)
        assert zeta_via_ihara(g, 8) == TS.one(8)


def test_triangle_zeta():
    expected = TS([1, 0, 0, -2, 0, 0, 1])
    assert zeta_via_T(corpus.triangle(), 6) == expected
    assert zeta_via_ihara(corpus.triangle(), 6) == expected


def test_k4_zeta_matches_classical_determinant():
    ops = build_operators(corpus.complete(4))
    pencil = edge_pencil(ops.T, 12)
    classical = bareiss_det(polynomial_entries(pencil.blocks, 12))
    z = zeta_via_T(corpus.complete(4), 12)
    assert z == TS.from_polynomial(classical, 12)
    assert zeta_via_ihara(corpus.complete(4), 12) == z


def test_weighted_chi_examples():
    k4 = corpus.complete(4)
    assert weighted_chi({v: 1 for v in k4.vertices}, {e: 1 for e in k4.geometric_edges()}) == -2
    assert weighted_chi({"o": 1}, {"a": 1, "b": 1}) == -1
    assert weighted_chi({"o": 2}, {"a": 1}) == Fraction(-1, 2)
    with pytest.raises(InputError):
        weighted_chi({"o": 0}, {})


@pytest.mark.parametrize("seed", range(20))
def test_ihara_identity_on_random_graphs(seed):
    g = corpus.random_graph(random.Random(seed))
    n = g.num_oriented_edges
    assert zeta_via_T(g, n) == zeta_via_ihara(g, n)


def test_trace_identity(finite_graph):
    ops = build_operators(finite_graph)
    power = ops.T
    for n in range(1, 9):
        assert constant_trace(power) == closed_nb_walks(finite_graph, n)
        power = cmat_mul(power, ops.T, 0)


def test_product_formula(finite_graph):
    # -Log Z has coefficient c_n / n with c_n = sum_{l | n} l N(l), N from cyclic classes
    order = 7
    log_z = zeta_via_T(finite_graph, order).log()
    counts = {l: brute_cyclic_classes(finite_graph, l) for l in range(1, order + 1)}
    for n in range(1, order + 1):
        c_n = sum(l * counts[l] for l in counts if n % l == 0)
        assert -log_z[n] == Fraction(c_n, n)


def test_degree_bound(finite_graph):
    m = finite_graph.num_oriented_edges
    z = zeta_via_T(finite_graph, m + 6)
    assert all(c == 0 for c in z.coeffs[m + 1:])


def test_classical_convention_is_reciprocal():
    z = zeta_via_T(corpus.triangle(), 9)
    assert reciprocal(z) * z == TS.one(9)
    # (1 - u^3)^-2 = 1 + 2u^3 + 3u^6 + 4u^9
    assert reciprocal(z) == TS([1, 0, 0, 2, 0, 0, 3, 0, 0, 4])
