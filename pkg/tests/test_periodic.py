import random
from fractions import Fraction

import pytest

from iharazeta import corpus
from iharazeta.errors import InputError
from iharazeta.finite import build_operators
from iharazeta.graph import VoltageGraph, closed_nb_walks
from iharazeta.group_ring import GroupRingElement as G
from iharazeta.periodic import bass_hashimoto_check, build_periodic, log_zeta, tr_T_power
from iharazeta.series import TruncatedSeries as TS

from conftest import relabel

a, b = G.monomial((1, 0)), G.monomial((0, 1))


def test_grid_operators():
    ops = build_periodic(corpus.grid())
    assert ops.delta == ((a + a ** -1 + b + b ** -1,),)
    assert ops.Q == ((G(2, {(0, 0): 3}),),)
    assert ops.chi2 == -1


def test_rank_zero_matches_finite_operators(finite_graph):
    ops = build_periodic(VoltageGraph.trivial(finite_graph))
    fin = build_operators(finite_graph)
    assert (ops.T, ops.delta, ops.Q, ops.chi2) == (fin.T, fin.delta, fin.Q, fin.chi)


def test_rail_operators():
    t = G.monomial((1,))
    ops = build_periodic(corpus.rail())
    assert ops.delta == ((0, t + 1), (t ** -1 + 1, 0))


def test_delta_self_adjoint(periodic_graph):
    d = build_periodic(periodic_graph).delta
    for i in range(len(d)):
        for j in range(len(d)):
            x = d[j][i]
            assert d[i][j] == (x.star() if isinstance(x, G) else x)


def test_augmentation_recovers_base_graph(periodic_graph):
    ops = build_periodic(periodic_graph)
    fin = build_operators(periodic_graph.base)
    aug = lambda m: tuple(tuple(x.augmentation() if isinstance(x, G) else x for x in r) for r in m)
    assert aug(ops.T) == fin.T
    assert aug(ops.delta) == fin.delta


def test_antisymmetry_violation_rejected():
    vg = corpus.grid()
    with pytest.raises(InputError):
        build_periodic(VoltageGraph(vg.base, 2, {**vg.voltage, "b~": (0, 1)}))


def test_grid_log_zeta_low_coefficients():
    f = log_zeta(corpus.grid(), 6)
    assert f[2] == 0
    assert f[4] == -2


def test_rank_zero_triangle_log_zeta():
    expected = (TS.from_polynomial([1, 0, 0, -1], 9) ** 2).log()
    assert log_zeta(VoltageGraph.trivial(corpus.triangle()), 9) == expected


def test_tr_T_power_examples():
    assert tr_T_power(corpus.grid(), 2) == 0
    assert tr_T_power(corpus.grid(), 4) == 8
    tree = VoltageGraph.trivial(corpus.path(4))
    assert all(tr_T_power(tree, n) == 0 for n in range(1, 6))


@pytest.mark.parametrize("n", range(1, 9))
def test_trace_lemma(periodic_graph, n):
    assert tr_T_power(periodic_graph, n) == closed_nb_walks(periodic_graph, n, zero_voltage_only=True)


@pytest.mark.parametrize("seed", range(6))
def test_trace_lemma_random(seed):
    rng = random.Random(seed)
    vg = corpus.random_voltage_graph(rng, 1 + seed % 2, max_vertices=3, max_degree=3)
    for n in range(1, 8):
        assert tr_T_power(vg, n) == closed_nb_walks(vg, n, zero_voltage_only=True)


@pytest.mark.parametrize("vg,order", [(corpus.grid(), 12), (corpus.ladder(), 10), (corpus.honeycomb(), 10)])
def test_bass_hashimoto_periodic(vg, order):
    report = bass_hashimoto_check(vg, order)
    assert report.equal and report.verdict == "equal"


def test_bass_hashimoto_k4():
    assert bass_hashimoto_check(VoltageGraph.trivial(corpus.complete(4)), 12).equal


@pytest.mark.parametrize("seed", range(4))
def test_bass_hashimoto_random_voltages(seed):
    vg = corpus.random_voltage_graph(random.Random(seed), 2, max_vertices=3, max_degree=4)
    assert bass_hashimoto_check(vg, 8).equal


def test_log_zeta_invariant_under_basis_change_and_coboundaries(periodic_graph):
    vg = periodic_graph
    ref = log_zeta(vg, 10)
    mats = {1: [[[-1]]], 2: [[[1, 1], [0, 1]], [[0, 1], [-1, 0]]]}
    for m in mats.get(vg.rank, []):
        assert log_zeta(vg.transform(m), 10) == ref
    potential = {v: tuple((i + 1) * (j - 1) for j in range(vg.rank)) for i, v in enumerate(vg.base.vertices)}
    assert log_zeta(vg.shift_by_coboundary(potential), 10) == ref
    assert log_zeta(relabel(vg), 10) == ref


def test_log_zeta_is_exact_rational(periodic_graph):
    f = log_zeta(periodic_graph, 12)
    assert all(isinstance(c, Fraction) for c in f.coeffs)


def test_line_has_trivial_zeta():
    assert log_zeta(corpus.line(), 12) == TS.zero(12)
