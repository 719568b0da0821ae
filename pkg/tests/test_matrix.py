from fractions import Fraction

import pytest

from iharazeta.errors import InputError
from iharazeta.group_ring import GroupRingElement as G
from iharazeta.matrix import SeriesMatrix, mat_log, mat_mul, mat_trace, power_traces, vn_trace
from iharazeta.series import TruncatedSeries as TS
from iharazeta.verify import random_unipotent_series


def test_identity_is_neutral(rng):
    a = random_unipotent_series(rng, 3, 0, 6)
    eye = SeriesMatrix.identity(3, 6)
    assert mat_mul(eye, a) == a
    assert mat_mul(a, eye) == a


def test_trace_of_identity():
    assert mat_trace(SeriesMatrix.identity(2, 4)) == TS.from_polynomial([2], 4)


def test_trace_of_diagonal_group_elements():
    a = G.monomial((1,))
    m = SeriesMatrix.from_polynomial([[[a, 0], [0, a ** -1]]], 3, rank=1)
    tr = mat_trace(m)
    assert tr[0] == a + a ** -1
    assert vn_trace(m) == TS.zero(3)


def test_entries_roundtrip(rng):
    a = random_unipotent_series(rng, 2, 2, 5)
    assert SeriesMatrix.from_entries(a.entries) == a


def test_product_agrees_with_entrywise_series_products(rng):
    a = random_unipotent_series(rng, 3, 2, 4)
    b = random_unipotent_series(rng, 3, 2, 4)
    p = mat_mul(a, b)
    for i in range(3):
        for j in range(3):
            expected = sum((a.entry(i, k) * b.entry(k, j) for k in range(3)), TS.zero(4, 2))
            assert p.entry(i, j) == expected


def test_size_mismatch():
    with pytest.raises(InputError):
        mat_mul(SeriesMatrix.identity(2, 3), SeriesMatrix.identity(3, 3))


def test_ring_mismatch():
    with pytest.raises(InputError):
        mat_mul(SeriesMatrix.identity(2, 3, rank=0), SeriesMatrix.identity(2, 3, rank=2))


def test_power_traces_match_direct_powers(rng):
    a = random_unipotent_series(rng, 3, 2, 7)
    s = SeriesMatrix.identity(3, 7, 2) - a
    direct, p = [], s
    for _ in range(7):
        direct.append(mat_trace(p))
        p = mat_mul(p, s)
    assert power_traces(s, 7) == direct


def test_matrix_log_of_scalar_matrix():
    c = TS.from_polynomial([1, -2, Fraction(1, 3)], 6)
    m = SeriesMatrix.scalar(c, 2)
    assert mat_log(m) == SeriesMatrix.scalar(c.log(), 2)


def test_matrix_log_trace_matches_log_det_route(rng):
    from iharazeta.determinant import log_det_vn

    a = random_unipotent_series(rng, 3, 2, 6)
    assert vn_trace(mat_log(a)) == log_det_vn(a)
