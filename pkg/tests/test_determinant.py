import math
import random
from fractions import Fraction

import pytest
import sympy

from iharazeta.bareiss import bareiss_det, polynomial_entries
from iharazeta.determinant import (
    binomial_factor,
    det_vn,
    eval_series,
    log_det_tail_bound,
    log_det_vn,
)
from iharazeta.errors import InputError
from iharazeta.group_ring import GroupRingElement as G
from iharazeta.matrix import SeriesMatrix
from iharazeta.series import TruncatedSeries as TS
from iharazeta.verify import (
    block_upper,
    embed_constant,
    random_invertible,
    random_unipotent_series,
    random_unit_series,
)

ORDER = 8


def test_scalar_matrix_example():
    m = SeriesMatrix.scalar(TS.from_polynomial([1, -2], 3), 3)
    assert det_vn(m) == TS([1, -6, 12, -8])


def test_identity_has_determinant_one():
    assert det_vn(SeriesMatrix.identity(4, 5)) == TS.one(5)


def test_grid_laplacian_log_det_u2_coefficient():
    a, b = G.monomial((1, 0)), G.monomial((0, 1))
    s = a + a ** -1 + b + b ** -1
    delta = SeriesMatrix.from_polynomial([[[1]], [[-s]], [[3]]], 4, rank=2)
    # independent route: scalar log over the group ring, then the group trace
    scalar = TS.from_polynomial([1, -s, 3], 4, rank=2)
    assert log_det_vn(delta) == scalar.log().trace()
    assert log_det_vn(delta)[2] == 1


def test_requires_identity_constant_term():
    with pytest.raises(InputError):
        det_vn(SeriesMatrix.scalar(TS.from_polynomial([2, 1], 3), 2))


def test_binomial_factor_examples():
    assert binomial_factor(1, 6) == TS.from_polynomial([1, 0, -1], 6)
    assert binomial_factor(-1, 6) == TS([1, 0, 1, 0, 1, 0, 1])
    half = binomial_factor(Fraction(1, 2), 8)
    assert half[:5] == (1, 0, Fraction(-1, 2), 0, Fraction(-1, 8))


@pytest.mark.parametrize("s", [Fraction(1, 2), Fraction(-3, 2), Fraction(2, 3), 3, -2])
def test_binomial_factor_matches_generalized_binomials(s):
    # (1 - u^2)^s = sum_k binom(s, k) (-1)^k u^(2k), with binom(s, k) = s(s-1)...(s-k+1)/k!
    s = Fraction(s)
    order = 12
    expected = [Fraction(0)] * (order + 1)
    for k in range(order // 2 + 1):
        c = Fraction(1)
        for i in range(k):
            c *= (s - i) / (i + 1)
        expected[2 * k] = c * (-1) ** k
    assert binomial_factor(s, order) == TS(expected)


def test_eval_examples():
    assert eval_series(TS([1, -1]), 0.5, 1.0).value == pytest.approx(0.5)
    order = 15
    f = TS.from_polynomial([1, -1], order).log()
    val = eval_series(f, 0.1, 1.0)
    tail = sum(0.1 ** k / k for k in range(order + 1, 200))
    assert abs(val.value - math.log(0.9)) <= tail + 1e-15
    assert val.value.real == pytest.approx(-0.10536, abs=1e-5)
    assert not val.outside_radius


def test_eval_outside_radius_sets_flag_only():
    f = TS([1, 2, 3])
    inside, outside = eval_series(f, 0.4, 2.0), eval_series(f, 0.5, 2.0)
    assert outside.outside_radius and not inside.outside_radius
    assert outside.value == 1 + 2 * 0.5 + 3 * 0.25


def test_tail_bound_controls_log_det_partial_sums():
    t = ((0, 1, 0), (0, 0, 1), (1, 1, 0))
    pencil = SeriesMatrix.from_polynomial([[[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[-x for x in r] for r in t]], 40)
    f = log_det_vn(pencil)
    lhs = eval_series(f.truncate(20), 0.1, 2).value
    rhs = eval_series(f, 0.1, 2).value
    assert abs(lhs - rhs) <= log_det_tail_bound(2, 0.1, 20, 3)
    # modulus of Det at u0 equals the classical |det(I - u0 T)| for a finite matrix
    classical = float((sympy.eye(3) - sympy.Rational(1, 10) * sympy.Matrix(t)).det())
    assert abs(eval_series(det_vn(pencil), 0.1, 2).value) == pytest.approx(abs(classical), rel=1e-12)


# determinant axioms, checked exactly ------------------------------------------

CASES = [(rank, size, seed) for rank in (0, 2) for size in (1, 2, 3) for seed in range(3)]


@pytest.mark.parametrize("rank,size,seed", CASES)
def test_multiplicativity(rank, size, seed):
    rng = random.Random(seed * 100 + size * 10 + rank)
    a = random_unipotent_series(rng, size, rank, ORDER)
    b = random_unipotent_series(rng, size, rank, ORDER)
    assert det_vn(a * b) == det_vn(a) * det_vn(b)


@pytest.mark.parametrize("rank,size,seed", CASES)
def test_conjugation_invariance(rank, size, seed):
    rng = random.Random(seed * 100 + size * 10 + rank + 7)
    a = random_unipotent_series(rng, size, rank, ORDER)
    p, p_inv = random_invertible(rng, size)
    conj = embed_constant(p, ORDER, rank) * a * embed_constant(p_inv, ORDER, rank)
    assert det_vn(conj) == det_vn(a)


@pytest.mark.parametrize("rank,size,seed", CASES)
def test_scalar_rule(rank, size, seed):
    rng = random.Random(seed)
    c = random_unit_series(rng, ORDER)
    m = SeriesMatrix.scalar(c.map(lambda x: x, rank=rank), size)
    assert det_vn(m) == c ** size


@pytest.mark.parametrize("rank,size,seed", CASES)
def test_block_triangular(rank, size, seed):
    rng = random.Random(seed + 31 * size)
    big = size + 1
    split = rng.randint(1, size)
    m = block_upper(rng, big, split, rank, ORDER)
    assert det_vn(m) == det_vn(m.submatrix(range(split))) * det_vn(m.submatrix(range(split, big)))


@pytest.mark.parametrize("seed", range(6))
def test_rank_zero_matches_classical_determinant(seed):
    rng = random.Random(seed)
    size = 1 + seed % 3
    a = random_unipotent_series(rng, size, 0, 2)
    degree = 2 * size
    full = SeriesMatrix.from_polynomial([a.block(k) for k in range(3)], degree)
    poly = bareiss_det(polynomial_entries(full.blocks, size))
    assert det_vn(full) == TS.from_polynomial(poly, degree)
