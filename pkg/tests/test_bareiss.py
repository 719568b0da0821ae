import random
from fractions import Fraction

import pytest
import sympy

from iharazeta.bareiss import bareiss_det, poly_exact_div
from iharazeta.errors import InvariantError

u = sympy.symbols("u")


def sympy_det(entries):
    n = len(entries)
    m = sympy.Matrix(n, n, lambda i, j: sum(c * u**k for k, c in enumerate(entries[i][j])))
    det = sympy.Poly(sympy.expand(m.det()), u)
    if det.is_zero:
        return []
    return [Fraction(int(c.p), int(c.q)) for c in reversed(det.all_coeffs())]


@pytest.mark.parametrize("seed", range(25))
def test_matches_sympy(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 5)
    entries = [[[Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(rng.randint(0, 3))]
                for _ in range(n)] for _ in range(n)]
    assert bareiss_det(entries) == sympy_det(entries)


def test_needs_pivoting():
    # zero in the top-left corner forces a row swap
    assert bareiss_det([[[], [1]], [[1], []]]) == [-1]
    assert bareiss_det([[[0, 1], [1]], [[1], [0, 1]]]) == [-1, 0, 1]


def test_singular():
    assert bareiss_det([[[1], [2]], [[2], [4]]]) == []


def test_inexact_division_is_an_invariant_breach():
    with pytest.raises(InvariantError):
        poly_exact_div([1, 0, 1], [1, 1])
