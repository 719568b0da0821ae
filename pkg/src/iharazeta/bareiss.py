"""Fraction-free (Bareiss) determinants of matrices with polynomial entries.

Polynomials in ``u`` are coefficient lists ``[c_0, c_1, ...]`` over ℚ.  This
is the classical-determinant oracle used to cross-check the series route;
it shares no code with the log/trace/exp pipeline.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import InputError, InvariantError

Poly = list  # list[Fraction], trailing zeros stripped; [] is the zero polynomial


def _strip(p: Poly) -> Poly:
    while p and not p[-1]:
        p.pop()
    return p


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _strip(out)


def poly_sub(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _strip([Fraction(x) for x in out])


def poly_exact_div(a: Poly, b: Poly) -> Poly:
    """Quotient ``a / b``; raises if the division leaves a remainder."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    for shift in range(len(a) - len(b), -1, -1):
        c = rem[shift + len(b) - 1] / lead
        q[shift] = c
        if c:
            for j, y in enumerate(b):
                rem[shift + j] -= c * y
    if any(rem):
        raise InvariantError("Bareiss step produced a nonzero remainder")
    return _strip(q)


def bareiss_det(entries: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant of a square matrix of polynomials by fraction-free elimination."""
    n = len(entries)
    if any(len(r) != n for r in entries):
        raise InputError("matrix must be square")
    if n == 0:
        return [Fraction(1)]
    m = [[_strip([Fraction(x) for x in p]) for p in row] for row in entries]
    sign = 1
    prev: Poly = [Fraction(1)]
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return []
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = poly_sub(poly_mul(m[i][j], pivot), poly_mul(m[i][k], m[k][j]))
                m[i][j] = poly_exact_div(num, prev)
        prev = pivot
    det = m[n - 1][n - 1]
    return [c * sign for c in det]


def polynomial_entries(blocks: Sequence, size: int) -> list[list[Poly]]:
    """Turn coefficient matrices ``[A_0, A_1, ...]`` (None = zero) into a matrix of polynomials."""
    return [
        [_strip([Fraction(0) if b is None else Fraction(b[i][j]) for b in blocks]) for j in range(size)]
        for i in range(size)
    ]
