"""Formal von Neumann determinant ``Det = Exp ∘ Tr ∘ Log`` on matrix power series."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import math

from .errors import InputError
from .matrix import Matrix, SeriesMatrix, power_traces, row_sum_norm
from .series import TruncatedSeries, series_exp, series_log


def log_det_vn(a: SeriesMatrix) -> TruncatedSeries:
    """``Tr Log A`` over ℚ, where Tr is the matrix trace composed with the group trace.

    With ``S = Id - A`` this is ``-sum_m Tr(S^m) / m``.
    """
    if not a.has_identity_constant():
        raise InputError("determinant needs a matrix series with identity constant term")
    n = a.order
    s = SeriesMatrix.identity(a.size, n, a.rank) - a
    out = [Fraction(0)] * (n + 1)
    for m, tr in enumerate(power_traces(s, n), start=1):
        for k in range(m, n + 1):
            c = tr.coeffs[k]
            if c:
                out[k] -= _group_trace(c) / m
    return TruncatedSeries(out, 0)


def _group_trace(c) -> Fraction:
    return c if isinstance(c, Fraction) else c.trace()


def det_vn(a: SeriesMatrix) -> TruncatedSeries:
    """The formal determinant of ``A``; a series over ℚ with constant term 1."""
    return series_exp(log_det_vn(a))


def binomial_factor(s, order: int) -> TruncatedSeries:
    """``(1 - u^2)^s`` through the principal branch, ``Exp(s Log(1 - u^2))``."""
    base = TruncatedSeries.from_polynomial([1, 0, -1], order)
    return series_exp(series_log(base) * Fraction(s))


def operator_norm_bound(m: Matrix) -> Fraction:
    """Row-sum estimate of the operator norm of a constant matrix over ℚ or ℚ[ℤ^d]."""
    return row_sum_norm(m)


@dataclass(frozen=True)
class SeriesValue:
    value: complex
    outside_radius: bool
    radius: float


def eval_series(f: TruncatedSeries, u0: complex, bound: float) -> SeriesValue:
    """Partial sum ``sum_k c_k u0^k`` in floating point.

    ``outside_radius`` is set when ``|u0| >= 1/bound``, where absolute
    convergence is no longer guaranteed; the arithmetic is the same either way.
    """
    if f.rank != 0:
        raise InputError("only series over ℚ can be evaluated")
    radius = math.inf if bound <= 0 else 1.0 / float(bound)
    u0 = complex(u0)
    acc = 0j
    for c in reversed(f.coeffs):
        acc = acc * u0 + float(c)
    return SeriesValue(acc, abs(u0) >= radius, radius)


def log_det_tail_bound(norm: float, abs_u: float, order: int, dim: float) -> float:
    """Bound on ``|sum_{k>order} Tr(T^k) u^k / k|`` using ``|Tr T^k| <= dim * norm^k``."""
    r = float(norm) * abs_u
    if r >= 1:
        return math.inf
    return dim * r ** (order + 1) / ((order + 1) * (1 - r))
