"""Zeta functions of ℤ^d-periodic graphs given as voltage graphs.

Operators on the cover are matrices over the group ring ℚ[ℤ^d]: an edge
``e`` contributes the group element ``t^voltage(e)``.  Their formal
determinants use the group trace, which counts closed walks in the cover
up to translation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .determinant import binomial_factor, det_vn, log_det_vn
from .errors import InputError
from .finite import assemble_operators, edge_pencil, vertex_pencil
from .graph import VoltageGraph
from .group_ring import ring_monomial, ring_trace
from .matrix import Matrix, SeriesMatrix, cmat_mul, cmat_trace
from .series import TruncatedSeries, series_log


@dataclass(frozen=True)
class PeriodicOperators:
    T: Matrix
    delta: Matrix
    Q: Matrix
    chi2: Fraction
    rank: int


def build_periodic(vg: VoltageGraph) -> PeriodicOperators:
    """Operators over ℚ[ℤ^d]; in rank 0 they coincide with the finite ones."""
    vg.check()
    volt = vg.voltage
    t, delta, q = assemble_operators(vg.base, lambda e: ring_monomial(volt[e]), vg.rank)
    return PeriodicOperators(t, delta, q, Fraction(vg.base.euler_characteristic()), vg.rank)


def laplacian_pencil(vg: VoltageGraph, order: int) -> SeriesMatrix:
    ops = build_periodic(vg)
    return vertex_pencil(ops.delta, ops.Q, order, ops.rank)


def log_zeta(vg: VoltageGraph, order: int) -> TruncatedSeries:
    """``Log Z = -chi2 Log(1 - u^2) + Tr Log Δ(u)`` over ℚ."""
    if order < 1:
        raise InputError("order must be at least 1")
    ops = build_periodic(vg)
    base = series_log(TruncatedSeries.from_polynomial([1, 0, -1], order))
    return base * (-ops.chi2) + log_det_vn(vertex_pencil(ops.delta, ops.Q, order, ops.rank))


def zeta(vg: VoltageGraph, order: int) -> TruncatedSeries:
    return log_zeta(vg, order).exp()


def tr_T_power(vg: VoltageGraph, n: int) -> Fraction:
    """Group trace of ``trace(T^n)``: zero-voltage closed non-backtracking walks."""
    if n < 1:
        raise InputError("power must be at least 1")
    ops = build_periodic(vg)
    power = ops.T
    for _ in range(n - 1):
        power = cmat_mul(power, ops.T, ops.rank)
    return ring_trace(cmat_trace(power, ops.rank))


@dataclass(frozen=True)
class BassHashimotoReport:
    equal: bool
    first_mismatch: int | None
    edge_side: TruncatedSeries
    vertex_side: TruncatedSeries
    order: int

    @property
    def verdict(self) -> str:
        return "equal" if self.equal else f"mismatch at u^{self.first_mismatch}"


def bass_hashimoto_check(vg: VoltageGraph, order: int) -> BassHashimotoReport:
    """Compare ``Det(I - T u)`` with ``(1 - u^2)^(-chi2) Det(Δ(u))`` coefficient by coefficient."""
    if order < 1:
        raise InputError("order must be at least 1")
    ops = build_periodic(vg)
    lhs = det_vn(edge_pencil(ops.T, order, ops.rank))
    rhs = binomial_factor(-ops.chi2, order) * det_vn(
        vertex_pencil(ops.delta, ops.Q, order, ops.rank)
    )
    k = lhs.first_mismatch(rhs)
    return BassHashimotoReport(k is None, k, lhs, rhs, order)
