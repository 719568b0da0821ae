"""Primitive loop counts: recovery from ``Log Z``, brute force, and the grid closed form.

With ``Z(u) = prod_l (1 - u^l)^N(l)`` the coefficient of ``u^m`` in
``-Log Z`` is ``sum_{l|m} l N(l) / m``, which is inverted degree by degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Mapping

from .errors import InvariantError
from .graph import SerreGraph, VoltageGraph, as_voltage_graph, iter_closed_nb_walks, smallest_period
from .series import TruncatedSeries


@dataclass(frozen=True)
class LoopCountTable:
    """``counts[l] = N(l)`` for ``1 <= l <= max_length``."""

    counts: Mapping[int, Fraction]
    max_length: int
    flagged: tuple[int, ...] = field(default=())

    @classmethod
    def from_mapping(cls, counts: Mapping[int, object], max_length: int | None = None) -> LoopCountTable:
        top = max_length if max_length is not None else max(counts, default=0)
        full = {l: Fraction(counts.get(l, 0)) for l in range(1, top + 1)}
        return cls(full, top, _suspicious(full))

    def __getitem__(self, length: int) -> Fraction:
        return self.counts.get(length, Fraction(0))

    def restrict(self, max_length: int) -> LoopCountTable:
        return LoopCountTable.from_mapping(
            {l: c for l, c in self.counts.items() if l <= max_length}, max_length
        )

    def nonzero(self) -> dict[int, Fraction]:
        return {l: c for l, c in self.counts.items() if c}

    def to_csv(self) -> str:
        rows = ["length,count"] + [f"{l},{self.counts[l]}" for l in sorted(self.counts)]
        return "\n".join(rows) + "\n"


def _suspicious(counts: Mapping[int, Fraction]) -> tuple[int, ...]:
    return tuple(l for l, c in sorted(counts.items()) if c < 0 or c.denominator != 1)


def invert_log_zeta(f: TruncatedSeries) -> LoopCountTable:
    """Recover ``N(1..order)`` from ``Log Z``.

    Negative or non-integer counts are kept and listed in ``flagged``; they
    mean the input was not the log of a loop product with integer exponents.
    """
    if f.rank != 0 or f.coeffs[0]:
        raise ValueError("expected a series over ℚ with zero constant term")
    weighted: dict[int, Fraction] = {}  # l * N(l)
    counts: dict[int, Fraction] = {}
    for m in range(1, f.order + 1):
        c_m = -m * Fraction(f.coeffs[m])
        rest = sum((weighted[l] for l in range(1, m) if m % l == 0), Fraction(0))
        weighted[m] = c_m - rest
        counts[m] = weighted[m] / m
    return LoopCountTable(counts, f.order, _suspicious(counts))


def roundtrip(table: LoopCountTable, order: int) -> TruncatedSeries:
    """``sum_l N(l) Log(1 - u^l)`` truncated at ``order``."""
    out = [Fraction(0)] * (order + 1)
    for l, n in table.counts.items():
        if not n or l > order:
            continue
        for k in range(1, order // l + 1):
            out[l * k] -= n / k
    return TruncatedSeries(out, 0)


def primitive_based_walks(vg: SerreGraph | VoltageGraph, length: int) -> int:
    """Based cyclically reduced zero-voltage closed walks of the given length that are not proper powers."""
    return sum(
        1
        for w in iter_closed_nb_walks(vg, length, zero_voltage_only=True)
        if smallest_period(w) == length
    )


def oracle_count(vg: SerreGraph | VoltageGraph, length: int) -> int:
    """Translation classes of primitive loops of the given length, by enumeration.

    The deck group is torsion free, so every class has exactly ``length``
    based representatives.
    """
    vg = as_voltage_graph(vg)
    total = primitive_based_walks(vg, length)
    q, r = divmod(total, length)
    if r:
        raise InvariantError(f"{total} primitive based walks of length {length} is not a multiple of {length}")
    return q


def oracle_table(vg: SerreGraph | VoltageGraph, max_length: int) -> LoopCountTable:
    return LoopCountTable.from_mapping(
        {l: oracle_count(vg, l) for l in range(1, max_length + 1)}, max_length
    )


def grid_neglog_coefficient(M: int) -> Fraction:
    """Coefficient of ``u^(2M)`` in ``-Log Z`` for the square lattice, from the closed form."""
    if M < 1:
        raise ValueError("M must be positive")
    total = Fraction(1, M)
    for d in range(M + 1):
        total += Fraction((-3) ** (M - d), M + d) * comb(M + d, M - d) * comb(2 * d, d) ** 2
    return total


def grid_log_zeta_closed_form(order: int) -> TruncatedSeries:
    """``Log Z`` of the square lattice assembled from :func:`grid_neglog_coefficient`."""
    out = [Fraction(0)] * (order + 1)
    for M in range(1, order // 2 + 1):
        out[2 * M] = -grid_neglog_coefficient(M)
    return TruncatedSeries(out, 0)
