"""Square matrices of truncated power series.

A ``SeriesMatrix`` is stored as its expansion ``A = A_0 + A_1 u + ... + A_N u^N``
with constant coefficient matrices ``A_k``.  This is the same object as an
m×m array of series, but products become short convolutions of constant
matrices, and the many zero coefficients of operators such as ``I - T u``
are skipped outright.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import InputError
from .group_ring import (
    GroupRingElement,
    RingElement,
    coerce,
    ring_norm,
    ring_one,
    ring_trace,
    ring_zero,
)
from .series import TruncatedSeries

Matrix = tuple  # tuple of rows, each a tuple of ring elements


def constant_matrix(rows: Iterable[Iterable], rank: int) -> Matrix:
    """Normalize a nested sequence into an immutable square matrix over the ring of ``rank``."""
    out = tuple(tuple(coerce(x, rank) for x in row) for row in rows)
    if any(len(r) != len(out) for r in out):
        raise InputError("matrix must be square")
    return out


def _is_zero(m: Matrix) -> bool:
    return not any(x for row in m for x in row)


def cmat_mul(a: Matrix, b: Matrix, rank: int) -> Matrix:
    """Product of constant matrices, skipping zero entries."""
    zero = ring_zero(rank)
    n = len(b[0]) if b else 0
    b_nz = [[(j, x) for j, x in enumerate(row) if x] for row in b]
    out = []
    for row in a:
        acc = [zero] * n
        for k, x in enumerate(row):
            if x:
                for j, y in b_nz[k]:
                    acc[j] = acc[j] + x * y
        out.append(tuple(acc))
    return tuple(out)


def cmat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def cmat_scale(a: Matrix, c) -> Matrix:
    return tuple(tuple(x * c for x in row) for row in a)


def cmat_trace(a: Matrix, rank: int) -> RingElement:
    acc = ring_zero(rank)
    for i, row in enumerate(a):
        if row[i]:
            acc = acc + row[i]
    return acc


def cmat_trace_of_product(a: Matrix, b: Matrix, rank: int) -> RingElement:
    """``trace(a @ b)`` in O(m^2) without forming the product."""
    acc = ring_zero(rank)
    for i, row in enumerate(a):
        for k, x in enumerate(row):
            if x:
                y = b[k][i]
                if y:
                    acc = acc + x * y
    return acc


def cmat_identity(size: int, rank: int) -> Matrix:
    zero, one = ring_zero(rank), ring_one(rank)
    return tuple(tuple(one if i == j else zero for j in range(size)) for i in range(size))


def cmat_zero(size: int, rank: int) -> Matrix:
    zero = ring_zero(rank)
    return tuple((zero,) * size for _ in range(size))


class SeriesMatrix:
    """m×m matrix with entries in ``R[[u]] / u^(N+1)``, R = ℚ or ℚ[ℤ^d]."""

    __slots__ = ("size", "order", "rank", "blocks")

    def __init__(self, blocks: Sequence[Matrix | None], size: int, rank: int):
        # blocks[k] is the coefficient of u^k; None stands for the zero matrix
        self.size = size
        self.order = len(blocks) - 1
        self.rank = rank
        self.blocks = tuple(None if b is None or _is_zero(b) else b for b in blocks)

    @classmethod
    def from_polynomial(
        cls, matrices: Sequence, order: int, rank: int | None = None
    ) -> SeriesMatrix:
        """``sum_k matrices[k] u^k``, padded or truncated to ``order``."""
        if rank is None:
            rank = next(
                (x.rank for m in matrices if m is not None for r in m for x in r
                 if isinstance(x, GroupRingElement)),
                0,
            )
        size = None
        blocks = []
        for k in range(order + 1):
            m = matrices[k] if k < len(matrices) else None
            if m is None:
                blocks.append(None)
                continue
            m = constant_matrix(m, rank)
            if size is None:
                size = len(m)
            elif len(m) != size:
                raise InputError("all coefficient matrices must have the same size")
            blocks.append(m)
        if size is None:
            size = next((len(m) for m in matrices if m is not None), 0)
        return cls(blocks, size, rank)

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[TruncatedSeries]]) -> SeriesMatrix:
        size = len(entries)
        if any(len(r) != size for r in entries):
            raise InputError("matrix must be square")
        if size == 0:
            raise InputError("empty matrix")
        flat = [s for r in entries for s in r]
        rank, order = flat[0].rank, flat[0].order
        if any(s.rank != rank or s.order != order for s in flat):
            raise InputError("all entries must share ring and truncation order")
        blocks = [
            tuple(tuple(entries[i][j].coeffs[k] for j in range(size)) for i in range(size))
            for k in range(order + 1)
        ]
        return cls(blocks, size, rank)

    @classmethod
    def identity(cls, size: int, order: int, rank: int = 0) -> SeriesMatrix:
        return cls([cmat_identity(size, rank)] + [None] * order, size, rank)

    @classmethod
    def scalar(cls, c: TruncatedSeries, size: int) -> SeriesMatrix:
        """``c(u) * Id``."""
        eye = cmat_identity(size, c.rank)
        return cls([cmat_scale(eye, x) if x else None for x in c.coeffs], size, c.rank)

    def block(self, k: int) -> Matrix:
        b = self.blocks[k]
        return cmat_zero(self.size, self.rank) if b is None else b

    def entry(self, i: int, j: int) -> TruncatedSeries:
        zero = ring_zero(self.rank)
        return TruncatedSeries._raw(
            [zero if b is None else b[i][j] for b in self.blocks], self.rank
        )

    @property
    def entries(self) -> list[list[TruncatedSeries]]:
        return [[self.entry(i, j) for j in range(self.size)] for i in range(self.size)]

    def constant_term(self) -> Matrix:
        return self.block(0)

    def has_identity_constant(self) -> bool:
        return self.block(0) == cmat_identity(self.size, self.rank)

    def truncate(self, order: int) -> SeriesMatrix:
        if order > self.order:
            raise InputError(f"cannot extend order {self.order} to {order}")
        return SeriesMatrix(self.blocks[: order + 1], self.size, self.rank)

    def _check(self, other: SeriesMatrix) -> int:
        if other.size != self.size:
            raise InputError(f"size mismatch: {self.size} vs {other.size}")
        if other.rank != self.rank:
            raise InputError(f"ring mismatch: rank {self.rank} vs rank {other.rank}")
        return min(self.order, other.order)

    def __add__(self, other: SeriesMatrix) -> SeriesMatrix:
        if not isinstance(other, SeriesMatrix):
            return NotImplemented
        n = self._check(other)
        out = []
        for k in range(n + 1):
            a, b = self.blocks[k], other.blocks[k]
            out.append(b if a is None else a if b is None else cmat_add(a, b))
        return SeriesMatrix(out, self.size, self.rank)

    def __neg__(self) -> SeriesMatrix:
        return SeriesMatrix(
            [None if b is None else cmat_scale(b, -1) for b in self.blocks], self.size, self.rank
        )

    def __sub__(self, other: SeriesMatrix) -> SeriesMatrix:
        if not isinstance(other, SeriesMatrix):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SeriesMatrix):
            return mat_mul(self, other)
        if isinstance(other, (Rational, GroupRingElement)):
            c = coerce(other, self.rank)
            return SeriesMatrix(
                [None if b is None else cmat_scale(b, c) for b in self.blocks], self.size, self.rank
            )
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Rational, GroupRingElement)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, SeriesMatrix):
            return NotImplemented
        return (self.size, self.rank, self.blocks) == (other.size, other.rank, other.blocks)

    def __hash__(self):
        return hash((self.size, self.rank, self.blocks))

    def transpose(self) -> SeriesMatrix:
        return SeriesMatrix(
            [None if b is None else tuple(zip(*b)) for b in self.blocks], self.size, self.rank
        )

    def substitute_constant(self, fn) -> SeriesMatrix:
        """Apply a ring map entry-wise, e.g. augmentation to ℚ."""
        blocks = [None if b is None else tuple(tuple(fn(x) for x in r) for r in b) for b in self.blocks]
        rank = next((x.rank for b in blocks if b for r in b for x in r if isinstance(x, GroupRingElement)), 0)
        return SeriesMatrix(blocks, self.size, rank)

    def submatrix(self, indices: Sequence[int]) -> SeriesMatrix:
        """Principal submatrix on the given row/column indices."""
        blocks = [
            None if b is None else tuple(tuple(b[i][j] for j in indices) for i in indices)
            for b in self.blocks
        ]
        return SeriesMatrix(blocks, len(indices), self.rank)

    def __repr__(self):
        return f"SeriesMatrix(size={self.size}, order={self.order}, rank={self.rank})"


def mat_mul(a: SeriesMatrix, b: SeriesMatrix) -> SeriesMatrix:
    """Product truncated at the smaller order."""
    n = a._check(b)
    out: list[Matrix | None] = [None] * (n + 1)
    for i in range(n + 1):
        ai = a.blocks[i]
        if ai is None:
            continue
        for j in range(n + 1 - i):
            bj = b.blocks[j]
            if bj is None:
                continue
            p = cmat_mul(ai, bj, a.rank)
            out[i + j] = p if out[i + j] is None else cmat_add(out[i + j], p)
    return SeriesMatrix(out, a.size, a.rank)


def mat_trace(a: SeriesMatrix) -> TruncatedSeries:
    """Sum of diagonal entries, as a series over the coefficient ring."""
    zero = ring_zero(a.rank)
    return TruncatedSeries._raw(
        [zero if b is None else cmat_trace(b, a.rank) for b in a.blocks], a.rank
    )


def vn_trace(a: SeriesMatrix) -> TruncatedSeries:
    """Matrix trace followed by the group trace: a series over ℚ."""
    return mat_trace(a).trace()


def power_traces(s: SeriesMatrix, count: int) -> list[TruncatedSeries]:
    """``[mat_trace(s^m) for m in 1..count]``.

    Only powers up to ``ceil(count/2)`` are formed; higher traces use
    ``tr(s^m) = tr(s^a s^(m-a))`` which needs no matrix product.
    """
    if count < 1:
        return []
    half = (count + 1) // 2
    powers = [s]
    for _ in range(half - 1):
        powers.append(mat_mul(powers[-1], s))
    traces = [mat_trace(p) for p in powers]
    n, rank, zero = s.order, s.rank, ring_zero(s.rank)
    for m in range(half + 1, count + 1):
        x, y = powers[half - 1], powers[m - half - 1]
        coeffs = [zero] * (n + 1)
        for i in range(n + 1):
            xi = x.blocks[i]
            if xi is None:
                continue
            for j in range(n + 1 - i):
                yj = y.blocks[j]
                if yj is not None:
                    coeffs[i + j] = coeffs[i + j] + cmat_trace_of_product(xi, yj, rank)
        traces.append(TruncatedSeries._raw(coeffs, rank))
    return traces


def mat_log(a: SeriesMatrix) -> SeriesMatrix:
    """Principal logarithm ``-sum_{m>=1} S^m / m`` with ``S = Id - A``; needs ``A(0) = Id``."""
    if not a.has_identity_constant():
        raise InputError("matrix log needs identity constant term")
    s = SeriesMatrix.identity(a.size, a.order, a.rank) - a
    total = SeriesMatrix([None] * (a.order + 1), a.size, a.rank)
    power = s
    for m in range(1, a.order + 1):
        total = total - power * Fraction(1, m)
        power = mat_mul(power, s)
    return total


def row_sum_norm(m: Matrix) -> Fraction:
    """Max over rows of the summed ℓ¹ norms: an upper bound for the operator norm."""
    return max((sum((ring_norm(x) for x in row), Fraction(0)) for row in m), default=Fraction(0))


def constant_trace(m: Matrix) -> Fraction:
    return sum((ring_trace(m[i][i]) for i in range(len(m))), Fraction(0))
