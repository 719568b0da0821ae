"""Power series in one variable ``u`` truncated at a fixed order.

Coefficients live either in ℚ (rank 0) or in the group ring ℚ[ℤ^d].
All arithmetic is exact and carried out modulo ``u^(order+1)``.
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
    ring_one,
    ring_trace,
    ring_zero,
)


class TruncatedSeries:
    """``c_0 + c_1 u + ... + c_N u^N  (mod u^(N+1))`` over a fixed coefficient ring."""

    __slots__ = ("coeffs", "rank")

    def __init__(self, coeffs: Iterable, rank: int | None = None):
        coeffs = list(coeffs)
        if not coeffs:
            raise InputError("a truncated series needs at least the constant coefficient")
        if rank is None:
            rank = next((c.rank for c in coeffs if isinstance(c, GroupRingElement)), 0)
        self.rank = rank
        self.coeffs = tuple(coerce(c, rank) for c in coeffs)

    @classmethod
    def _raw(cls, coeffs: Sequence[RingElement], rank: int) -> TruncatedSeries:
        obj = cls.__new__(cls)
        obj.rank = rank
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def zero(cls, order: int, rank: int = 0) -> TruncatedSeries:
        return cls._raw([ring_zero(rank)] * (order + 1), rank)

    @classmethod
    def one(cls, order: int, rank: int = 0) -> TruncatedSeries:
        return cls.monomial(0, order, rank=rank)

    @classmethod
    def monomial(cls, degree: int, order: int, coeff=1, rank: int = 0) -> TruncatedSeries:
        out = [ring_zero(rank)] * (order + 1)
        if degree <= order:
            out[degree] = coerce(coeff, rank)
        return cls._raw(out, rank)

    @classmethod
    def from_polynomial(cls, coeffs: Iterable, order: int, rank: int | None = None) -> TruncatedSeries:
        """Pad or cut a coefficient list to the given order."""
        coeffs = list(coeffs)
        if rank is None:
            rank = next((c.rank for c in coeffs if isinstance(c, GroupRingElement)), 0)
        coeffs = coeffs[: order + 1] + [0] * max(0, order + 1 - len(coeffs))
        return cls(coeffs, rank)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise InputError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries._raw(self.coeffs[: order + 1], self.rank)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, None for the zero series."""
        return next((k for k, c in enumerate(self.coeffs) if c), None)

    def _check(self, other: TruncatedSeries) -> int:
        if other.rank != self.rank:
            raise InputError(f"ring mismatch: rank {self.rank} vs rank {other.rank}")
        return min(self.order, other.order)

    def _lift(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (Rational, GroupRingElement)):
            return TruncatedSeries.monomial(0, self.order, other, rank=self.rank)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        n = self._check(other)
        return TruncatedSeries._raw(
            [self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], self.rank
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._raw([-c for c in self.coeffs], self.rank)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        if isinstance(other, (Rational, GroupRingElement)):
            c = coerce(other, self.rank)
            return TruncatedSeries._raw([x * c for x in self.coeffs], self.rank)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational):
            inv = 1 / Fraction(other)
            return TruncatedSeries._raw([x * inv for x in self.coeffs], self.rank)
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = TruncatedSeries.one(self.order, self.rank)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.rank == other.rank and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.rank, self.coeffs))

    def first_mismatch(self, other: TruncatedSeries) -> int | None:
        """Lowest degree where the two series differ, comparing up to the common order."""
        n = self._check(other)
        return next((k for k in range(n + 1) if self.coeffs[k] != other.coeffs[k]), None)

    def inverse(self) -> TruncatedSeries:
        """Multiplicative inverse of a series with constant term 1 (geometric recursion)."""
        one = ring_one(self.rank)
        if self.coeffs[0] != one:
            raise InputError("only series with constant term 1 are inverted")
        g = [one]
        for k in range(1, self.order + 1):
            acc = ring_zero(self.rank)
            for j in range(1, k + 1):
                fj = self.coeffs[j]
                if fj:
                    acc = acc + fj * g[k - j]
            g.append(-acc)
        return TruncatedSeries._raw(g, self.rank)

    def log(self) -> TruncatedSeries:
        return series_log(self)

    def exp(self) -> TruncatedSeries:
        return series_exp(self)

    def trace(self) -> TruncatedSeries:
        """Apply the von Neumann trace coefficient-wise; the result is over ℚ."""
        return TruncatedSeries._raw([ring_trace(c) for c in self.coeffs], 0)

    def map(self, fn, rank: int | None = None) -> TruncatedSeries:
        return TruncatedSeries([fn(c) for c in self.coeffs], self.rank if rank is None else rank)

    def to_strings(self) -> list:
        """Exact serialization: ``"p/q"`` strings over ℚ, canonical term lists otherwise."""
        if self.rank == 0:
            return [str(c) for c in self.coeffs]
        return [c.canonical() for c in self.coeffs]

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, rank={self.rank})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("u" if k == 1 else f"u^{k}")
            cs = str(c)
            if isinstance(c, GroupRingElement) and len(c) > 1:
                cs = f"({cs})"
            if mono and c == 1:
                terms.append(mono)
            else:
                terms.append(f"{cs}*{mono}" if mono else cs)
        return (" + ".join(terms) or "0") + f" + O(u^{self.order + 1})"


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the smaller of the two orders."""
    n = f._check(g)
    a, b = f.coeffs, g.coeffs
    out = [ring_zero(f.rank)] * (n + 1)
    for i in range(n + 1):
        ai = a[i]
        if not ai:
            continue
        for j in range(n + 1 - i):
            bj = b[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return TruncatedSeries._raw(out, f.rank)


def series_log(f: TruncatedSeries) -> TruncatedSeries:
    """Principal logarithm of a series with constant term 1.

    Solves ``f * L' = f'`` term by term, which reproduces the Mercator series
    ``-sum (-(f-1))^m / m`` exactly.
    """
    if f.coeffs[0] != ring_one(f.rank):
        raise InputError("log needs constant term 1")
    c = f.coeffs
    log = [ring_zero(f.rank)]
    for k in range(1, f.order + 1):
        acc = c[k] * k
        for j in range(1, k):
            if c[j] and log[k - j]:
                acc = acc - c[j] * log[k - j] * (k - j)
        log.append(acc / k)
    return TruncatedSeries._raw(log, f.rank)


def series_exp(f: TruncatedSeries) -> TruncatedSeries:
    """Exponential of a series with zero constant term, via ``E' = f' E``."""
    if f.coeffs[0]:
        raise InputError("exp needs constant term 0")
    c = f.coeffs
    e = [ring_one(f.rank)]
    for k in range(1, f.order + 1):
        acc = ring_zero(f.rank)
        for j in range(1, k + 1):
            if c[j]:
                acc = acc + c[j] * e[k - j] * j
        e.append(acc / k)
    return TruncatedSeries._raw(e, f.rank)


def series_power(f: TruncatedSeries, s) -> TruncatedSeries:
    """``f^s = Exp(s Log f)`` for rational ``s`` and constant term 1."""
    return series_exp(series_log(f) * Fraction(s))
