"""The rational group ring of a free abelian group ℤ^d.

Elements are finitely supported functions ℤ^d → ℚ, i.e. Laurent
polynomials in d commuting variables.  The von Neumann trace of the group
is the coefficient of the identity element.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

from .errors import InputError

Exponent = tuple[int, ...]
Scalar = Union[int, Fraction]


class GroupRingElement:
    """Immutable element of ℚ[ℤ^d] with sparse support.

    Zero coefficients are never stored, so ``bool(x)`` is a cheap zero test.
    """

    __slots__ = ("rank", "_terms", "_hash")

    def __init__(self, rank: int, terms: Mapping[Exponent, Scalar] | Iterable = ()):
        if rank < 0:
            raise InputError(f"rank must be nonnegative, got {rank}")
        self.rank = rank
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponent, Fraction] = {}
        for exp, coeff in items:
            exp = tuple(int(x) for x in exp)
            if len(exp) != rank:
                raise InputError(f"exponent {exp} has length {len(exp)}, expected {rank}")
            c = clean.get(exp, Fraction(0)) + Fraction(coeff)
            if c:
                clean[exp] = c
            else:
                clean.pop(exp, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, rank: int, terms: dict[Exponent, Fraction]) -> GroupRingElement:
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj.rank = rank
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, rank: int) -> GroupRingElement:
        return cls._raw(rank, {})

    @classmethod
    def one(cls, rank: int) -> GroupRingElement:
        return cls._raw(rank, {(0,) * rank: Fraction(1)})

    @classmethod
    def monomial(cls, exponent: Iterable[int], coeff: Scalar = 1) -> GroupRingElement:
        exp = tuple(int(x) for x in exponent)
        return cls(len(exp), {exp: coeff})

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def support(self) -> list[Exponent]:
        return sorted(self._terms)

    def coefficient(self, exponent: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def trace(self) -> Fraction:
        return self._terms.get((0,) * self.rank, Fraction(0))

    def augmentation(self) -> Fraction:
        """Image under the map sending every group element to 1."""
        return sum(self._terms.values(), Fraction(0))

    def star(self) -> GroupRingElement:
        """Adjoint: negate exponents (coefficients are rational, so conjugation is trivial)."""
        return GroupRingElement._raw(
            self.rank, {tuple(-x for x in e): c for e, c in self._terms.items()}
        )

    def l1_norm(self) -> Fraction:
        return sum((abs(c) for c in self._terms.values()), Fraction(0))

    def to_rational(self) -> Fraction:
        if self.rank != 0:
            raise InputError("only rank-0 elements are rationals")
        return self.trace()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def _coerce(self, other) -> GroupRingElement | None:
        if isinstance(other, GroupRingElement):
            if other.rank != self.rank:
                raise InputError(f"rank mismatch: {self.rank} vs {other.rank}")
            return other
        if isinstance(other, Rational):
            if not other:
                return GroupRingElement._raw(self.rank, {})
            return GroupRingElement._raw(self.rank, {(0,) * self.rank: Fraction(other)})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return GroupRingElement._raw(self.rank, out)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement._raw(self.rank, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, Rational):
            if not other:
                return GroupRingElement._raw(self.rank, {})
            return GroupRingElement._raw(self.rank, {e: c * other for e, c in self._terms.items()})
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        if other.rank != self.rank:
            raise InputError(f"rank mismatch: {self.rank} vs {other.rank}")
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return GroupRingElement._raw(self.rank, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise InputError("only monomials are invertible in the group ring")
            ((e, c),) = self._terms.items()
            k = -n
            return GroupRingElement._raw(self.rank, {tuple(-k * x for x in e): 1 / c**k})
        result = GroupRingElement.one(self.rank)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, GroupRingElement):
            return self.rank == other.rank and self._terms == other._terms
        if isinstance(other, Rational):
            if not other:
                return not self._terms
            return self._terms == {(0,) * self.rank: other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rank, frozenset(self._terms.items())))
        return self._hash

    def canonical(self) -> list[tuple[list[int], str]]:
        """Serializable form: ``[(exponent, "p/q"), ...]`` sorted by exponent."""
        return [(list(e), str(self._terms[e])) for e in sorted(self._terms)]

    def __repr__(self):
        return f"GroupRingElement({self.rank}, {dict(sorted(self._terms.items()))!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms):
            c = self._terms[e]
            mono = "*".join(f"x{i}^{k}" for i, k in enumerate(e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)


RingElement = Union[Fraction, GroupRingElement]


def ring_zero(rank: int) -> RingElement:
    return Fraction(0) if rank == 0 else GroupRingElement.zero(rank)


def ring_one(rank: int) -> RingElement:
    return Fraction(1) if rank == 0 else GroupRingElement.one(rank)


def ring_monomial(exponent: Iterable[int], coeff: Scalar = 1) -> RingElement:
    """Group element ``coeff * t^exponent``; a plain rational in rank 0."""
    exp = tuple(exponent)
    if not exp:
        return Fraction(coeff)
    return GroupRingElement.monomial(exp, coeff)


def ring_trace(x: RingElement) -> Fraction:
    if isinstance(x, GroupRingElement):
        return x.trace()
    return Fraction(x)


def ring_star(x: RingElement) -> RingElement:
    if isinstance(x, GroupRingElement):
        return x.star()
    return x


def ring_norm(x: RingElement) -> Fraction:
    """ℓ¹ norm, an upper bound on the operator norm of right multiplication."""
    if isinstance(x, GroupRingElement):
        return x.l1_norm()
    return abs(Fraction(x))


def ring_of(x) -> int:
    """Rank of the ring an element lives in."""
    if isinstance(x, GroupRingElement):
        return x.rank
    if isinstance(x, Rational):
        return 0
    raise InputError(f"not a ring element: {x!r}")


def coerce(x, rank: int) -> RingElement:
    """Bring ``x`` into the ring of the given rank, identifying rank-0 elements with ℚ."""
    if isinstance(x, GroupRingElement):
        if x.rank == rank:
            return Fraction(x.trace()) if rank == 0 else x
        raise InputError(f"rank mismatch: element of rank {x.rank}, expected {rank}")
    if isinstance(x, Rational):
        return Fraction(x) if rank == 0 else GroupRingElement._raw(
            rank, {(0,) * rank: Fraction(x)} if x else {}
        )
    raise InputError(f"not a ring element: {x!r}")


def gr_mul(a: GroupRingElement, b: GroupRingElement) -> RingElement:
    """Convolution product; rank-0 operands multiply as rationals."""
    ra, rb = ring_of(a), ring_of(b)
    if ra != rb:
        raise InputError(f"rank mismatch: {ra} vs {rb}")
    if ra == 0:
        return Fraction(coerce(a, 0)) * Fraction(coerce(b, 0))
    return a * b


def gr_trace(a: RingElement) -> Fraction:
    return ring_trace(a)
