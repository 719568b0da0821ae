"""Ihara zeta functions of finite graphs.

Both determinant formulas are evaluated through the formal determinant:
``Z(u) = Det(I - T u)`` from the non-backtracking edge operator, and
``Z(u) = (1 - u^2)^(-chi) Det(I - δ u + Q u^2)`` from the vertex Laplacian.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .determinant import binomial_factor, det_vn
from .errors import InputError
from .graph import SerreGraph, reduced_successors
from .group_ring import RingElement, ring_zero
from .matrix import Matrix, SeriesMatrix, cmat_identity, cmat_scale
from .series import TruncatedSeries


@dataclass(frozen=True)
class FiniteOperators:
    """Edge operator ``T`` (indexed by oriented edges in graph order), adjacency ``delta``,
    degree operator ``Q`` (entries degree − 1) and Euler characteristic ``chi``."""

    T: Matrix
    delta: Matrix
    Q: Matrix
    chi: Fraction
    rank: int = 0


def assemble_operators(
    g: SerreGraph, label: Callable[[str], RingElement], rank: int
) -> tuple[Matrix, Matrix, Matrix]:
    """Build ``(T, delta, Q)`` with the edge ``e`` carrying the ring element ``label(e)``.

    ``T[e1][e] = label(e1)`` when ``(e, e1)`` is reduced; ``delta[x][y]`` sums
    ``label(e)`` over edges from ``x`` to ``y``.
    """
    zero = ring_zero(rank)
    m = len(g.edges)
    t = [[zero] * m for _ in range(m)]
    for j, e in enumerate(g.edges):
        for f in reduced_successors(g, e.id):
            i = g.index(f)
            t[i][j] = t[i][j] + label(f)
    vindex = {v: i for i, v in enumerate(g.vertices)}
    n = len(g.vertices)
    delta = [[zero] * n for _ in range(n)]
    for e in g.edges:
        i, j = vindex[e.origin], vindex[e.terminus]
        delta[i][j] = delta[i][j] + label(e.id)
    eye = cmat_identity(n, rank)
    q = tuple(
        tuple(x * (g.degree(g.vertices[i]) - 1) for x in row) for i, row in enumerate(eye)
    )
    return tuple(map(tuple, t)), tuple(map(tuple, delta)), q


def build_operators(g: SerreGraph) -> FiniteOperators:
    g.check()
    one = Fraction(1)
    t, delta, q = assemble_operators(g, lambda _: one, 0)
    return FiniteOperators(t, delta, q, Fraction(g.euler_characteristic()))


def edge_pencil(t: Matrix, order: int, rank: int = 0) -> SeriesMatrix:
    """``I - T u`` as a matrix series."""
    m = len(t)
    return SeriesMatrix.from_polynomial(
        [cmat_identity(m, rank), cmat_scale(t, -1)], order, rank=rank
    )


def vertex_pencil(delta: Matrix, q: Matrix, order: int, rank: int = 0) -> SeriesMatrix:
    """``Δ(u) = I - δ u + Q u^2`` as a matrix series."""
    n = len(delta)
    return SeriesMatrix.from_polynomial(
        [cmat_identity(n, rank), cmat_scale(delta, -1), q], order, rank=rank
    )


def zeta_via_T(g: SerreGraph, order: int) -> TruncatedSeries:
    if order < 1:
        raise InputError("order must be at least 1")
    ops = build_operators(g)
    return det_vn(edge_pencil(ops.T, order))


def zeta_via_ihara(g: SerreGraph, order: int) -> TruncatedSeries:
    if order < 1:
        raise InputError("order must be at least 1")
    ops = build_operators(g)
    return binomial_factor(-ops.chi, order) * det_vn(vertex_pencil(ops.delta, ops.Q, order))


def weighted_chi(
    vertex_weights: Mapping[str, int], edge_weights: Mapping[str, int]
) -> Fraction:
    """Euler characteristic weighted by stabilizer orders.

    ``edge_weights`` is keyed by geometric edge; each one stands for the two
    oriented edges of the oriented-edge sum, which carries a factor 1/2.
    """
    for name, w in list(vertex_weights.items()) + list(edge_weights.items()):
        if int(w) != w or w < 1:
            raise InputError(f"stabilizer order of {name!r} must be a positive integer, got {w}")
    return sum((Fraction(1, int(w)) for w in vertex_weights.values()), Fraction(0)) - sum(
        (Fraction(1, int(w)) for w in edge_weights.values()), Fraction(0)
    )


def reciprocal(z: TruncatedSeries) -> TruncatedSeries:
    """Classical convention ``prod (1 - u^l)^(-1)``: the inverse of ``Det(I - T u)``."""
    return z.inverse()
