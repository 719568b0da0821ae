"""Seeded randomized and fixed-corpus property suites behind ``iharazeta verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import corpus
from .bareiss import bareiss_det, polynomial_entries
from .determinant import det_vn
from .document import GraphDocument
from .finite import build_operators, edge_pencil, vertex_pencil, zeta_via_ihara, zeta_via_T
from .graph import SerreGraph, VoltageGraph, closed_nb_walks
from .group_ring import GroupRingElement, ring_zero
from .loops import LoopCountTable, invert_log_zeta, oracle_table, roundtrip
from .matrix import Matrix, SeriesMatrix, cmat_identity
from .periodic import bass_hashimoto_check, tr_T_power
from .series import TruncatedSeries

DEFAULT_SEED = 1729
SUITES = ("det-axioms", "bass-hashimoto", "trace-lemma", "inversion-roundtrip")


@dataclass
class Counterexample:
    check: str
    order: int | None = None
    document: GraphDocument | None = None
    detail: str = ""

    def render(self) -> str:
        lines = [f"counterexample [{self.check}]" + (f" at order {self.order}" if self.order is not None else "")]
        if self.detail:
            lines.append(self.detail)
        if self.document is not None:
            lines.append(self.document.dumps())
        return "\n".join(lines)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[Counterexample] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, failure: Callable[[], Counterexample]) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(failure())


# random matrix series -------------------------------------------------------

def random_coefficient(rng: random.Random, rank: int, density: float = 0.5):
    if rng.random() > density:
        return ring_zero(rank)
    if rank == 0:
        return Fraction(rng.randint(-3, 3), rng.randint(1, 2))
    terms = {}
    for _ in range(rng.randint(1, 2)):
        exp = tuple(rng.randint(-1, 1) for _ in range(rank))
        terms[exp] = Fraction(rng.randint(-2, 2), rng.randint(1, 2))
    return GroupRingElement(rank, terms)


def random_unipotent_series(
    rng: random.Random, size: int, rank: int, order: int, degree: int = 2, density: float = 0.5
) -> SeriesMatrix:
    """Random ``Id + A_1 u + ... + A_degree u^degree``."""
    blocks: list = [cmat_identity(size, rank)]
    for _ in range(degree):
        blocks.append(
            tuple(tuple(random_coefficient(rng, rank, density) for _ in range(size)) for _ in range(size))
        )
    return SeriesMatrix.from_polynomial(blocks, order, rank=rank)


def random_invertible(rng: random.Random, size: int) -> tuple[Matrix, Matrix]:
    """Random rational matrix together with its inverse."""
    while True:
        m = [[Fraction(rng.randint(-3, 3)) for _ in range(size)] for _ in range(size)]
        inv = rational_inverse(m)
        if inv is not None:
            return tuple(map(tuple, m)), inv


def rational_inverse(m) -> Matrix | None:
    n = len(m)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next((r for r in range(c, n) if aug[r][c]), None)
        if p is None:
            return None
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


def embed_constant(m: Matrix, order: int, rank: int) -> SeriesMatrix:
    return SeriesMatrix.from_polynomial([m], order, rank=rank)


def random_unit_series(rng: random.Random, order: int) -> TruncatedSeries:
    return TruncatedSeries.from_polynomial(
        [1] + [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(3)], order
    )


def block_upper(rng: random.Random, size: int, split: int, rank: int, order: int) -> SeriesMatrix:
    """Random unipotent series whose lower-left ``(size-split) x split`` block vanishes."""
    a = random_unipotent_series(rng, size, rank, order)
    blocks = []
    for b in a.blocks:
        if b is None:
            blocks.append(None)
            continue
        zero = ring_zero(rank)
        blocks.append(
            tuple(tuple(zero if (i >= split and j < split) else b[i][j] for j in range(size)) for i in range(size))
        )
    return SeriesMatrix(blocks, size, rank)


# suites ----------------------------------------------------------------------

def det_axioms(seed: int = DEFAULT_SEED, trials: int = 100, order: int = 8) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("det-axioms")
    for t in range(trials):
        rank = (0, 2)[t % 2]
        size = 1 + t % 3
        a = random_unipotent_series(rng, size, rank, order)
        b = random_unipotent_series(rng, size, rank, order)
        lhs, rhs = det_vn(a * b), det_vn(a) * det_vn(b)
        res.record(lhs == rhs, lambda: Counterexample(
            "multiplicativity", order, detail=f"rank {rank}, size {size}, first mismatch u^{lhs.first_mismatch(rhs)}"))

        p, p_inv = random_invertible(rng, size)
        conj = embed_constant(p, order, rank) * a * embed_constant(p_inv, order, rank)
        res.record(det_vn(conj) == det_vn(a), lambda: Counterexample(
            "conjugation", order, detail=f"rank {rank}, size {size}"))

        c = random_unit_series(rng, order)
        scalar = SeriesMatrix.scalar(c if rank == 0 else c.map(lambda x: x, rank=rank), size)
        res.record(det_vn(scalar) == c ** size, lambda: Counterexample(
            "scalar power", order, detail=f"rank {rank}, size {size}, c = {c}"))

        big = size + 1
        split = rng.randint(1, big - 1)
        m = block_upper(rng, big, split, rank, order)
        top, bottom = m.submatrix(range(split)), m.submatrix(range(split, big))
        res.record(det_vn(m) == det_vn(top) * det_vn(bottom), lambda: Counterexample(
            "block triangular", order, detail=f"rank {rank}, size {big}, split {split}"))
    return res


def _periodic_cases() -> list[tuple[str, VoltageGraph]]:
    return [(name, build()) for name, build in corpus.PERIODIC_CORPUS.items()]


def bass_hashimoto(seed: int = DEFAULT_SEED, random_graphs: int = 50, periodic_order: int = 10) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("bass-hashimoto")
    graphs: list[SerreGraph] = [build() for build in corpus.FINITE_CORPUS.values()]
    graphs += [corpus.random_graph(rng) for _ in range(random_graphs)]
    for g in graphs:
        n = max(1, g.num_oriented_edges)
        lhs, rhs = zeta_via_T(g, n), zeta_via_ihara(g, n)
        res.record(lhs == rhs, lambda: Counterexample(
            "Det(I - Tu) vs Ihara form", lhs.first_mismatch(rhs), GraphDocument.from_voltage_graph(g)))
    cases = _periodic_cases() + [
        (f"random rank {r}", corpus.random_voltage_graph(rng, r, max_vertices=3, max_degree=4))
        for r in (1, 2) for _ in range(3)
    ]
    for _, vg in cases:
        report = bass_hashimoto_check(vg, periodic_order)
        res.record(report.equal, lambda: Counterexample(
            "periodic Bass-Hashimoto", report.first_mismatch, GraphDocument.from_voltage_graph(vg)))
    return res


def trace_lemma(seed: int = DEFAULT_SEED, max_power: int = 10) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("trace-lemma")
    cases: list[VoltageGraph] = [VoltageGraph.trivial(b()) for b in corpus.FINITE_CORPUS.values()]
    cases += [b() for b in corpus.PERIODIC_CORPUS.values()]
    cases += [corpus.random_voltage_graph(rng, r, max_vertices=3, max_degree=3) for r in (0, 1, 2)]
    for vg in cases:
        for n in range(1, max_power + 1):
            tr, walks = tr_T_power(vg, n), closed_nb_walks(vg, n, zero_voltage_only=True)
            res.record(tr == walks, lambda: Counterexample(
                "trace of T^n vs walk count", n, GraphDocument.from_voltage_graph(vg),
                detail=f"trace {tr}, walks {walks}"))
    return res


def inversion_roundtrip(seed: int = DEFAULT_SEED, trials: int = 100, max_length: int = 20) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("inversion-roundtrip")
    for _ in range(trials):
        table = LoopCountTable.from_mapping(
            {l: rng.choice([0, 0, rng.randint(1, 50)]) for l in range(1, max_length + 1)}, max_length
        )
        back = invert_log_zeta(roundtrip(table, max_length))
        res.record(back == table, lambda: Counterexample(
            "invert(roundtrip(table))", max_length, detail=f"table {table.nonzero()}"))
    for g in (b() for b in corpus.FINITE_CORPUS.values()):
        n = min(max(1, g.num_oriented_edges), 8)
        z = zeta_via_T(g, n)
        inverted = invert_log_zeta(z.log())
        brute = oracle_table(g, n)
        res.record(inverted == brute, lambda: Counterexample(
            "rank-0 inversion vs cyclic classes", n, GraphDocument.from_voltage_graph(g)))
    return res


def classical_agreement(g: SerreGraph) -> tuple[bool, bool]:
    """Series determinants of ``I - Tu`` and ``Δ(u)`` against Bareiss elimination, at full degree."""
    ops = build_operators(g)
    out = []
    for pencil, degree in (
        (edge_pencil(ops.T, max(1, len(ops.T))), len(ops.T)),
        (vertex_pencil(ops.delta, ops.Q, max(1, 2 * len(ops.delta))), 2 * len(ops.delta)),
    ):
        series = det_vn(pencil)
        poly = bareiss_det(polynomial_entries(pencil.blocks, pencil.size))
        expected = TruncatedSeries.from_polynomial(poly, max(1, degree))
        out.append(series == expected)
    return out[0], out[1]


RUNNERS = {
    "det-axioms": det_axioms,
    "bass-hashimoto": bass_hashimoto,
    "trace-lemma": trace_lemma,
    "inversion-roundtrip": inversion_roundtrip,
}


def run(selector: str, seed: int = DEFAULT_SEED) -> list[SuiteResult]:
    if selector == "all":
        return [RUNNERS[name](seed) for name in SUITES]
    if selector not in RUNNERS:
        raise KeyError(selector)
    return [RUNNERS[selector](seed)]
