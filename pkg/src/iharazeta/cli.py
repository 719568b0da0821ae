"""Command-line interface.

    iharazeta finite   GRAPH.json [--order N] [--convention determinant|classical] [--evaluate RE,IM]
    iharazeta periodic GRAPH.json [--order N] [--evaluate RE,IM]
    iharazeta loops    GRAPH.json [--max-length L]
    iharazeta verify   {det-axioms,bass-hashimoto,trace-lemma,inversion-roundtrip,all} [--seed S]

GRAPH may be ``-`` for standard input.  Exit status: 0 success, 1 failed
verification, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import document
from .determinant import det_vn, eval_series, log_det_vn, operator_norm_bound
from .errors import InputError
from .finite import build_operators, reciprocal, vertex_pencil, weighted_chi, zeta_via_ihara, zeta_via_T
from .loops import LoopCountTable, invert_log_zeta, oracle_count
from .periodic import bass_hashimoto_check, build_periodic, log_zeta
from .series import TruncatedSeries
from .verify import DEFAULT_SEED, SUITES, run

DEFAULT_ORDER = 12

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class RoutingError(InputError):
    pass


def _read(path: str) -> document.GraphDocument:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"{path}: {exc.strerror}") from None
    return document.loads(text)


def _parse_complex(text: str) -> complex:
    try:
        re_part, im_part = text.split(",") if "," in text else (text, "0")
        return complex(float(re_part), float(im_part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}") from None


def _table_dict(table: LoopCountTable) -> dict[str, str]:
    return {str(l): str(table.counts[l]) for l in sorted(table.counts)}


def _evaluation(z: TruncatedSeries, u0: complex, norm: Fraction) -> dict:
    val = eval_series(z, u0, float(norm))
    return {
        "u0": [u0.real, u0.imag],
        "value": [val.value.real, val.value.imag],
        "modulus": abs(val.value),
        "norm_bound": str(norm),
        "radius": val.radius,
        "outside_radius": val.outside_radius,
    }


def cmd_finite(doc: document.GraphDocument, order: int = DEFAULT_ORDER,
               convention: str = "determinant", evaluate: complex | None = None) -> dict:
    if doc.rank != 0:
        raise RoutingError(f"document has rank {doc.rank}; use the 'periodic' command")
    g = doc.graph()
    ops = build_operators(g)
    z_t = zeta_via_T(g, order)
    z_i = zeta_via_ihara(g, order)
    det_lap = det_vn(vertex_pencil(ops.delta, ops.Q, order))
    k = z_t.first_mismatch(z_i)
    chi = weighted_chi(*doc.weights())
    log_z = z_t.log()
    report = {
        "command": "finite",
        "input_sha256": doc.digest(),
        "order": order,
        "convention": convention,
        "chi": str(chi),
        "det_edge_operator": z_t.to_strings(),
        "det_laplacian": det_lap.to_strings(),
        "zeta_ihara_form": z_i.to_strings(),
        "log_zeta": log_z.to_strings(),
        "zeta": z_t.to_strings(),
    }
    if convention == "classical":
        report["zeta_classical"] = reciprocal(z_t).to_strings()
    report["loop_table"] = _table_dict(invert_log_zeta(log_z))
    report["verdicts"] = {"bass_hashimoto_ihara": "equal" if k is None else f"mismatch at u^{k}"}
    if evaluate is not None:
        target = reciprocal(z_t) if convention == "classical" else z_t
        report["evaluation"] = _evaluation(target, evaluate, operator_norm_bound(ops.T))
    return report


def cmd_periodic(doc: document.GraphDocument, order: int = DEFAULT_ORDER,
                 evaluate: complex | None = None) -> dict:
    if doc.rank < 1:
        raise RoutingError("document has rank 0; use the 'finite' command")
    vg = doc.voltage_graph()
    ops = build_periodic(vg)
    log_z = log_zeta(vg, order)
    z = log_z.exp()
    check = bass_hashimoto_check(vg, order)
    det_lap = log_det_vn(vertex_pencil(ops.delta, ops.Q, order, ops.rank)).exp()
    report = {
        "command": "periodic",
        "input_sha256": doc.digest(),
        "order": order,
        "rank": doc.rank,
        "chi2": str(ops.chi2),
        "det_edge_operator": check.edge_side.to_strings(),
        "det_laplacian": det_lap.to_strings(),
        "log_zeta": log_z.to_strings(),
        "zeta": z.to_strings(),
        "loop_table": _table_dict(invert_log_zeta(log_z)),
        "verdicts": {
            "bass_hashimoto_ihara": check.verdict,
            "log_zeta_vs_det_edge": "equal" if z == check.edge_side
            else f"mismatch at u^{z.first_mismatch(check.edge_side)}",
        },
    }
    if evaluate is not None:
        report["evaluation"] = _evaluation(z, evaluate, operator_norm_bound(ops.T))
    return report


def cmd_loops(doc: document.GraphDocument, max_length: int) -> list[tuple[int, int, Fraction, str]]:
    """Rows ``(length, oracle count, inversion count, agree|disagree)``."""
    if max_length < 1:
        raise InputError("max length must be at least 1")
    vg = doc.voltage_graph()
    table = invert_log_zeta(log_zeta(vg, max_length))
    rows = []
    for l in range(1, max_length + 1):
        brute, inv = oracle_count(vg, l), table[l]
        rows.append((l, brute, inv, "agree" if brute == inv else "disagree"))
    return rows


def _series_csv(report: dict) -> str:
    keys = [k for k in ("det_edge_operator", "det_laplacian", "log_zeta", "zeta", "zeta_classical") if k in report]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["degree"] + keys)
    for d in range(report["order"] + 1):
        w.writerow([d] + [report[k][d] for k in keys])
    return buf.getvalue()


def _emit(report: dict, fmt: str) -> None:
    if fmt == "csv":
        sys.stdout.write(_series_csv(report))
    else:
        sys.stdout.write(json.dumps(report, indent=2) + "\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="iharazeta", description="Ihara zeta functions of finite and ℤ^d-periodic graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("finite", help="zeta of a finite graph (rank 0)")
    f.add_argument("graph", help="graph document path, or - for stdin")
    f.add_argument("--order", type=int, default=DEFAULT_ORDER)
    f.add_argument("--convention", choices=["determinant", "classical"], default="determinant")
    f.add_argument("--evaluate", type=_parse_complex, metavar="RE,IM")
    f.add_argument("--format", choices=["json", "csv"], default="json")

    q = sub.add_parser("periodic", help="zeta of a ℤ^d-periodic graph (rank >= 1)")
    q.add_argument("graph")
    q.add_argument("--order", type=int, default=DEFAULT_ORDER)
    q.add_argument("--evaluate", type=_parse_complex, metavar="RE,IM")
    q.add_argument("--format", choices=["json", "csv"], default="json")

    lo = sub.add_parser("loops", help="primitive loop counts, brute force vs inversion")
    lo.add_argument("graph")
    lo.add_argument("--max-length", "-L", type=int, default=DEFAULT_ORDER)
    lo.add_argument("--format", choices=["json", "csv"], default="csv")

    v = sub.add_parser("verify", help="run property suites")
    v.add_argument("suite", choices=list(SUITES) + ["all"])
    v.add_argument("--seed", type=int, default=DEFAULT_SEED,
                   help=f"seed for randomized suites (default {DEFAULT_SEED})")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return _verify(args.suite, args.seed)
        if getattr(args, "order", 1) < 1:
            raise InputError("--order must be at least 1")
        doc = _read(args.graph)
        if args.command == "finite":
            report = cmd_finite(doc, args.order, args.convention, args.evaluate)
        elif args.command == "periodic":
            report = cmd_periodic(doc, args.order, args.evaluate)
        if args.command in ("finite", "periodic"):
            _emit(report, args.format)
            return EXIT_OK if all(v == "equal" for v in report["verdicts"].values()) else EXIT_FAILED
        rows = cmd_loops(doc, args.max_length)
        if args.format == "csv":
            w = csv.writer(sys.stdout, lineterminator="\n")
            w.writerow(["length", "oracle", "inversion", "status"])
            w.writerows((l, b, str(i), s) for l, b, i, s in rows)
        else:
            out = [{"length": l, "oracle": b, "inversion": str(i), "status": s} for l, b, i, s in rows]
            sys.stdout.write(json.dumps(out, indent=2) + "\n")
        return EXIT_OK if all(r[3] == "agree" for r in rows) else EXIT_FAILED
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def _verify(selector: str, seed: int) -> int:
    results = run(selector, seed)
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.checks - len(r.failures)}/{r.checks} checks (seed {seed})")
        for cx in r.failures:
            print(cx.render())
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
