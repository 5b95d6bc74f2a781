"""Command-line front end.

Subcommands: ``scan`` (grid classification with fuzzing and certified
counterexamples, CSV report), ``counterexample`` (single-pair witness dump),
``choi-table`` (eigenvalue sign patterns of the classic compression
example), ``verify-lemma`` (closed-form coefficient vs extrapolation
oracle), and ``fuzz`` (randomized property suites).

Exit codes: 0 success, 1 inconsistency or property failure, 2 usage error,
3 counterexample requested inside the sufficiency region, 4 degenerate
expansion hypotheses.  The master seed defaults to the POWMEAN_SEED
environment variable.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from .core import Tolerances
from .counterexamples import (
    CERT_TOL,
    choi_sign_table,
    find_counterexample,
    pd_rotation_difference,
    rank_one_difference,
)
from .errors import DegenerateFrameError, InRegionError, SearchExhaustedError
from .expansions import (
    det_coeff_log_pair,
    det_coeff_power_pair,
    det_coeff_rank_one,
    numeric_det_coeff,
    rank_one_remainder_orders,
)
from .fuzz import FUZZ_TARGETS, fuzz_point
from .region import Case, classify

CSV_HEADER = "p,q,label,verdict,detail,x,y,theta,seed"
_LEMMA_GAP_BOUND = 1e-4
_CHOI_POWERS = (-2.0, -0.5, 0.5, 1.5, 3.0)


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _env_seed() -> int:
    return int(os.environ.get("POWMEAN_SEED", "0"))


def _grid(lo: float, hi: float, step: float) -> list[float]:
    count = int(np.floor((hi - lo) / step + 1e-9)) + 1
    return [lo + i * step for i in range(max(count, 0))]


def _cell_seed(master: int, pi: int, qi: int) -> int:
    return int(np.random.SeedSequence([master, pi, qi]).generate_state(1)[0])


def _tolerances(args) -> Tolerances:
    return Tolerances(order=args.tol_order)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=None, help="master seed")
    parser.add_argument("--tol-order", type=float, default=1e-10)
    parser.add_argument("--tol-cert", type=float, default=CERT_TOL)


def _matrix_lines(name: str, m: np.ndarray) -> list[str]:
    lines = ["%s =" % name]
    lines.extend("  " + np.array2string(row, precision=17) for row in m)
    return lines


def cmd_scan(args) -> int:
    if args.step <= 0.0:
        print("--step must be positive", file=sys.stderr)
        raise SystemExit(2)
    if args.trials < 1:
        print("--trials must be at least 1", file=sys.stderr)
        raise SystemExit(2)
    tol = _tolerances(args)
    master = args.seed if args.seed is not None else _env_seed()
    rows = []
    consistent = True
    for pi, p in enumerate(_grid(args.pmin, args.pmax, args.step)):
        for qi, q in enumerate(_grid(args.qmin, args.qmax, args.step)):
            label = classify(p, q)
            seed = _cell_seed(master, pi, qi)
            detail = x = y = theta = None
            if label.case is Case.IN_REGION:
                passed, worst = fuzz_point(p, q, args.trials, seed, tol=tol)
                verdict = "fuzz-pass" if passed else "in-region"
                detail = worst
                consistent &= passed
            elif label.case is Case.SCALAR_FAIL:
                witness = find_counterexample(p, q, args.tol_cert, tol)
                verdict = "scalar-fail"
                detail = witness.neg_eigenvalue
            else:
                try:
                    witness = find_counterexample(p, q, args.tol_cert, tol)
                    verdict = "certified-counterexample"
                    detail = witness.neg_eigenvalue
                    x, y, theta = witness.x, witness.y, witness.theta
                except SearchExhaustedError:
                    verdict = "in-region"
                    consistent = False
            rows.append(
                ",".join(
                    [
                        _fmt(float(p)), _fmt(float(q)), str(label), verdict,
                        _fmt(detail), _fmt(x), _fmt(y), _fmt(theta), str(seed),
                    ]
                )
            )
    try:
        with open(args.out, "w", newline="\n") as handle:
            handle.write(CSV_HEADER + "\n")
            for row in rows:
                handle.write(row + "\n")
    except OSError as exc:
        print("cannot write %s: %s" % (args.out, exc), file=sys.stderr)
        return 1
    print("wrote %d rows to %s (%s)" % (len(rows), args.out,
                                        "consistent" if consistent else "INCONSISTENT"))
    return 0 if consistent else 1


def cmd_counterexample(args) -> int:
    tol = _tolerances(args)
    try:
        witness = find_counterexample(args.p, args.q, args.tol_cert, tol)
    except InRegionError:
        print("(%g, %g) lies in the sufficiency region; the order inequality holds"
              % (args.p, args.q))
        return 3
    label = classify(args.p, args.q)
    lines = [
        "exponents: p = %s, q = %s" % (_fmt(float(args.p)), _fmt(float(args.q))),
        "family: %s" % label,
    ]
    if witness.x is not None:
        lines.append("parameters: x = %s, y = %s" % (_fmt(witness.x), _fmt(witness.y)))
    if witness.theta is not None:
        lines.append("rotation angle: %s" % _fmt(witness.theta))
    lines.extend(_matrix_lines("A", witness.a))
    lines.extend(_matrix_lines("B", witness.b))
    lines.append("negative eigenvalue of M_q - M_p: %s" % _fmt(witness.neg_eigenvalue))
    lines.append("witness vector: %s" % np.array2string(witness.witness, precision=17))
    print("\n".join(lines))
    if args.out:
        row = ",".join(
            [
                _fmt(float(args.p)), _fmt(float(args.q)), str(label),
                "certified-counterexample", _fmt(witness.neg_eigenvalue),
                _fmt(witness.x), _fmt(witness.y), _fmt(witness.theta), "0",
            ]
        )
        try:
            with open(args.out, "w", newline="\n") as handle:
                handle.write(CSV_HEADER + "\n" + row + "\n")
        except OSError as exc:
            print("cannot write %s: %s" % (args.out, exc), file=sys.stderr)
            return 1
    return 0


def cmd_choi_table(args) -> int:
    print("p      signs of eig(C(B^p) - C(B)^p), ascending")
    for p, signs in choi_sign_table(_CHOI_POWERS):
        print("%-6g (%s, %s)" % (p, signs[0], signs[1]))
    return 0


def _lemma_routes(args):
    if args.family == "pd-rotation":
        closed = det_coeff_power_pair(args.p, args.q, args.x, args.y).total
        oracle = numeric_det_coeff(pd_rotation_difference(args.p, args.q, args.x, args.y))
    elif args.family == "log-euclidean":
        closed = det_coeff_log_pair(args.q, args.x, args.y).total
        oracle = numeric_det_coeff(pd_rotation_difference(0.0, args.q, args.x, args.y))
    else:
        closed = det_coeff_rank_one(args.p, args.q)
        oracle = numeric_det_coeff(
            rank_one_difference(args.p, args.q),
            orders=rank_one_remainder_orders(args.p, args.q),
        )
    return closed, oracle


def cmd_verify_lemma(args) -> int:
    needs = {"pd-rotation": ("p", "q", "x", "y"),
             "log-euclidean": ("q", "x", "y"),
             "rank-one": ("p", "q")}[args.family]
    for name in needs:
        if getattr(args, name) is None:
            print("--%s is required for family %s" % (name, args.family),
                  file=sys.stderr)
            return 2
    try:
        closed, oracle = _lemma_routes(args)
    except DegenerateFrameError as exc:
        print("degenerate expansion hypotheses: %s" % exc, file=sys.stderr)
        return 4
    gap = abs(closed - oracle.value)
    bound = _LEMMA_GAP_BOUND * (1.0 + abs(closed))
    print("closed form:   %s" % _fmt(closed))
    print("oracle value:  %s (tableau error %.3e)" % (_fmt(oracle.value), oracle.error))
    print("gap:           %.6e (bound %.6e)" % (gap, bound))
    return 0 if gap <= bound else 1


def cmd_fuzz(args) -> int:
    seed = args.seed if args.seed is not None else _env_seed()
    report = FUZZ_TARGETS[args.target](args.trials, seed, _tolerances(args))
    print(report.summary())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powmean",
        description="Matrix power means: region scans, certified counterexamples, "
                    "expansion-coefficient checks and property fuzzing.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    scan = sub.add_parser("scan", help="classify a (p, q) grid and emit a CSV report")
    scan.add_argument("--pmin", type=float, default=-2.0)
    scan.add_argument("--pmax", type=float, default=2.0)
    scan.add_argument("--qmin", type=float, default=-2.0)
    scan.add_argument("--qmax", type=float, default=2.0)
    scan.add_argument("--step", type=float, default=0.5)
    scan.add_argument("--trials", type=int, default=50,
                      help="random pairs per in-region grid point")
    scan.add_argument("--out", default="scan.csv")
    _add_common(scan)
    scan.set_defaults(func=cmd_scan)

    ce = sub.add_parser("counterexample", help="certify one exponent pair")
    ce.add_argument("--p", type=float, required=True)
    ce.add_argument("--q", type=float, required=True)
    ce.add_argument("--out", default=None, help="optional CSV witness dump")
    _add_common(ce)
    ce.set_defaults(func=cmd_counterexample)

    choi = sub.add_parser("choi-table", help="sign table of the compression example")
    _add_common(choi)
    choi.set_defaults(func=cmd_choi_table)

    lemma = sub.add_parser("verify-lemma",
                           help="closed-form determinant coefficient vs oracle")
    lemma.add_argument("--family", required=True,
                       choices=("pd-rotation", "log-euclidean", "rank-one"))
    lemma.add_argument("--p", type=float, default=None)
    lemma.add_argument("--q", type=float, default=None)
    lemma.add_argument("--x", type=float, default=None)
    lemma.add_argument("--y", type=float, default=None)
    _add_common(lemma)
    lemma.set_defaults(func=cmd_verify_lemma)

    fuzz = sub.add_parser("fuzz", help="randomized property suites")
    fuzz.add_argument("target", choices=sorted(FUZZ_TARGETS))
    fuzz.add_argument("--trials", type=int, default=200)
    _add_common(fuzz)
    fuzz.set_defaults(func=cmd_fuzz)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
