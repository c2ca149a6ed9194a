"""Command-line interface.

Exit codes: 0 success, 2 invalid input, 3 hard scan limit exceeded,
4 a verification found a discrepancy.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable, Optional, Sequence

from . import jfrobenius, oracle, reduction, search
from .core import (
    GeneratorTuple,
    HardLimitExceeded,
    InvalidInput,
    JFrobeniusValue,
    OracleTooExpensive,
    parse_tuple,
    tuple_sum,
)
from .denumerant import denumerant, positive_denumerant, denumerant_table, positive_denumerant_table

EXIT_OK, EXIT_INVALID, EXIT_HARD_LIMIT, EXIT_VERIFY = 0, 2, 3, 4


def _dumps(obj: dict) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _pos(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _tuple_arg(text: str) -> GeneratorTuple:
    try:
        return parse_tuple(text)
    except InvalidInput as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _record(op: str, t: GeneratorTuple, v: JFrobeniusValue, method: str, scan_limit) -> dict:
    return {
        "value": v.as_int(),
        "exists": v.exists,
        "operation": op,
        "tuple": list(t.generators),
        "j": v.j,
        "kind": v.kind,
        "method": method,
        "scan_limit": scan_limit,
    }


def _pick_method(t: GeneratorTuple, method: str) -> str:
    if method != "auto":
        return method
    if t.k >= 2 and not reduction.reduce_fully(t).trivial:
        return "reduced"
    return "dp"


def _solve(t: GeneratorTuple, j: int, kind: str, method: str):
    """Return (value, method actually used, scan limit or None)."""
    method = _pick_method(t, method)
    if method == "oracle":
        fn = oracle.oracle_g_j if kind == "g" else oracle.oracle_f_j
        return fn(t, j), method, None
    if method == "reduced":
        fn = reduction.g_sequence_reduced if kind == "g" else reduction.f_sequence_reduced
    else:
        fn = jfrobenius.g_sequence if kind == "g" else jfrobenius.f_sequence
    res = fn(t, j)
    return res.values[j], method, res.scan_limit


def cmd_jvalue(args, out) -> int:
    kind = "g" if args.command == "gj" else "f"
    v, method, scan = _solve(args.tuple, args.j, kind, args.method)
    if args.format == "json":
        out(_dumps(_record(args.command, args.tuple, v, method, scan)))
    else:
        out(str(v.as_int()))
    return EXIT_OK


def cmd_denumerant(args, out) -> int:
    fn = positive_denumerant if args.positive else denumerant
    c = fn(args.tuple, args.n)
    if args.format == "json":
        out(_dumps({
            "value": c,
            "operation": "denumerant",
            "tuple": list(args.tuple.generators),
            "n": args.n,
            "positive": args.positive,
        }))
    else:
        out(str(c))
    return EXIT_OK


def cmd_table(args, out) -> int:
    t, J = args.tuple, args.max_j
    g = reduction.g_sequence_auto(t, J)
    f = jfrobenius.f_sequence(t, J)
    rows = [(j, g.values[j], f.values[j]) for j in range(J + 1)]
    if args.format == "json":
        for j, gv, fv in rows:
            out(_dumps({
                "tuple": list(t.generators),
                "j": j,
                "g_j": gv.as_int(),
                "g_exists": gv.exists,
                "f_j": fv.as_int(),
                "f_exists": fv.exists,
            }))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_NONNUMERIC)
        buf.write("tuple,j,g_j,g_exists,f_j,f_exists\n")
        tf = " ".join(map(str, t.generators))
        for j, gv, fv in rows:
            w.writerow([tf, j, gv.as_int(), int(gv.exists), fv.as_int(), int(fv.exists)])
        out(buf.getvalue().rstrip("\n"))
    else:
        out(f"tuple {t}  K={tuple_sum(t)}")
        out(f"{'j':>4} {'g_j':>10} {'f_j':>10}")
        for j, gv, fv in rows:
            out(f"{j:>4} {gv.as_int():>10} {fv.as_int():>10}")
    return EXIT_OK


def cmd_reduce(args, out) -> int:
    chain = reduction.reduce_fully(args.tuple)
    if args.format == "json":
        out(_dumps({
            "tuple": list(chain.original.generators),
            "steps": [
                {
                    "pivot_index": s.pivot_index,
                    "pivot_value": s.pivot_value,
                    "divisor": s.divisor,
                    "reduced": list(s.reduced_tuple.generators),
                }
                for s in chain.steps
            ],
            "reduced": list(chain.reduced.generators),
            "scale": chain.scale,
            "offset": chain.offset,
        }))
    else:
        out(f"tuple {chain.original}")
        for i, s in enumerate(chain.steps, 1):
            out(f"step {i}: {s}")
        out(f"reduced {chain.reduced}")
        out(f"g_j{chain.original} = {chain.scale}*g_j{chain.reduced} + {chain.offset}")
        out(f"f_j{chain.original} = {chain.scale}*f_j{chain.reduced}")
    return EXIT_OK


def cmd_corollary(args, out) -> int:
    a1, a2, m = args.a1, args.a2, args.m
    t = reduction.make_tuple([a1, a2, m * a1 * a2])
    solved = jfrobenius.g_sequence(t, args.max_j).values
    status = EXIT_OK
    out(f"tuple {t}")
    for j in range(args.max_j + 1):
        c = reduction.corollary_triple(a1, a2, m, j)
        ok = c == solved[j]
        status = status if ok else EXIT_VERIFY
        out(f"j={j} closed_form={c.as_int()} solver={solved[j].as_int()} {'ok' if ok else 'MISMATCH'}")
    return status


def _verify_lines(t: GeneratorTuple, J: int, n_max: int) -> list[tuple[bool, str]]:
    checks: list[tuple[bool, str]] = []
    K = tuple_sum(t)

    try:
        nonneg = denumerant_table(t, n_max, 1 << 30).tolist()
        pos = positive_denumerant_table(t, n_max, 1 << 30).tolist()
        bad = [n for n in range(n_max + 1) if nonneg[n] != oracle.count_representations(t, n)]
        bad += [n for n in range(n_max + 1) if pos[n] != oracle.count_representations(t, n, True)]
        checks.append((not bad, f"dp counts == enumeration for n <= {n_max}" + (f" (first bad n={bad[0]})" if bad else "")))
    except OracleTooExpensive as e:
        checks.append((True, f"dp counts vs enumeration skipped: {e}"))

    g = jfrobenius.g_sequence(t, J)
    f = jfrobenius.f_sequence(t, J)
    try:
        og = [oracle.oracle_g_j(t, j) for j in range(J + 1)]
        ok = all(og[j] == g.values[j] for j in range(J + 1))
        checks.append((ok, f"g_j (dp) == g_j (oracle) for j <= {J}"))
    except OracleTooExpensive as e:
        checks.append((True, f"g_j vs oracle skipped: {e}"))

    if t.k >= 2:
        for p in range(t.k):
            step = reduction.find_reduction(t, p)
            if step is None:
                continue
            rg = jfrobenius.g_sequence(step.reduced_tuple, J)
            rf = jfrobenius.f_sequence(step.reduced_tuple, J)
            ok_g = all(
                g.values[j] == JFrobeniusValue.from_extended(
                    None if rg.extended[j] is None else step.apply(rg.extended[j]), j)
                for j in range(J + 1)
            )
            ok_f = all(
                f.values[j] == JFrobeniusValue.from_extended(
                    None if rf.extended[j] is None else step.divisor * rf.extended[j], j, "f")
                for j in range(J + 1)
            )
            checks.append((ok_g, f"gcd reduction identity for g at pivot {p} (d={step.divisor})"))
            checks.append((ok_f, f"scaling identity for f at pivot {p} (d={step.divisor})"))

    ok = all(
        (g.extended[j] is None and f.extended[j] is None)
        or (g.extended[j] is not None and f.extended[j] == g.extended[j] + K)
        for j in range(J + 1)
    )
    ok = ok and all(
        f.values[j] == reduction.f_from_g(g.values[j], K) for j in range(J + 1) if g.values[j].exists
    )
    checks.append((ok, f"shift relation f_j = g_j + {K}"))

    failed = []
    for j in range(J + 1):
        res = oracle.verify_lemma_witness(t, j, 0, f.values[j])
        if not res.ok:
            failed.append(j)
    checks.append((not failed, "lemma witness for every present f_j" + (f" (failed j={failed})" if failed else "")))
    return checks


def cmd_verify(args, out) -> int:
    checks = _verify_lines(args.tuple, args.max_j, args.n_max)
    for ok, msg in checks:
        out(f"{'PASS' if ok else 'FAIL'} {msg}")
    return EXIT_OK if all(ok for ok, _ in checks) else EXIT_VERIFY


def _emit_report(report: search.SearchReport, args, out) -> None:
    text = {"csv": report.to_csv, "json": report.to_json_lines, "text": report.to_text}[args.format]()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        out(report.to_text().rstrip("\n").splitlines()[0] + f" -> {args.out}")
    else:
        out(text.rstrip("\n"))
    print(f"elapsed {report.elapsed:.2f}s", file=sys.stderr)


def cmd_search_inversions(args, out) -> int:
    report = search.search_inversions(args.k, args.max_gen, args.max_j, workers=args.workers)
    _emit_report(report, args, out)
    return EXIT_OK


def cmd_check_conjecture(args, out) -> int:
    report = search.conjecture_g1_gt_g0(args.k, args.max_gen, workers=args.workers)
    _emit_report(report, args, out)
    if report.counterexamples:
        print(f"WARNING: {len(report.counterexamples)} counterexample(s) to g_1 > g_0", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jfrob", description="Exact j-Frobenius number solver")
    sub = p.add_subparsers(dest="command", required=True)

    def add_tuple(sp):
        sp.add_argument("--tuple", type=_tuple_arg, required=True, help="comma-separated generators, e.g. 3,5,8")

    def add_format(sp, choices=("text", "json")):
        sp.add_argument("--format", choices=choices, default="text")

    sp = sub.add_parser("denumerant", help="number of representations of n")
    add_tuple(sp)
    sp.add_argument("--n", type=_nonneg, required=True)
    sp.add_argument("--positive", action="store_true", help="count strictly positive representations")
    add_format(sp)
    sp.set_defaults(func=cmd_denumerant)

    for name in ("gj", "fj"):
        sp = sub.add_parser(name, help=f"{name[0]}_j of a tuple")
        add_tuple(sp)
        sp.add_argument("--j", type=_nonneg, required=True)
        sp.add_argument("--method", choices=("auto", "dp", "reduced", "oracle"), default="auto")
        add_format(sp)
        sp.set_defaults(func=cmd_jvalue)

    sp = sub.add_parser("table", help="g_j and f_j for j = 0..max-j")
    add_tuple(sp)
    sp.add_argument("--max-j", type=_nonneg, required=True)
    add_format(sp, ("text", "csv", "json"))
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("reduce", help="show the gcd reduction chain")
    add_tuple(sp)
    add_format(sp)
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("corollary", help="closed forms for (a1, a2, m*a1*a2) against the solver")
    sp.add_argument("--a1", type=_pos, required=True)
    sp.add_argument("--a2", type=_pos, required=True)
    sp.add_argument("--m", type=_pos, required=True)
    sp.add_argument("--max-j", type=_nonneg, required=True)
    sp.set_defaults(func=cmd_corollary)

    sp = sub.add_parser("verify", help="cross-check solvers, identities and oracle")
    add_tuple(sp)
    sp.add_argument("--max-j", type=_nonneg, required=True)
    sp.add_argument("--n-max", type=_nonneg, default=300)
    sp.set_defaults(func=cmd_verify)

    for name, func in (("search-inversions", cmd_search_inversions), ("check-conjecture", cmd_check_conjecture)):
        sp = sub.add_parser(name)
        sp.add_argument("--k", type=_pos, required=True)
        sp.add_argument("--max-gen", type=_pos, required=True)
        if name == "search-inversions":
            sp.add_argument("--max-j", type=_nonneg, required=True)
        sp.add_argument("--out", default=None)
        sp.add_argument("--workers", type=_pos, default=1)
        add_format(sp, ("text", "csv", "json"))
        sp.set_defaults(func=func)
    return p


def run(argv: Optional[Sequence[str]] = None, out: Optional[Callable[[str], None]] = None) -> int:
    out = out or print
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except HardLimitExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_HARD_LIMIT
    except (InvalidInput, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
