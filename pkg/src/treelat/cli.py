"""Command-line front end.

Subcommands: ``analyze`` (datum files), ``verdict`` (degree pairs with
symbolic or explicit local actions), ``tables`` (classification data),
``search`` (the big enumeration), and ``verify`` (the bundled check
suite).  Exit codes: 0 success, 1 input or validation error, 2 resource
cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import factorial

from . import permcore
from .classtables import (lps_exceptions, min_index_psl2, simple_235,
                          two_transitive_table, _PSL2_MIN_INDEX_EXCEPTIONS)
from .errors import DatumError, GroupTooLarge, TreelatError
from .permcore import PermGroup
from .verdict import (LocalActionClass, Verdict, classify_2transitive_small,
                      theorem11_bound, theorem12_verdict_from_classes)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CAP = 2

_SYMBOLIC_LABELS = {
    "Sym3": (3, 6, "C3"),
    "Alt4": (4, 12, "C2xC2"),
    "Sym4": (4, 24, "C2xC2"),
    "C5xC4": (5, 20, "C5"),
    "Alt5@5": (5, 60, "Alt(5)"),
    "Sym5@5": (5, 120, "Alt(5)"),
    "PSL25@6": (6, 60, "Alt(5)"),
    "PGL25@6": (6, 120, "Alt(5)"),
    "Alt6": (6, 360, "Alt(6)"),
    "Sym6": (6, 720, "Alt(6)"),
}


def _element_cap():
    raw = os.environ.get("TREELAT_ELEMENT_CAP")
    if raw is None:
        return permcore.DEFAULT_ELEMENT_CAP
    cap = int(raw)
    if cap <= 0:
        raise ValueError("TREELAT_ELEMENT_CAP must be positive")
    return cap


def _local_class(spec, degree):
    """Interpret --f1/--f2: 'Alt'/'Sym', a table label, or a comma-joined
    generator list in cycle notation."""
    if spec in ("Alt", "Sym"):
        order = factorial(degree) // (2 if spec == "Alt" else 1)
        if degree <= 6:
            from .groupzoo import alternating, symmetric

            group = alternating(degree) if spec == "Alt" else symmetric(degree)
            return classify_2transitive_small(group)
        label = "AltD" if spec == "Alt" else "SymD"
        return LocalActionClass(degree, order, label, f"Alt({degree})")
    if spec in _SYMBOLIC_LABELS:
        d, order, socle = _SYMBOLIC_LABELS[spec]
        return LocalActionClass(d, order, spec, socle)
    if spec.startswith("("):
        group = PermGroup.from_cycles(degree, *spec.split(","))
        cap = _element_cap()
        if group.order() > cap:
            raise GroupTooLarge(group.order(), cap)
        return classify_2transitive_small(group)
    raise ValueError(f"unrecognized local action spec {spec!r}")


def _emit(payload, text, as_json):
    print(json.dumps(payload, indent=2) if as_json else text)


def _verdict_text(v):
    if not isinstance(v, Verdict):
        return str(v)
    return f"{v.by}: {v.describe()}"


def cmd_analyze(args):
    from .vhdatum import analyze, parse_datum

    try:
        with open(args.file) as fh:
            text = fh.read()
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    try:
        datum = parse_datum(text)
        cap = _element_cap()
        if factorial(max(datum.degrees)) > cap:
            raise GroupTooLarge(factorial(max(datum.degrees)), cap)
        report = analyze(datum)
    except DatumError as err:
        print(f"invalid datum: {err}", file=sys.stderr)
        return EXIT_INPUT
    except GroupTooLarge as err:
        print(f"cap exceeded: {err}", file=sys.stderr)
        return EXIT_CAP
    d = report.as_dict()
    lines = [
        f"degrees: {report.degrees[0]} x {report.degrees[1]}",
        f"F1: order {report.f1.order()} [{report.class1.label}]",
        f"F2: order {report.f2.order()} [{report.class2.label}]",
        f"criterion: {_verdict_text(report.theorem12)}",
        f"degree bound: {_verdict_text(report.theorem11)}",
        f"just-infinite: {report.hji}",
        f"overall: {report.overall}",
    ]
    _emit(d, "\n".join(lines), args.json)
    return EXIT_OK


def cmd_verdict(args):
    try:
        c1 = _local_class(args.f1, args.d1)
        c2 = _local_class(args.f2, args.d2)
    except (ValueError, TreelatError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    v = theorem12_verdict_from_classes(args.d1, args.d2, c1, c2)
    payload = {"status": v.status, "by": v.by,
               "matched_cases": [{"case": m.case, "witness": m.witness}
                                 for m in v.matched_cases]}
    if v.failure is not None:
        payload["failure"] = v.failure.reason
    _emit(payload, _verdict_text(v), args.json)
    return EXIT_OK


def cmd_tables(args):
    name = args.table
    if name == "two-transitive":
        rows = [{"degree": r.degree, "order": r.order, "name": r.name,
                 "socle": r.socle_name, "socle_order": r.socle_order}
                for r in two_transitive_table()]
        text = "\n".join(f"{r['degree']}\t{r['order']}\t{r['name']}\t"
                         f"{r['socle']}" for r in rows)
    elif name == "galois":
        rows = [{"q": q, "min_index": min_index_psl2(q)}
                for q in sorted(_PSL2_MIN_INDEX_EXCEPTIONS)]
        text = "\n".join(f"q={r['q']}\tmin index {r['min_index']}"
                         for r in rows)
    elif name == "simple235":
        rows = [{"name": e.name, "order": e.order} for e in simple_235()]
        text = "\n".join(f"{r['name']}\t{r['order']}" for r in rows)
    else:  # lps
        rows = [{"row": r.index, "group": r.group, "order": r.order}
                for r in lps_exceptions()]
        text = "\n".join(f"{r['row']}\t{r['group']}\t{r['order']}"
                         for r in rows)
    _emit(rows, text, args.json)
    return EXIT_OK


def cmd_search(args):
    from .desksearch import gap_replication_11_4

    report = gap_replication_11_4(threads=args.threads)
    text = (f"candidates: {report.total_candidates}\n"
            + "\n".join(f"{k}: {v}" for k, v in report.counts.items())
            + f"\nsurvivors: {len(report.survivors)}"
            + f"\nwall time: {report.wall_time:.1f}s")
    _emit(report.as_dict(), text, args.json)
    return EXIT_OK if not report.survivors else EXIT_INPUT


def _verify_thompson(_args):
    from .desksearch import thompson_check

    rep = thompson_check()
    ok = (rep.census_size == 122 and rep.trivial_intersection_pairs == 241
          and rep.counterexample is None)
    print(f"census {rep.census_size} (2 factors + {rep.diagonal_count} "
          f"diagonals), trivial-intersection pairs "
          f"{rep.trivial_intersection_pairs}, counterexample: "
          f"{'none' if rep.counterexample is None else 'FOUND'}")
    return ok


def _verify_wreath(args):
    from .desksearch import wreath_order_oracle

    d = args.d
    bound = theorem11_bound(d)
    oracle = wreath_order_oracle(d)
    ok = bound == oracle
    print(f"d={d}: closed form {'==' if ok else '!='} wreath order "
          f"({len(str(bound))} digits)")
    return ok


def _verify_remark_small(_args):
    from .productcheck import (product_orbit_report,
                               sym5_complete5_petersen_instance,
                               sym5_complete6_petersen_instance,
                               theta4_cube_instance)

    ok = True
    for name, inst, expect in (
            ("theta(4) x cube", theta4_cube_instance(), [(16, 3)]),
            ("complete(6) x petersen", sym5_complete6_petersen_instance(),
             [(60, 2)]),
            ("complete(5) x petersen", sym5_complete5_petersen_instance(),
             [(20, 6), (30, 4)])):
        got = product_orbit_report(inst)
        flag = "ok" if got == expect else "MISMATCH"
        ok &= got == expect
        print(f"{name}: orbits {got} [{flag}]")
    return ok


def _verify_gap(args):
    from .desksearch import gap_replication_11_4

    rep = gap_replication_11_4(threads=args.threads)
    ok = rep.total_candidates == factorial(11) and not rep.survivors
    print(f"gap-11-4: {rep.total_candidates} candidates, "
          f"{len(rep.survivors)} survivors, {rep.wall_time:.0f}s")
    return ok


def cmd_verify(args):
    steps = {
        "thompson": [_verify_thompson],
        "wreath-bound": [_verify_wreath],
        "remark-small": [_verify_remark_small],
        "gap-11-4": [_verify_gap],
        "all": [_verify_thompson, _verify_wreath, _verify_remark_small],
    }[args.check]
    if args.check == "all" and args.full:
        steps = steps + [_verify_gap]
    ok = True
    for step in steps:
        ok &= step(args)
    print("verify: " + ("PASS" if ok else "FAIL"))
    return EXIT_OK if ok else EXIT_INPUT


def build_parser():
    parser = argparse.ArgumentParser(
        prog="treelat",
        description="irreducibility criteria for lattices acting on "
                    "products of two trees")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze a datum file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verdict", help="criterion verdict for a degree pair")
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    p.add_argument("--f1", required=True,
                   help="Alt, Sym, a table label, or generators in cycle "
                        "notation (comma separated)")
    p.add_argument("--f2", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verdict)

    p = sub.add_parser("tables", help="print classification tables")
    p.add_argument("table", choices=["two-transitive", "galois",
                                     "simple235", "lps"])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("search", help="run the desk-scale enumeration")
    p.add_argument("job", choices=["gap-11-4"])
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="run bundled verification checks")
    p.add_argument("check", choices=["all", "thompson", "wreath-bound",
                                     "remark-small", "gap-11-4"])
    p.add_argument("--d", type=int, default=3,
                   help="degree for wreath-bound")
    p.add_argument("--full", action="store_true",
                   help="include the long enumeration in 'all'")
    p.add_argument("--threads", type=int, default=4)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        _element_cap()
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except GroupTooLarge as err:
        print(f"cap exceeded: {err}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
