"""Command-line interface.

Subcommands: ``count`` for rational and elliptic counts, ``zcount`` for
divisor-class counts, ``table`` to recompute a reference table, and
``trace`` to emit the derivation tree of a count as text, JSON or DOT.
Exit codes: 0 success, 2 invalid input, 3 unsupported problem.
"""

from __future__ import annotations

import argparse
import os
import re
import sys

from .cache import CacheConflict, InvalidCacheFile, MemoStore
from .engine import Engine, trace as build_trace
from .problems import (
    InvalidProblem,
    Problem,
    UnsupportedProblem,
    ZProblem,
    parse_divisor,
    unmarked_factor,
    validate,
)
from .tables import table_rows
from .trace import render_dot, render_json, render_text

_TANGENCY_RE = re.compile(r"(\d+),(\d+):(\d+)\Z")
_INCIDENCE_RE = re.compile(r"(\d+):(\d+)\Z")


def _gather_tangency(specs, n: int, d: int) -> dict:
    h: dict = {}
    total = 0
    for spec in specs or ():
        mt = _TANGENCY_RE.match(spec)
        if not mt:
            raise InvalidProblem(f"bad --tangency {spec!r}, expected m,e:count")
        m, e, c = (int(g) for g in mt.groups())
        h[(m, e)] = h.get((m, e), 0) + c
        total += m * c
    if total > d:
        raise InvalidProblem(
            f"tangency conditions account for {total} hyperplane intersections, more than the degree {d}"
        )
    if total < d:
        # Remaining intersections with H are free transverse contacts.
        h[(1, n - 1)] = h.get((1, n - 1), 0) + (d - total)
    return h


def _gather_incidence(args) -> dict:
    i: dict = {}
    for spec in args.incidence or ():
        mt = _INCIDENCE_RE.match(spec)
        if not mt:
            raise InvalidProblem(f"bad --incidence {spec!r}, expected e:count")
        e, c = (int(g) for g in mt.groups())
        i[e] = i.get(e, 0) + c
    if args.points:
        i[0] = i.get(0, 0) + args.points
    if args.lines:
        i[1] = i.get(1, 0) + args.lines
    return i


def _load_store(path) -> MemoStore:
    store = MemoStore()
    if path and os.path.exists(path):
        store.load(path)
    return store


def _save_store(store: MemoStore, path) -> None:
    if path:
        store.save(path)


def _check_all_orders(problem, reference: int, divisor_axiom: bool) -> None:
    """Recompute under every degeneration order and first-slot choice
    with fresh memo stores; any disagreement is a hard error."""
    if isinstance(problem, ZProblem):
        slots = [None]
    else:
        p = validate(problem)
        slots = [e for e, _ in p.i if e <= p.n - 2] or [None]
    for order in ("max-e", "min-e"):
        for e in slots:
            eng = Engine(divisor_axiom=divisor_axiom, order=order, check_all_orders=True)
            if e is not None:
                eng.force_first_slot(e)
            value = eng.count(problem)
            if value != reference:
                raise AssertionError(
                    f"order {order} with first slot {e} gives {value}, expected {reference}"
                )


def cmd_count(args) -> int:
    h = _gather_tangency(args.tangency, args.n, args.d)
    i = _gather_incidence(args)
    problem = Problem.make(args.genus, args.n, args.d, h, i)
    store = _load_store(args.cache)
    eng = Engine(store, divisor_axiom=not args.no_divisor_axiom, order=args.degeneration_order)
    value = eng.count(problem)
    if args.check_all_orders:
        _check_all_orders(problem, value, not args.no_divisor_axiom)
    _save_store(store, args.cache)
    if args.unmarked:
        factor = unmarked_factor(problem)
        if value % factor:
            raise AssertionError(f"marking factor {factor} does not divide {value}")
        value //= factor
    print(value)
    return 0


def cmd_zcount(args) -> int:
    i = _gather_incidence(args)
    divisor = parse_divisor(args.divisor)
    problem = ZProblem.make(args.n, args.d, i, divisor)
    store = _load_store(args.cache)
    eng = Engine(store, divisor_axiom=not args.no_divisor_axiom, order=args.degeneration_order)
    value = eng.count(problem)
    if args.check_all_orders:
        _check_all_orders(problem, value, not args.no_divisor_axiom)
    _save_store(store, args.cache)
    print(value)
    return 0


def cmd_table(args) -> int:
    store = _load_store(args.cache)
    eng = Engine(store)
    try:
        rows = table_rows(args.name, eng)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    _save_store(store, args.cache)
    width = max(len(row.label) for row in rows)
    counts = {"PASS": 0, "FAIL": 0, "DISCREPANCY": 0}
    for row in rows:
        counts[row.status] += 1
        line = f"{row.label:<{width}}  printed {row.printed:>12}  computed {row.computed:>12}  {row.status}"
        if row.note:
            line += f"  ({row.note})"
        print(line)
    summary = ", ".join(f"{v} {k}" for k, v in counts.items() if v)
    print(f"{len(rows)} rows: {summary}")
    return 0 if counts["FAIL"] == 0 else 1


def cmd_trace(args) -> int:
    if args.divisor is not None:
        i = _gather_incidence(args)
        problem = ZProblem.make(args.n, args.d, i, parse_divisor(args.divisor))
    else:
        h = _gather_tangency(args.tangency, args.n, args.d)
        i = _gather_incidence(args)
        problem = Problem.make(args.genus, args.n, args.d, h, i)
    store = _load_store(args.cache)
    root = build_trace(
        problem,
        divisor_axiom=not args.no_divisor_axiom,
        order=args.degeneration_order,
        store=store,
    )
    _save_store(store, args.cache)
    if args.format == "json":
        print(render_json(root))
    elif args.format == "dot":
        print(render_dot(root))
    else:
        print(render_text(root))
    return 0


def _add_problem_flags(sub, genus=True):
    if genus:
        sub.add_argument("-g", "--genus", type=int, default=0, help="0 rational, 1 elliptic")
    sub.add_argument("-n", type=int, required=True, help="ambient projective space dimension")
    sub.add_argument("-d", type=int, required=True, help="curve degree")
    sub.add_argument(
        "--incidence",
        action="append",
        metavar="e:count",
        help="marked points on general e-planes (repeatable)",
    )
    sub.add_argument("--points", type=int, default=0, help="shorthand for --incidence 0:k")
    sub.add_argument("--lines", type=int, default=0, help="shorthand for --incidence 1:k")


def _add_engine_flags(sub):
    sub.add_argument("--cache", metavar="PATH", help="load and save computed counts")
    sub.add_argument("--no-divisor-axiom", action="store_true", help="degenerate free markers too")
    sub.add_argument(
        "--degeneration-order",
        choices=("max-e", "min-e"),
        default="max-e",
        help="which admissible incidence slot to specialize first",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvecount",
        description="Exact counts of rational and elliptic curves in projective space.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_count = subs.add_parser("count", help="count curves meeting tangency and incidence conditions")
    _add_problem_flags(p_count)
    p_count.add_argument(
        "--tangency",
        action="append",
        metavar="m,e:count",
        help="contacts of order m with H at points on general e-planes of H (repeatable); "
        "unlisted hyperplane intersections become free transverse contacts",
    )
    p_count.add_argument("--unmarked", action="store_true", help="divide by the relabelings of identical markings")
    p_count.add_argument("--check-all-orders", action="store_true", help="assert all degeneration orders agree")
    _add_engine_flags(p_count)
    p_count.set_defaults(func=cmd_count, incidence=None)

    p_z = subs.add_parser("zcount", help="count elliptic curves with a fixed hyperplane divisor class")
    _add_problem_flags(p_z, genus=False)
    p_z.add_argument("--divisor", required=True, metavar="EXPR", help="e.g. p1+p2+2*l1-p3")
    p_z.add_argument("--check-all-orders", action="store_true", help="assert all degeneration orders agree")
    _add_engine_flags(p_z)
    p_z.set_defaults(func=cmd_zcount, incidence=None)

    p_table = subs.add_parser("table", help="recompute a reference table")
    p_table.add_argument("name", help="ez3, ez4, eqesc-nums, eqesc-full, p3-rational or p3-elliptic-cubics")
    p_table.add_argument("--cache", metavar="PATH", help="load and save computed counts")
    p_table.set_defaults(func=cmd_table)

    p_trace = subs.add_parser("trace", help="emit the derivation tree of a count")
    _add_problem_flags(p_trace)
    p_trace.add_argument(
        "--tangency",
        action="append",
        metavar="m,e:count",
        help="as in count",
    )
    p_trace.add_argument("--divisor", metavar="EXPR", help="trace a divisor-class problem instead")
    p_trace.add_argument("--format", choices=("text", "json", "dot"), default="text")
    _add_engine_flags(p_trace)
    p_trace.set_defaults(func=cmd_trace, incidence=None)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedProblem as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InvalidProblem, InvalidCacheFile, CacheConflict, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
