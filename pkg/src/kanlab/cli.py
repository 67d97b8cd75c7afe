"""Command-line front end.

Subcommands: interval, check, kan, roundtrip, transport, fib-check.
Exit codes: 0 success / positive verdict, 1 validation failure or negative
verdict, 2 parse error, 3 search budget exhausted.  KANLAB_BOUND overrides
the default bound of 2.
"""

from __future__ import annotations

import argparse
import os
import sys

from .category import DimSet, canonical_dims
from .cubical import (
    FiniteCubicalSet,
    check_functor_laws,
    codiscrete_nerve,
    corner_values,
    corners,
    geometric_of_algebraic,
    minimal_interval,
)
from .boxes import (
    GeomBox,
    box_projection,
    canonical_shapes,
    enumerate_boxes,
    nerve,
    realize,
    sieve_members,
)
from .errors import (
    BudgetExhausted,
    DimensionOverflow,
    KanlabError,
    ParseError,
)
from .fibration import (
    check_map_naturality,
    check_uniform_fib,
    fib_box_projection,
    is_kan_fibration,
    synthesize_uniform_fib,
)
from .kan import check_section_property, check_uniform, is_kan, synthesize_uniform
from .serialize import (
    box_to_dict,
    detect_file_kind,
    filling_table_to_list,
    load_cubical_set,
    load_fib_filling_table,
    load_filling_table,
    load_map,
    save_json,
    to_dot,
)

BUILTINS = {
    "minimal-interval": minimal_interval,
    "codiscrete-interval": lambda bound: codiscrete_nerve(("0", "1"), bound),
}


def default_bound() -> int:
    return int(os.environ.get("KANLAB_BOUND", "2"))


def _resolve_set(args) -> FiniteCubicalSet:
    if getattr(args, "builtin", None):
        return BUILTINS[args.builtin](args.bound)
    if getattr(args, "path", None):
        return load_cubical_set(args.path)
    raise ParseError("give an input file or --builtin")


def _print_report(report) -> int:
    if report.ok:
        print("OK")
        return 0
    for line in report.lines():
        print(line)
    return 1


def cmd_interval(args) -> int:
    if args.bound > 3:
        raise DimensionOverflow("full enumeration output is limited to bound <= 3")
    X = BUILTINS[f"{args.kind}-interval"](args.bound)
    for n in range(X.bound + 1):
        carrier = X.carrier(n)
        print(f"dim {n}: {len(carrier)} cubes")
        if n > 2:
            continue
        I = canonical_dims(n)
        for c in carrier:
            cs = corner_values(X, I, c)
            annotated = " ".join(
                f"({','.join(map(str, v))})={val}" for v, val in zip(corners(n), cs)
            )
            print(f"  {c}  corners: {annotated}" if n else f"  {c}")
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(to_dot(X))
        print(f"wrote {args.dot}")
    return 0


def cmd_check(args) -> int:
    kind = detect_file_kind(args.path)
    if kind == "set":
        X = load_cubical_set(args.path)
        print(f"cubical set: bound {X.bound}, sizes {[len(c) for c in X.carriers]}")
        return _print_report(check_functor_laws(X))
    if kind == "map":
        p = load_map(args.path)
        print(f"cubical map: bound {p.bound}")
        return _print_report(check_map_naturality(p))
    raise ParseError(f"{args.path} is neither a cubical set nor a map")


def cmd_kan(args) -> int:
    X = _resolve_set(args)
    if args.synthesize:
        table = synthesize_uniform(X, args.budget)
        if table is None:
            print("NO UNIFORM FILLING (proven nonexistent)")
            return 1
        records = filling_table_to_list(table)
        if args.out:
            save_json(records, args.out)
            print(f"table written: {args.out} ({len(records)} boxes)")
        else:
            print(f"table synthesized ({len(records)} boxes)")
        if args.uniform:
            report = check_uniform(X, table)
            print(f"uniformity {'OK' if report.ok else 'FAILED'}")
            return 0 if report.ok else 1
        return 0
    if args.uniform:
        if not args.table:
            raise ParseError("--uniform needs --table or --synthesize")
        table = load_filling_table(args.table, X)
        section = check_section_property(table)
        report = check_uniform(X, table)
        for line in section.lines() + report.lines():
            print(line)
        print(f"section {'OK' if section.ok else 'FAILED'}, uniformity {'OK' if report.ok else 'FAILED'}")
        return 0 if section.ok and report.ok else 1
    verdict = is_kan(X)
    if verdict.kan:
        print("KAN")
        return 0
    print("NOT KAN")
    print("witness box:")
    save = box_to_dict(verdict.witness)
    print(f"  shape: {save['shape']}")
    for key, value in sorted(save["faces"].items()):
        print(f"  face {key}: {value}")
    return 1


def cmd_roundtrip(args) -> int:
    X = _resolve_set(args)
    checked = 0
    failures = []
    for shape in canonical_shapes(min(X.bound + 1, 3)):
        if len(shape.included) > 1 or len(shape.extra) > 1:
            continue
        for b in enumerate_boxes(X, shape):
            beta = realize(X, b)
            if nerve(beta) != b:
                failures.append(f"nerve(realize(.)) != id at {b}")
            checked += 1
    for shape in canonical_shapes(X.bound):
        dims = shape.dims
        for c in X.carrier(len(dims)):
            kappa = geometric_of_algebraic(X, dims, c)
            restricted = GeomBox(
                X,
                shape,
                {
                    k: {m: kappa.value(m) for m in sieve_members(shape, canonical_dims(k))}
                    for k in range(X.bound + 1)
                },
            )
            if nerve(restricted) != box_projection(X, shape, c):
                failures.append(f"projection compatibility fails at {c} of shape {shape}")
            checked += 1
    for line in failures:
        print(line)
    if failures:
        return 1
    print(f"OK: {checked} boxes checked")
    return 0


def cmd_transport(args) -> int:
    from .fibration import transport

    p = load_map(args.map)
    table = load_fib_filling_table(args.table, p)
    destination = transport(p, table, args.line, args.point)
    print(destination)
    return 0


def cmd_fib_check(args) -> int:
    p = load_map(args.map)
    report = check_map_naturality(p)
    if not report.ok:
        for line in report.lines():
            print(line)
        return 1
    if args.synthesize:
        table = synthesize_uniform_fib(p, args.budget)
        if table is None:
            print("NO UNIFORM FILLING (proven nonexistent)")
            return 1
        records = filling_table_to_list(table)
        if args.out:
            save_json(records, args.out)
            print(f"table written: {args.out} ({len(records)} boxes)")
        else:
            print(f"table synthesized ({len(records)} boxes)")
        report = check_uniform_fib(p, table)
        print(f"uniformity {'OK' if report.ok else 'FAILED'}")
        return 0 if report.ok else 1
    verdict = is_kan_fibration(p)
    if verdict.kan:
        print("KAN FIBRATION")
        return 0
    print("NOT A KAN FIBRATION")
    print(f"witness: {verdict.witness}")
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kanlab",
        description="Finite cubical sets, open boxes, and uniform Kan filling.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_bound(p):
        p.add_argument("--bound", type=int, default=default_bound(),
                       help="truncation bound (default 2, or KANLAB_BOUND)")

    p = sub.add_parser("interval", help="print a built-in interval's carriers")
    p.add_argument("kind", choices=["minimal", "codiscrete"])
    add_bound(p)
    p.add_argument("--dot", metavar="PATH", help="also write a DOT graph of the carriers")
    p.set_defaults(func=cmd_interval)

    p = sub.add_parser("check", help="validate a cubical-set or map file")
    p.add_argument("path")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("kan", help="Kan verdicts and uniform filling tables")
    p.add_argument("path", nargs="?", help="cubical-set file")
    p.add_argument("--builtin", choices=sorted(BUILTINS))
    add_bound(p)
    p.add_argument("--uniform", action="store_true", help="check uniformity of a table")
    p.add_argument("--synthesize", action="store_true", help="search for a uniform table")
    p.add_argument("--budget", type=int, default=10**6)
    p.add_argument("--table", metavar="PATH", help="filling table to check")
    p.add_argument("--out", metavar="PATH", help="where to write a synthesized table")
    p.set_defaults(func=cmd_kan)

    p = sub.add_parser("roundtrip", help="verify nerve/realization and projections")
    p.add_argument("path", nargs="?")
    p.add_argument("--builtin", choices=sorted(BUILTINS))
    add_bound(p)
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("transport", help="transport a point along a base line")
    p.add_argument("--map", required=True)
    p.add_argument("--table", required=True, help="fibration filling table")
    p.add_argument("--line", required=True, help="base line cube id")
    p.add_argument("--point", required=True, help="fiber point id over the line's start")
    p.set_defaults(func=cmd_transport)

    p = sub.add_parser("fib-check", help="Kan fibration verdicts and tables")
    p.add_argument("--map", required=True)
    p.add_argument("--synthesize", action="store_true")
    p.add_argument("--budget", type=int, default=10**6)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_fib_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except BudgetExhausted as e:
        print(f"budget exhausted: {e}", file=sys.stderr)
        return 3
    except KanlabError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
