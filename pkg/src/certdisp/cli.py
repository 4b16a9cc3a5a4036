"""Command-line interface: ``certdisp solve|verify|generate|bench``.

Exit codes: 0 success, 1 infeasible or failed verification, 2 malformed input,
3 unsupported instance class.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import bench
from .dispersal import first_violation
from .dp import DEFAULT_DEGREE_CAP
from .errors import (CapExceededError, CertDispError, DisconnectedError, GraphError,
                     UnsupportedInstanceError)
from .formats import (ParseError, parse_dispersal, parse_instance, serialize_dispersal,
                      serialize_instance, write_atomic)
from .generate import KINDS, generate_instance
from .oracle import brute_force_mcd
from .solvers import SOLVERS, SolverBug, solve
from .steiner import DEFAULT_TERMINAL_CAP

EXIT_OK, EXIT_INFEASIBLE, EXIT_MALFORMED, EXIT_UNSUPPORTED = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        write_atomic(out, text)
    else:
        sys.stdout.write(text)


def cmd_solve(args: argparse.Namespace) -> int:
    inst = parse_instance(_read(args.instance))
    report = solve(inst.graph, inst.requests, args.solver, args.degree_cap, args.star_cap,
                   args.mode, with_oracle=args.oracle)
    if args.format == "json":
        print(report.to_json(timing=not args.no_timing))
    else:
        print(report.to_text())
    if args.dispersal_out:
        write_atomic(args.dispersal_out, serialize_dispersal(report.dispersal))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    inst = parse_instance(_read(args.instance))
    g, r = inst.graph, inst.requests
    d = parse_dispersal(_read(args.dispersal), g.n)
    d.validate(g)
    bad = first_violation(g, d, r)
    rec: dict = {"feasible": bad is None, "cost": d.cost(),
                 "violated": list(bad) if bad else None}
    if args.oracle:
        best = brute_force_mcd(g, r).cost
        rec["oracle_cost"] = best
        rec["gap"] = d.cost() - best
    if args.format == "json":
        print(json.dumps(rec, separators=(",", ":")))
    else:
        print(f"feasible: {'yes' if bad is None else 'no'}")
        print(f"cost: {d.cost()}")
        if bad is not None:
            print(f"violated request: {bad[0]} {bad[1]}")
        if args.oracle:
            print(f"oracle cost: {rec['oracle_cost']} (gap {rec['gap']})")
    return EXIT_OK if bad is None else EXIT_INFEASIBLE


def cmd_generate(args: argparse.Namespace) -> int:
    inst = generate_instance(args.kind, args.n, args.seed, requests=args.requests,
                             delta=args.delta, extra_edges=args.extra_edges)
    _emit(serialize_instance(inst), args.output)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    sizes = [tuple(int(x) for x in s.split(",")) for s in args.size] if args.size else bench.DEFAULT_SIZES
    rows = bench.sweep(sizes, args.seed, args.runs)
    table = bench.format_table(rows)
    print(table)
    if args.output:
        write_atomic(args.output, table + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="certdisp", description="Minimum certificate dispersal solvers")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve an instance file")
    s.add_argument("instance", help="instance file, or - for stdin")
    s.add_argument("--solver", choices=SOLVERS, default="auto")
    s.add_argument("--mode", choices=("auto", "exact", "approx"), default="auto",
                   help="Steiner sub-solver for the star and approx solvers")
    s.add_argument("--degree-cap", type=int, default=DEFAULT_DEGREE_CAP)
    s.add_argument("--star-cap", type=int, default=DEFAULT_TERMINAL_CAP,
                   help="largest terminal count solved exactly")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("--no-timing", action="store_true", help="omit wall time from json output")
    s.add_argument("--oracle", action="store_true", help="also run the brute-force oracle")
    s.add_argument("--dispersal-out", help="write the dispersal file here")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a dispersal file against an instance")
    v.add_argument("instance")
    v.add_argument("dispersal")
    v.add_argument("--oracle", action="store_true")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(func=cmd_verify)

    gen = sub.add_parser("generate", help="write a random instance")
    gen.add_argument("kind", choices=KINDS)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--requests", type=int)
    gen.add_argument("--delta", type=int, help="star degree / request-tree degree cap")
    gen.add_argument("--extra-edges", type=int)
    gen.add_argument("-o", "--output")
    gen.set_defaults(func=cmd_generate)

    b = sub.add_parser("bench", help="time the tree-graph solver")
    b.add_argument("--size", action="append", metavar="N,R",
                   help="instance size, repeatable (default 1000,1000 and 4000,4000)")
    b.add_argument("--seed", type=int, default=bench.DEFAULT_SEED)
    b.add_argument("--runs", type=int, default=5)
    b.add_argument("-o", "--output", help="also write the table here")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, GraphError, DisconnectedError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except (UnsupportedInstanceError, CapExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except SolverBug as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except CertDispError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
