"""Command-line front end.

Exit codes: 0 Yes / success, 1 No, 2 error (bad input, budget exceeded,
unsupported method), 3 equivalence mismatch found by ``equivcheck``.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog, harness, io, reductions, solvers
from .errors import CycleFactorError, TooLarge
from .graph import MixedGraph, ParityConstraint

EXIT_YES, EXIT_NO, EXIT_ERROR, EXIT_MISMATCH = 0, 1, 2, 3


class CliError(Exception):
    pass


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _emit_verified(kind, instance, sol, out) -> None:
    """Print ``sol`` only after it passes the definitional verifier."""
    problems = kind.verify(instance, sol)
    if problems:
        raise CliError("internal error: solution failed verification: "
                       + "; ".join(map(str, problems)))
    out.write(kind.dump(sol))


def cmd_solve(args, out) -> int:
    inst = io.parse_instance(_read(args.file))
    constraint = ParityConstraint(args.constraint)
    if isinstance(inst, MixedGraph):
        mixed = bool(inst.edges) and bool(inst.arcs)
        method = args.method
        if method == "auto":
            method = "poly" if constraint is ParityConstraint.ANY and not mixed else "exact"
        if method == "poly":
            if constraint is not ParityConstraint.ANY:
                raise CliError("--method poly only decides --constraint any")
            if mixed:
                raise CliError("--method poly is unavailable on mixed graphs "
                               "(the mixed problem is NP-complete); use --method exact")
            res = solvers.cycle_factor_poly(inst)
        else:
            res = solvers.solve_parity(inst, constraint, args.node_limit)
        kind = catalog.get(constraint.value)
        sol = res.factor
    else:
        if constraint is not ParityConstraint.ANY:
            raise CliError(f"--constraint applies to plain graphs, not {type(inst).__name__}")
        if args.method == "poly":
            raise CliError(f"no polynomial method for {type(inst).__name__}")
        kind = catalog.get(catalog.kind_of(inst))
        sol = kind.solve(inst, args.node_limit)
    if sol is None:
        print("no solution", file=sys.stderr)
        return EXIT_NO
    _emit_verified(kind, inst, sol, out)
    return EXIT_YES


def _source_for(red, path):
    inst = io.parse_instance(_read(path))
    expected = catalog.get(red.source_kind).instance_type
    if not isinstance(inst, expected):
        raise CliError(f"{red.id} expects a {expected.__name__} source, got {type(inst).__name__}")
    return inst


def _reduction(rid):
    try:
        return reductions.get(rid)
    except KeyError as exc:
        raise CliError(exc.args[0]) from None


def cmd_reduce(args, out) -> int:
    red = _reduction(args.reduction)
    result = red.reduce(_source_for(red, args.file))
    out.write(io.serialize_instance(result.target))
    return EXIT_YES


def cmd_mapback(args, out) -> int:
    red = _reduction(args.reduction)
    source = _source_for(red, args.source)
    result = red.reduce(source)
    tgt_kind = catalog.get(red.target_kind)
    tgt_sol = tgt_kind.load(_read(args.solution), result.target)
    src_sol = red.backward(result, tgt_sol)
    _emit_verified(catalog.get(red.source_kind), source, src_sol, out)
    return EXIT_YES


def cmd_equivcheck(args, out) -> int:
    red = _reduction(args.reduction)
    if args.count == "exhaustive":
        count = None
    else:
        try:
            count = int(args.count)
        except ValueError:
            raise CliError("--count takes an integer or 'exhaustive'") from None
    report = harness.equivcheck(red, count, args.max_size, args.seed, jobs=args.jobs,
                                node_limit=args.node_limit or harness.HARNESS_NODE_LIMIT)
    out.write(report.text())
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cyclefactors", description=__doc__.splitlines()[0])
    p.add_argument("--node-limit", type=int, default=None,
                   help="search node budget (default: CYCLEFACTORS_NODE_LIMIT or 10^8)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="decide and print a cycle-factor or source solution")
    s.add_argument("file")
    s.add_argument("--constraint", default="any", choices=[c.value for c in ParityConstraint])
    s.add_argument("--method", default="auto", choices=["auto", "poly", "exact"])
    s.set_defaults(func=cmd_solve)

    r = sub.add_parser("reduce", help="print the reduced instance")
    r.add_argument("reduction")
    r.add_argument("file")
    r.set_defaults(func=cmd_reduce)

    m = sub.add_parser("mapback", help="map a target solution back to the source")
    m.add_argument("reduction")
    m.add_argument("source")
    m.add_argument("solution")
    m.set_defaults(func=cmd_mapback)

    e = sub.add_parser("equivcheck", help="brute-force equivalence check of a reduction")
    e.add_argument("reduction")
    e.add_argument("--count", default="100")
    e.add_argument("--max-size", type=int, default=4)
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--jobs", type=int, default=1)
    e.set_defaults(func=cmd_equivcheck)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_YES
    try:
        return args.func(args, out)
    except TooLarge as exc:
        print(f"error: too large: {exc}", file=sys.stderr)
    except (CycleFactorError, CliError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
