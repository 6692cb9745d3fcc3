"""Command-line front end: generate / solve / verify / bench / bound.

Exit codes: 0 positive verdict (or success), 1 negative verdict, 2 usage or
malformed input, 3 I/O failure, 4 solver/oracle disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import bounds, coverage, piercing
from .core import (
    CoverageInstance,
    InstanceError,
    Permutation,
    PiercingInstance,
    QueryCounter,
    dumps_instance,
    loads_instance,
    validate,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_DISAGREE = 4

GENERATE_FAMILIES = ("chain", "staircase", "staircase-literal", "disjoint",
                     "random-coverage", "random-piercing")


def _generate_instance(family: str, n: int, seed: int):
    rng = np.random.RandomState(seed & 0xFFFFFFFF)
    if family == "chain":
        perm = Permutation(tuple(int(v) for v in rng.permutation(n) + 1))
        return coverage.gen_chain(perm)
    if family == "staircase":
        return piercing.gen_staircase_minimal(n)
    if family == "staircase-literal":
        return piercing.gen_staircase_literal(n, bounds._random_parity_perm(n, rng))
    if family == "disjoint":
        return coverage.gen_disjoint(n)
    if family == "random-coverage":
        return coverage.gen_random_coverage(n, rng)
    if family == "random-piercing":
        return piercing.gen_random_piercing(n, rng)
    raise ValueError(f"unknown family {family!r}")


def cmd_generate(args) -> int:
    try:
        instance = _generate_instance(args.family, args.n, args.seed)
    except ValueError as exc:
        print(f"generate: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = dumps_instance(instance)
    if args.out is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"generate: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _load(path, strict: bool):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_IO)
    try:
        instance = loads_instance(text)
        return validate(instance, strict=strict)
    except (json.JSONDecodeError, InstanceError, ValueError) as exc:
        print(f"malformed instance {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _solve(instance):
    counter = QueryCounter()
    if isinstance(instance, CoverageInstance):
        verdict = coverage.solve_coverage(instance, counter)
        return verdict, verdict.covered
    verdict = piercing.solve_piercing(instance, counter)
    return verdict, verdict.pierceable


def cmd_solve(args) -> int:
    instance = _load(getattr(args, "in"), args.strict)
    verdict, positive = _solve(instance)
    print(json.dumps(verdict.to_dict(), separators=(",", ":")))
    return EXIT_OK if positive else EXIT_NEGATIVE


def _witness_sound(instance, verdict) -> bool:
    if isinstance(instance, CoverageInstance):
        if verdict.covered:
            return verdict.gap_witness is None
        if verdict.gap_witness is None:
            return instance.domain.lo == instance.domain.hi
        g_lo, g_hi = verdict.gap_witness
        if not (instance.domain.lo <= g_lo < g_hi <= instance.domain.hi):
            return False
        return all(iv.hi <= g_lo or iv.lo >= g_hi for iv in instance.intervals)
    if not verdict.pierceable:
        return verdict.witness is None
    x, y = verdict.witness
    if not (instance.xdomain.contains(x) and instance.ydomain.contains(y)):
        return False
    return all(cr.contains(x, y) for cr in instance.crosses)


def cmd_verify(args) -> int:
    instance = _load(getattr(args, "in"), args.strict)
    solver_verdict, solver_pos = _solve(instance)
    if isinstance(instance, CoverageInstance):
        oracle_verdict = coverage.oracle_coverage(instance)
        oracle_pos = oracle_verdict.covered
    else:
        oracle_verdict = piercing.oracle_piercing(instance)
        oracle_pos = oracle_verdict.pierceable
    if args.inject_fault:
        # test hook: corrupt the solver verdict to exercise the failure path
        solver_pos = not solver_pos
    agree = solver_pos == oracle_pos
    sound = (not args.inject_fault) and _witness_sound(instance, solver_verdict) \
        and _witness_sound(instance, oracle_verdict)
    report = {
        "solver": solver_verdict.to_dict(),
        "oracle": oracle_verdict.to_dict(),
        "agree": agree,
        "witnesses_sound": sound,
    }
    if args.inject_fault:
        report["solver"]["covered" if isinstance(instance, CoverageInstance)
                         else "pierceable"] = solver_pos
    print(json.dumps(report, separators=(",", ":")))
    return EXIT_OK if agree and sound else EXIT_DISAGREE


def _parse_n_range(spec: str):
    if ".." in spec:
        lo_s, hi_s = spec.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
        if lo > hi:
            raise ValueError(f"empty range {spec}")
        return list(range(lo, hi + 1))
    return [int(spec)]


def cmd_bench(args) -> int:
    try:
        n_values = _parse_n_range(args.n)
        records = bounds.run_bench(args.family, n_values, args.trials,
                                   seed=args.seed, measure_time=args.measure_time)
    except ValueError as exc:
        print(f"bench: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.out is None:
            bounds.write_bench_csv(records, sys.stdout)
        else:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                bounds.write_bench_csv(records, fh)
    except OSError as exc:
        print(f"bench: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_bound(args) -> int:
    n = args.n
    out = {
        "n": n,
        "lb_union": bounds.lb_union(n),
        "lb_union_ceil": bounds.lb_union_ceil(n),
        "lb_equality": bounds.lb_equality(n),
    }
    if n >= 2:
        out["lb_piercing"] = bounds.lb_piercing(n)
    print(json.dumps(out, separators=(",", ":")))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coverpierce",
        description="Interval coverage and cross piercing: generators, "
                    "solvers, oracles and query-count benchmarks.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("generate", help="write an instance JSON file")
    p.add_argument("--family", required=True, choices=GENERATE_FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("solve", help="solve an instance file, print verdict JSON")
    p.add_argument("--in", required=True)
    p.add_argument("--strict", action="store_true",
                   help="reject zero-length intervals")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="cross-check solver against the oracle")
    p.add_argument("--in", required=True)
    p.add_argument("--strict", action="store_true")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run the query-count benchmark sweep")
    p.add_argument("--family", action="append", required=True,
                   choices=bounds.FAMILIES)
    p.add_argument("--n", required=True, help="size or inclusive range A..B")
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.add_argument("--measure-time", action="store_true",
                   help="record wall times (breaks byte-determinism)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("bound", help="print lower-bound values for a size")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
