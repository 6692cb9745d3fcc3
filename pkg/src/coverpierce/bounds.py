"""Information-theoretic query lower bounds and the benchmark harness.

Bound arithmetic uses base 6 (a query admits six answer forms) even though a
truthful comparator realizes only three outcomes; the deciders' measured
counts are reported next to the bounds, never asserted to dominate them on
individual instances.
"""

from __future__ import annotations

import csv
import math
import time
from dataclasses import dataclass

import numpy as np

from . import coverage, piercing
from .core import Permutation, QueryCounter

_LN6 = math.log(6)


def lb_union(n: int) -> float:
    """log_6(N!), the union/coverage worst-case query bound."""
    if n < 0:
        raise ValueError("negative size")
    return math.fsum(math.log(k) for k in range(2, n + 1)) / _LN6


def lb_union_ceil(n: int) -> int:
    """Exact ceil(log_6(N!)) via big-integer comparison 6^m >= N!."""
    if n < 0:
        raise ValueError("negative size")
    target = math.factorial(n)
    m = 0
    power = 1
    while power < target:
        power *= 6
        m += 1
    return m


def lb_equality(n: int) -> float:
    """Alias of :func:`lb_union`; the distinctness bound is the same quantity."""
    return lb_union(n)


def lb_piercing(n: int) -> float:
    """2 * log_6( floor(N/2)! / 2 ), clamped below at zero."""
    if n < 2:
        raise ValueError("piercing bound defined for N >= 2")
    half = n // 2
    value = 2.0 * (math.fsum(math.log(k) for k in range(2, half + 1)) - math.log(2)) / _LN6
    return max(0.0, value)


@dataclass(frozen=True)
class BoundReport:
    n: int
    lb_union_bits: float
    lb_piercing: float
    basis: str = "base-6 answer alphabet (=, !=, <, >, <=, >=)"


def bound_report(n: int) -> BoundReport:
    return BoundReport(n=n, lb_union_bits=lb_union(n),
                       lb_piercing=lb_piercing(n) if n >= 2 else 0.0)


@dataclass(frozen=True)
class BenchRecord:
    family: str
    n: int
    trial: int
    comparisons: int
    verdict: str
    lower_bound: float
    wall_time_ns: int


FAMILIES = ("chain", "staircase", "staircase-literal", "disjoint",
            "random", "random-coverage", "random-piercing")


def _trial_rng(seed: int, family: str, n: int, trial: int):
    fidx = FAMILIES.index(family)
    return np.random.RandomState([seed & 0xFFFFFFFF, fidx, n, trial])


def _run_one(family: str, n: int, rng):
    """Generate one instance and solve it; returns (comparisons, verdict, lb)."""
    counter = QueryCounter()
    if family == "chain":
        perm = Permutation(tuple(int(v) for v in rng.permutation(n) + 1))
        inst = coverage.gen_chain(perm)
        verdict = coverage.solve_coverage(inst, counter)
        word = "covered" if verdict.covered else "uncovered"
        return counter.comparisons, word, lb_union(n)
    if family in ("disjoint", "random-coverage"):
        inst = (coverage.gen_disjoint(n) if family == "disjoint"
                else coverage.gen_random_coverage(n, rng))
        verdict = coverage.solve_coverage(inst, counter)
        word = "covered" if verdict.covered else "uncovered"
        return counter.comparisons, word, lb_union(n)
    if family == "staircase":
        inst = piercing.gen_staircase_minimal(n)
    elif family == "staircase-literal":
        perm = _random_parity_perm(n, rng)
        inst = piercing.gen_staircase_literal(n, perm)
    elif family in ("random", "random-piercing"):
        inst = piercing.gen_random_piercing(n, rng)
    else:
        raise ValueError(f"unknown family {family!r}")
    verdict = piercing.solve_piercing(inst, counter)
    word = "pierceable" if verdict.pierceable else "not-pierceable"
    return counter.comparisons, word, lb_piercing(n)


def _random_parity_perm(n: int, rng) -> Permutation:
    odds = list(range(1, n + 1, 2))
    evens = list(range(2, n + 1, 2))
    rng.shuffle(odds)
    rng.shuffle(evens)
    order = []
    for k in range(1, n + 1):
        order.append(odds.pop(0) if k % 2 else evens.pop(0))
    return Permutation(tuple(order))


def run_bench(families, n_values, trials: int, seed: int = 0,
              measure_time: bool = False) -> list:
    """Deterministic benchmark sweep: one record per (family, n, trial).

    Wall times are recorded only when ``measure_time`` is set, so that a fixed
    seed yields byte-identical serialized output.
    """
    records = []
    for family in families:
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}")
        for n in n_values:
            for trial in range(trials):
                rng = _trial_rng(seed, family, n, trial)
                t0 = time.perf_counter_ns()
                comparisons, verdict, lb = _run_one(family, n, rng)
                elapsed = time.perf_counter_ns() - t0
                records.append(BenchRecord(
                    family=family, n=n, trial=trial,
                    comparisons=comparisons, verdict=verdict,
                    lower_bound=lb,
                    wall_time_ns=elapsed if measure_time else 0,
                ))
    return records


CSV_HEADER = ["family", "n", "trial", "comparisons", "verdict",
              "lower_bound", "wall_time_ns"]


def write_bench_csv(records, fh) -> None:
    """UTF-8 CSV with LF line endings and a mandatory header row."""
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow([r.family, r.n, r.trial, r.comparisons, r.verdict,
                         f"{r.lower_bound:.4f}", r.wall_time_ns])
