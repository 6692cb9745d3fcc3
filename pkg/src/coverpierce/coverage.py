"""Coverage of a base interval by N subintervals, with adversarial chain families.

The decider sorts by left endpoint and extends a greedy reach; a structurally
independent cell-scan oracle double-checks it.  ``gen_chain`` / ``flip_link``
build the permutation-indexed covering families and their broken variants.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    GT,
    LT,
    CoverageInstance,
    EmptyInput,
    Interval,
    Permutation,
    QueryCounter,
)
from .sorting import merge_sort_counted


@dataclass(frozen=True)
class CoverageVerdict:
    covered: bool
    gap_witness: tuple | None
    queries_used: int

    def to_dict(self) -> dict:
        out = {"covered": self.covered, "queries": self.queries_used}
        if self.gap_witness is not None:
            out["gap"] = [self.gap_witness[0], self.gap_witness[1]]
        return out


def solve_coverage(instance: CoverageInstance, counter: QueryCounter | None = None) -> CoverageVerdict:
    """Decide whether the union of the closed intervals equals the closed domain.

    Sorts by left endpoint, then sweeps left to right keeping the supremum of
    the covered prefix.  The gap witness, when present, is the leftmost maximal
    uncovered open interval.
    """
    if counter is None:
        counter = QueryCounter()
    before = counter.comparisons
    domain = instance.domain
    if domain.lo == domain.hi:
        # point domain: covered iff any member interval holds the point
        return CoverageVerdict(instance.n > 0, None, 0)
    los = [iv.lo for iv in instance.intervals]
    his = [iv.hi for iv in instance.intervals]
    order = merge_sort_counted(los, counter).order
    reach = domain.lo
    for pos in order:
        if counter.compare(los[pos], reach) == GT:
            return CoverageVerdict(False, (reach, los[pos]), counter.comparisons - before)
        if counter.compare(his[pos], reach) == GT:
            reach = his[pos]
    if counter.compare(reach, domain.hi) == LT:
        return CoverageVerdict(False, (reach, domain.hi), counter.comparisons - before)
    return CoverageVerdict(True, None, counter.comparisons - before)


def oracle_coverage(instance: CoverageInstance) -> CoverageVerdict:
    """Brute-force reference decider.

    Marks every elementary cell (each endpoint value, each open span between
    consecutive values) by direct scan over all intervals; no query counting.
    """
    domain = instance.domain
    if domain.lo == domain.hi:
        return CoverageVerdict(instance.n > 0, None, 0)
    values = sorted({domain.lo, domain.hi}
                    | {iv.lo for iv in instance.intervals}
                    | {iv.hi for iv in instance.intervals})
    values = [v for v in values if domain.lo <= v <= domain.hi]
    v = np.asarray(values)
    if instance.n == 0:
        return CoverageVerdict(False, (domain.lo, domain.hi), 0)
    los = np.asarray([iv.lo for iv in instance.intervals])
    his = np.asarray([iv.hi for iv in instance.intervals])
    point_ok = ((los[None, :] <= v[:, None]) & (v[:, None] <= his[None, :])).any(axis=1)
    span_ok = ((los[None, :] <= v[:-1, None]) & (v[1:, None] <= his[None, :])).any(axis=1)
    if point_ok.all() and span_ok.all():
        return CoverageVerdict(True, None, 0)
    # interleave cells: P0 G0 P1 G1 ... P(k-1); the witness is the interior of
    # the leftmost maximal uncovered run, which always contains a span cell
    k = len(values)
    cells = []
    for i in range(k):
        cells.append(("P", i, bool(point_ok[i])))
        if i + 1 < k:
            cells.append(("G", i, bool(span_ok[i])))
    first = next(i for i, c in enumerate(cells) if not c[2])
    last = first
    while last + 1 < len(cells) and not cells[last + 1][2]:
        last += 1
    span_idx = [c[1] for c in cells[first:last + 1] if c[0] == "G"]
    gap = (values[span_idx[0]], values[span_idx[-1] + 1])
    return CoverageVerdict(False, gap, 0)


def intersect_1d(intervals, counter: QueryCounter | None = None) -> Interval | None:
    """Common intersection of intervals in 2(N-1)+1 counted comparisons."""
    intervals = list(intervals)
    if not intervals:
        raise EmptyInput("intersect_1d needs at least one interval")
    if counter is None:
        counter = QueryCounter()
    lo = intervals[0].lo
    hi = intervals[0].hi
    for iv in intervals[1:]:
        if counter.compare(iv.lo, lo) == GT:
            lo = iv.lo
        if counter.compare(iv.hi, hi) == LT:
            hi = iv.hi
    if counter.compare(lo, hi) == GT:
        return None
    return Interval(lo, hi)


@dataclass(frozen=True)
class ChainInstance(CoverageInstance):
    """A chain covering family that remembers the permutation that built it."""

    permutation: Permutation = None


def gen_chain(perm, n: int | None = None) -> ChainInstance:
    """Chain of overlapping intervals on ranks 0..2N-1, ordered by ``perm``.

    Link k starts before link k-1 ends, so the union covers the whole domain
    and deleting any single link breaks coverage.
    """
    if not isinstance(perm, Permutation):
        perm = Permutation(tuple(perm))
    N = len(perm)
    if n is not None and n != N:
        raise ValueError(f"size {n} disagrees with |perm| = {N}")
    if N < 2:
        raise ValueError("chain needs N >= 2")
    a = [0] * (N + 1)
    b = [0] * (N + 1)
    a[perm[0]] = 0
    for k in range(2, N + 1):
        a[perm[k - 1]] = 2 * k - 3
    for k in range(1, N):
        b[perm[k - 1]] = 2 * k
    b[perm[N - 1]] = 2 * N - 1
    intervals = [Interval(a[i], b[i]) for i in range(1, N + 1)]
    return ChainInstance(Interval(0, 2 * N - 1), tuple(intervals), permutation=perm)


def flip_link(chain: ChainInstance, k: int) -> CoverageInstance:
    """Swap the ranks of link k's start and link k-1's end, breaking the chain."""
    perm = getattr(chain, "permutation", None)
    if perm is None:
        raise ValueError("flip_link needs a chain with a known permutation")
    N = len(perm)
    if not 2 <= k <= N:
        raise ValueError(f"flip position {k} out of range 2..{N}")
    intervals = list(chain.intervals)
    i_k = perm[k - 1]
    i_prev = perm[k - 2]
    # ranks 2k-3 (start of link k) and 2k-2 (end of link k-1) change places
    intervals[i_k - 1] = Interval(2 * k - 2, intervals[i_k - 1].hi)
    intervals[i_prev - 1] = Interval(intervals[i_prev - 1].lo, 2 * k - 3)
    return CoverageInstance(chain.domain, tuple(intervals))


def check_equality_by_coverage(values, counter: QueryCounter | None = None) -> bool:
    """All-distinct test via coverage: unit intervals [m, m+1] over [0, N]."""
    values = [int(v) for v in values]
    N = len(values)
    for v in values:
        if not 0 <= v <= N - 1:
            raise ValueError(f"value {v} out of range 0..{N - 1}")
    instance = CoverageInstance(Interval(0, N), [Interval(v, v + 1) for v in values])
    return solve_coverage(instance, counter).covered


def gen_disjoint(n: int) -> CoverageInstance:
    """N separated unit intervals over [0, 2N]; uncovered for every N."""
    if n < 1:
        raise ValueError("disjoint family needs N >= 1")
    return CoverageInstance(
        Interval(0, 2 * n),
        [Interval(2 * k, 2 * k + 1) for k in range(n)],
    )


def gen_random_coverage(n: int, rng) -> CoverageInstance:
    """Random subintervals of [0, 2N] with i.i.d. endpoints."""
    if n < 0:
        raise ValueError("negative size")
    span = max(2 * n, 1)
    pts = np.sort(rng.randint(0, span + 1, size=(n, 2)), axis=1)
    return CoverageInstance(
        Interval(0, span),
        [Interval(int(lo), int(hi)) for lo, hi in pts],
    )
