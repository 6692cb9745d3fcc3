"""Pair-of-points piercing of N crosses via staircase envelopes.

A cross is the set of points whose x lies in its horizontal arm or whose y
lies in its vertical arm.  Its complement splits into at most four corner
boxes; the union of each kind of box is bounded by a monotone step function.
Piercing succeeds iff somewhere the lower envelope stays below the upper one.
Also houses the generators for minimal non-pierceable families.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass

import numpy as np

from .core import (
    GT,
    LT,
    Cross,
    Interval,
    Permutation,
    PiercingInstance,
    QueryCounter,
)
from .sorting import merge_sort_counted, merge_unique_counted

POS_INF = math.inf
NEG_INF = -math.inf


@dataclass(frozen=True)
class CornerBox:
    """One quadrant of a cross complement; sides facing the cross are open."""

    kind: str  # NW | NE | SW | SE
    x_range: tuple
    y_range: tuple

    def contains(self, x, y) -> bool:
        x0, x1 = self.x_range
        y0, y1 = self.y_range
        if self.kind == "NW":
            return x0 <= x < x1 and y0 < y <= y1
        if self.kind == "NE":
            return x0 < x <= x1 and y0 < y <= y1
        if self.kind == "SW":
            return x0 <= x < x1 and y0 <= y < y1
        if self.kind == "SE":
            return x0 < x <= x1 and y0 <= y < y1
        raise ValueError(f"bad corner kind {self.kind!r}")


def corner_boxes(cross: Cross, xdomain: Interval, ydomain: Interval) -> list:
    """The nonempty corner boxes whose union is the cross complement."""
    a0, b0 = xdomain.lo, xdomain.hi
    c0, d0 = ydomain.lo, ydomain.hi
    a, b = cross.h.lo, cross.h.hi
    c, d = cross.v.lo, cross.v.hi
    boxes = []
    if a > a0 and d < d0:
        boxes.append(CornerBox("NW", (a0, a), (d, d0)))
    if b < b0 and d < d0:
        boxes.append(CornerBox("NE", (b, b0), (d, d0)))
    if a > a0 and c > c0:
        boxes.append(CornerBox("SW", (a0, a), (c0, c)))
    if b < b0 and c > c0:
        boxes.append(CornerBox("SE", (b, b0), (c0, c)))
    return boxes


@dataclass(frozen=True)
class StepFunction:
    """Piecewise-constant function of x.

    ``values[j]`` applies on [breakpoints[j-1], breakpoints[j]); the first
    value extends to -inf, the last to +inf.  Sentinel values +/-inf mean
    "no constraint".
    """

    breakpoints: tuple
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "breakpoints", tuple(self.breakpoints))
        object.__setattr__(self, "values", tuple(self.values))
        assert len(self.values) == len(self.breakpoints) + 1

    def value_at(self, x):
        return self.values[bisect_right(self.breakpoints, x)]


@dataclass(frozen=True)
class Envelopes:
    f_nw: StepFunction  # min d over a > x   (nondecreasing)
    f_ne: StepFunction  # min d over b < x   (nonincreasing)
    g_sw: StepFunction  # max c over a > x   (nonincreasing)
    g_se: StepFunction  # max c over b < x   (nondecreasing)


def _suffix_envelopes(keys, deps, order, counter):
    """Breakpoints at distinct key values; per piece, min/max of deps over key > x."""
    srt = [keys[i] for i in order]
    d_srt = [deps[0][i] for i in order]
    c_srt = [deps[1][i] for i in order]
    n = len(srt)
    suff_min = [POS_INF] * (n + 1)
    suff_max = [NEG_INF] * (n + 1)
    for t in range(n - 1, -1, -1):
        suff_min[t] = d_srt[t] if counter.compare(d_srt[t], suff_min[t + 1]) != GT else suff_min[t + 1]
        suff_max[t] = c_srt[t] if counter.compare(c_srt[t], suff_max[t + 1]) != LT else suff_max[t + 1]
    breakpoints = []
    min_vals = [suff_min[0]]
    max_vals = [suff_max[0]]
    for t in range(n):
        if t + 1 == n or counter.compare(srt[t], srt[t + 1]) == LT:
            breakpoints.append(srt[t])
            min_vals.append(suff_min[t + 1])
            max_vals.append(suff_max[t + 1])
    return (StepFunction(breakpoints, min_vals),
            StepFunction(breakpoints, max_vals))


def _prefix_envelopes(keys, deps, order, counter):
    """Breakpoints just above distinct key values; per piece, min/max over key < x."""
    srt = [keys[i] for i in order]
    d_srt = [deps[0][i] for i in order]
    c_srt = [deps[1][i] for i in order]
    n = len(srt)
    pref_min = [POS_INF] * (n + 1)
    pref_max = [NEG_INF] * (n + 1)
    for t in range(n):
        pref_min[t + 1] = d_srt[t] if counter.compare(d_srt[t], pref_min[t]) != GT else pref_min[t]
        pref_max[t + 1] = c_srt[t] if counter.compare(c_srt[t], pref_max[t]) != LT else pref_max[t]
    breakpoints = []
    min_vals = [POS_INF]
    max_vals = [NEG_INF]
    for t in range(n):
        if t + 1 == n or counter.compare(srt[t], srt[t + 1]) == LT:
            breakpoints.append(srt[t] + 1)
            min_vals.append(pref_min[t + 1])
            max_vals.append(pref_max[t + 1])
    return (StepFunction(breakpoints, min_vals),
            StepFunction(breakpoints, max_vals))


def build_envelopes(instance: PiercingInstance, counter: QueryCounter | None = None) -> Envelopes:
    """Sort-plus-running-aggregate construction of the four corner envelopes."""
    if counter is None:
        counter = QueryCounter()
    a = [cr.h.lo for cr in instance.crosses]
    b = [cr.h.hi for cr in instance.crosses]
    c = [cr.v.lo for cr in instance.crosses]
    d = [cr.v.hi for cr in instance.crosses]
    by_a = merge_sort_counted(a, counter).order
    by_b = merge_sort_counted(b, counter).order
    f_nw, g_sw = _suffix_envelopes(a, (d, c), by_a, counter)
    f_ne, g_se = _prefix_envelopes(b, (d, c), by_b, counter)
    return Envelopes(f_nw=f_nw, f_ne=f_ne, g_sw=g_sw, g_se=g_se)


@dataclass(frozen=True)
class PiercingVerdict:
    pierceable: bool
    witness: tuple | None
    queries_used: int

    def to_dict(self) -> dict:
        out = {"pierceable": self.pierceable, "queries": self.queries_used}
        if self.witness is not None:
            out["witness"] = [self.witness[0], self.witness[1]]
        return out


def _verify_witness(instance, x, y) -> bool:
    return all(cr.contains(x, y) for cr in instance.crosses)


def solve_piercing(instance: PiercingInstance, counter: QueryCounter | None = None) -> PiercingVerdict:
    """Envelope sweep decider.

    Feasible at x iff max(g_sw, g_se, c0)(x) <= min(f_nw, f_ne, d0)(x).  Any
    point in the intersection can be slid left onto an endpoint value, so the
    sweep visits only endpoint x candidates, left to right, and reports the
    leftmost feasible one with the clamped lower envelope as its y.
    """
    if counter is None:
        counter = QueryCounter()
    before = counter.comparisons
    a0, b0 = instance.xdomain.lo, instance.xdomain.hi
    c0, d0 = instance.ydomain.lo, instance.ydomain.hi
    if instance.n == 0:
        return PiercingVerdict(True, (a0, c0), 0)
    env = build_envelopes(instance, counter)
    a_sorted = list(env.f_nw.breakpoints)
    b_sorted = [bp - 1 for bp in env.f_ne.breakpoints]
    candidates = merge_unique_counted([[a0], a_sorted, b_sorted], counter)
    funcs = (env.f_nw, env.f_ne, env.g_sw, env.g_se)
    ptrs = [0, 0, 0, 0]
    for x in candidates:
        if counter.compare(x, a0) == LT or counter.compare(x, b0) == GT:
            continue
        vals = []
        for fi, fn in enumerate(funcs):
            bp = fn.breakpoints
            p = ptrs[fi]
            while p < len(bp) and counter.compare(bp[p], x) != GT:
                p += 1
            ptrs[fi] = p
            vals.append(fn.values[p])
        upper = vals[0] if counter.compare(vals[0], vals[1]) != GT else vals[1]
        upper = upper if counter.compare(upper, d0) != GT else d0
        lower = vals[2] if counter.compare(vals[2], vals[3]) != LT else vals[3]
        lower = lower if counter.compare(lower, c0) != LT else c0
        if counter.compare(lower, upper) != GT:
            x_w, y_w = int(x), int(lower)
            if not _verify_witness(instance, x_w, y_w):
                raise RuntimeError(f"solver produced an unsound witness ({x_w}, {y_w})")
            return PiercingVerdict(True, (x_w, y_w), counter.comparisons - before)
    return PiercingVerdict(False, None, counter.comparisons - before)


def oracle_piercing(instance: PiercingInstance) -> PiercingVerdict:
    """Exhaustive grid scan over endpoint values on both axes."""
    a0, b0 = instance.xdomain.lo, instance.xdomain.hi
    c0, d0 = instance.ydomain.lo, instance.ydomain.hi
    xs = sorted({a0, b0} | {v for cr in instance.crosses for v in (cr.h.lo, cr.h.hi)})
    ys = sorted({c0, d0} | {v for cr in instance.crosses for v in (cr.v.lo, cr.v.hi)})
    xs = [x for x in xs if a0 <= x <= b0]
    ys = [y for y in ys if c0 <= y <= d0]
    if instance.n == 0:
        return PiercingVerdict(True, (a0, c0), 0)
    xv = np.asarray(xs)
    yv = np.asarray(ys)
    h_lo = np.asarray([cr.h.lo for cr in instance.crosses])
    h_hi = np.asarray([cr.h.hi for cr in instance.crosses])
    v_lo = np.asarray([cr.v.lo for cr in instance.crosses])
    v_hi = np.asarray([cr.v.hi for cr in instance.crosses])
    xin = (h_lo[:, None] <= xv[None, :]) & (xv[None, :] <= h_hi[:, None])  # (N, nx)
    yin = (v_lo[:, None] <= yv[None, :]) & (yv[None, :] <= v_hi[:, None])  # (N, ny)
    ok = (xin[:, :, None] | yin[:, None, :]).all(axis=0)  # (nx, ny)
    hits = np.argwhere(ok)
    if hits.size == 0:
        return PiercingVerdict(False, None, 0)
    i, j = hits[0]
    return PiercingVerdict(True, (int(xv[i]), int(yv[j])), 0)


def oracle_grid_points(instance: PiercingInstance) -> list:
    """All piercing points on the endpoint grid (for boundary-anomaly checks)."""
    pts = []
    a0, b0 = instance.xdomain.lo, instance.xdomain.hi
    c0, d0 = instance.ydomain.lo, instance.ydomain.hi
    xs = sorted({a0, b0} | {v for cr in instance.crosses for v in (cr.h.lo, cr.h.hi)})
    ys = sorted({c0, d0} | {v for cr in instance.crosses for v in (cr.v.lo, cr.v.hi)})
    for x in xs:
        for y in ys:
            if a0 <= x <= b0 and c0 <= y <= d0 and _verify_witness(instance, x, y):
                pts.append((x, y))
    return pts


@dataclass(frozen=True)
class MinimalityReport:
    full_family_pierceable: bool
    each_deletion_pierceable: tuple

    @property
    def is_minimal_nonpierceable(self) -> bool:
        return (not self.full_family_pierceable) and all(self.each_deletion_pierceable)

    def to_json_array(self) -> list:
        return [self.full_family_pierceable, list(self.each_deletion_pierceable)]


def check_minimality(instance: PiercingInstance) -> MinimalityReport:
    """Solve the full family and every leave-one-out subfamily."""
    full = solve_piercing(instance, QueryCounter()).pierceable
    deletions = []
    for i in range(instance.n):
        sub = PiercingInstance(
            instance.xdomain, instance.ydomain,
            instance.crosses[:i] + instance.crosses[i + 1:],
        )
        deletions.append(solve_piercing(sub, QueryCounter()).pierceable)
    return MinimalityReport(full, tuple(deletions))


def _ladder_crosses(n: int):
    """Threshold ladder for the general minimal non-pierceable family, N >= 5.

    Alternating top/bottom corner boxes whose thresholds interleave; each box
    is the sole cover of one slab, so removing any cross opens a hole.
    """
    M = n + 2
    boxes = []  # (kind, p1, p2)
    if n % 2 == 0:
        m = (n - 2) // 2
        u = {1: 1}
        p = {1: 3}
        for j in range(2, m):
            u[j] = 2 * j
            p[j] = 2 * j + 1
        e = 2 * m
        u[m] = 2 * m + 1
        p[m] = 2 * m + 2
        q = {1: 1}
        w = {}
        for j in range(2, m + 1):
            q[j] = 2 * j - 1
            w[j - 1] = 2 * j
        f = 2 * m + 1
        w[m] = 2 * m + 2
        boxes.append(("SW", 2, 2))
        for j in range(1, m):
            boxes.append(("NW", p[j], q[j]))
            boxes.append(("SE", u[j], w[j]))
        boxes.append(("NW", p[m], q[m]))
        boxes.append(("NE", e, f))
        boxes.append(("SE", u[m], w[m]))
    else:
        m = (n - 3) // 2
        u = {1: 1}
        p = {1: 3}
        for j in range(2, m + 1):
            u[j] = 2 * j
            p[j] = 2 * j + 1
        e = 2 * m + 2
        p[m + 1] = 2 * m + 3
        q = {1: 1}
        w = {}
        for j in range(2, m + 1):
            q[j] = 2 * j - 1
            w[j - 1] = 2 * j
        q[m + 1] = 2 * m + 1
        f = 2 * m + 2
        w[m] = 2 * m + 3
        boxes.append(("SW", 2, 2))
        for j in range(1, m + 1):
            boxes.append(("NW", p[j], q[j]))
            boxes.append(("SE", u[j], w[j]))
        boxes.append(("NW", p[m + 1], q[m + 1]))
        boxes.append(("NE", e, f))
    crosses = []
    for kind, r1, r2 in boxes:
        if kind == "SW":
            crosses.append(Cross(Interval(r1, M), Interval(r2, M)))
        elif kind == "NW":
            crosses.append(Cross(Interval(r1, M), Interval(0, r2)))
        elif kind == "SE":
            crosses.append(Cross(Interval(0, r1), Interval(r2, M)))
        else:  # NE
            crosses.append(Cross(Interval(0, r1), Interval(0, r2)))
    return M, crosses


_ORACLE_VERIFY_LIMIT = 14


def gen_staircase_minimal(n: int, verify: bool = True) -> PiercingInstance:
    """A family of N crosses with empty intersection whose proper subsets all pierce.

    Construction is self-verified: by the grid oracle up to N=14, by the
    envelope solver beyond.
    """
    if n < 3:
        raise ValueError("minimal non-pierceable family needs N >= 3")
    if n == 3:
        dom = Interval(0, 2)
        inst = PiercingInstance(dom, dom, [
            Cross(Interval(k, k), Interval(k, k)) for k in range(3)
        ])
    elif n == 4:
        dom = Interval(0, 3)
        inst = PiercingInstance(dom, dom, [
            Cross(Interval(0, 1), Interval(0, 1)),
            Cross(Interval(2, 3), Interval(2, 3)),
            Cross(Interval(0, 1), Interval(2, 3)),
            Cross(Interval(2, 3), Interval(0, 1)),
        ])
    else:
        M, crosses = _ladder_crosses(n)
        dom = Interval(0, M)
        inst = PiercingInstance(dom, dom, crosses)
    if verify:
        if n <= _ORACLE_VERIFY_LIMIT:
            ok = not oracle_piercing(inst).pierceable
            for i in range(n):
                sub = PiercingInstance(
                    inst.xdomain, inst.ydomain,
                    inst.crosses[:i] + inst.crosses[i + 1:],
                )
                ok = ok and oracle_piercing(sub).pierceable
        else:
            ok = check_minimality(inst).is_minimal_nonpierceable
        if not ok:
            raise RuntimeError(f"staircase generator self-verification failed at N={n}")
    return inst


def gen_staircase_literal(n: int, perm: Permutation | None = None) -> PiercingInstance:
    """Verbatim rank transcription of the displayed N=8 / N=9 staircase preorders.

    Keeps the displayed equalities, hence degenerate arms.  Under closed
    intervals the crosses all share the single corner point (x-domain low,
    y-domain low); this boundary anomaly is preserved on purpose.
    """
    if n not in (8, 9):
        raise ValueError("literal staircase transcription exists for N = 8 or 9 only")
    if perm is None:
        perm = Permutation.identity(n)
    if not isinstance(perm, Permutation):
        perm = Permutation(tuple(perm))
    if len(perm) != n:
        raise ValueError(f"permutation size {len(perm)} != {n}")
    if not perm.preserves_parity():
        raise ValueError("permutation must preserve the parity of indices")
    i = [None] + list(perm.order)  # 1-based chain positions
    a = {}
    b = {}
    c = {}
    d = {}
    if n == 8:
        for k in (1, 3, 5, 7):
            a[i[k]] = 0
        b[i[1]] = 0
        b[i[3]] = 1
        a[i[2]] = 2
        b[i[5]] = 3
        a[i[4]] = 4
        b[i[7]] = 5
        a[i[6]] = 6
        a[i[8]] = 7
        for k in (2, 4, 6, 8):
            b[i[k]] = 7
        xdom = Interval(0, 7)
        for k in (2, 4, 6, 8):
            c[i[k]] = 0
        d[i[2]] = 0
        c[i[1]] = 1
        d[i[4]] = 2
        c[i[3]] = 3
        d[i[6]] = 4
        c[i[5]] = 5
        d[i[8]] = 6
        c[i[7]] = 7
        for k in (1, 3, 5, 7):
            d[i[k]] = 8
        ydom = Interval(0, 8)
    else:
        for k in (1, 3, 5, 7, 9):
            a[i[k]] = 0
        b[i[1]] = 0
        b[i[3]] = 1
        a[i[2]] = 2
        b[i[5]] = 3
        a[i[4]] = 4
        b[i[7]] = 5
        a[i[6]] = 6
        b[i[9]] = 7
        a[i[8]] = 8
        for k in (2, 4, 6, 8):
            b[i[k]] = 9
        xdom = Interval(0, 9)
        for k in (2, 4, 6, 8):
            c[i[k]] = 0
        d[i[2]] = 0
        c[i[1]] = 1
        d[i[4]] = 2
        c[i[3]] = 3
        d[i[6]] = 4
        c[i[5]] = 5
        d[i[8]] = 6
        c[i[7]] = 7
        c[i[9]] = 8
        for k in (1, 3, 5, 7, 9):
            d[i[k]] = 8
        ydom = Interval(0, 8)
    crosses = [Cross(Interval(a[j], b[j]), Interval(c[j], d[j])) for j in range(1, n + 1)]
    return PiercingInstance(xdom, ydom, crosses)


def gen_random_piercing(n: int, rng) -> PiercingInstance:
    """Random crosses over [0, 2N]^2 with i.i.d. endpoints."""
    if n < 0:
        raise ValueError("negative size")
    span = max(2 * n, 1)
    hx = np.sort(rng.randint(0, span + 1, size=(n, 2)), axis=1)
    vy = np.sort(rng.randint(0, span + 1, size=(n, 2)), axis=1)
    dom = Interval(0, span)
    crosses = [
        Cross(Interval(int(hx[k, 0]), int(hx[k, 1])),
              Interval(int(vy[k, 0]), int(vy[k, 1])))
        for k in range(n)
    ]
    return PiercingInstance(dom, dom, crosses)
