import io
import math

import pytest

from coverpierce.bounds import (
    BenchRecord,
    bound_report,
    lb_equality,
    lb_piercing,
    lb_union,
    lb_union_ceil,
    run_bench,
    write_bench_csv,
)


class TestLbUnion:
    def test_one(self):
        assert lb_union(1) == 0.0
        assert lb_union(0) == 0.0

    def test_eight(self):
        assert lb_union(8) == pytest.approx(math.log(40320) / math.log(6), abs=1e-12)
        assert lb_union(8) == pytest.approx(5.9186, abs=1e-3)

    def test_ceil_paths_agree_up_to_64(self):
        for n in range(0, 65):
            assert lb_union_ceil(n) == math.ceil(round(lb_union(n), 9))

    def test_three_exact_via_big_integers(self):
        assert lb_union_ceil(3) == 1
        assert 6 ** 1 == math.factorial(3)

    def test_monotone(self):
        prev = -1.0
        for n in range(0, 2001):
            cur = lb_union(n)
            assert cur >= prev
            prev = cur


class TestLbPiercing:
    def test_nine(self):
        assert lb_piercing(9) == pytest.approx(2.7738, abs=1e-3)

    def test_two_clamped(self):
        assert lb_piercing(2) == 0.0

    def test_sixteen(self):
        assert lb_piercing(16) == pytest.approx(2 * math.log(20160) / math.log(6), abs=1e-9)
        assert lb_piercing(16) == pytest.approx(11.0636, abs=1e-2)

    def test_requires_two(self):
        with pytest.raises(ValueError):
            lb_piercing(1)


def test_lb_equality_is_union_alias():
    assert lb_equality(3) == lb_union(3) == pytest.approx(1.0, abs=1e-12)
    assert lb_equality(0) == 0.0
    assert lb_equality(8) == lb_union(8)


def test_bound_report_fields():
    rep = bound_report(8)
    assert rep.n == 8
    assert rep.lb_union_bits == lb_union(8)
    assert rep.lb_piercing == lb_piercing(8)
    assert "base-6" in rep.basis


class TestRunBench:
    def test_chain_records(self):
        records = run_bench(["chain"], [8], trials=3, seed=1)
        assert len(records) == 3
        assert all(r.verdict == "covered" for r in records)
        assert all(r.comparisons >= math.ceil(lb_union(8)) == 6 for r in records)
        assert all(r.lower_bound == lb_union(8) for r in records)

    def test_staircase_never_pierceable(self):
        records = run_bench(["staircase"], [6], trials=2, seed=0)
        assert all(r.verdict == "not-pierceable" for r in records)
        assert all(r.lower_bound == lb_piercing(6) for r in records)

    def test_empty_range(self):
        assert run_bench(["chain"], [], trials=5, seed=0) == []

    def test_deterministic_under_seed(self):
        a = run_bench(["chain", "random-piercing"], [4, 8], trials=3, seed=42)
        b = run_bench(["chain", "random-piercing"], [4, 8], trials=3, seed=42)
        assert a == b

    def test_different_seeds_differ(self):
        a = run_bench(["random-piercing"], [32], trials=4, seed=1)
        b = run_bench(["random-piercing"], [32], trials=4, seed=2)
        assert [r.comparisons for r in a] != [r.comparisons for r in b]

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            run_bench(["mystery"], [4], trials=1, seed=0)

    def test_wall_time_zero_without_measure_flag(self):
        records = run_bench(["disjoint"], [4], trials=1, seed=0)
        assert records[0].wall_time_ns == 0
        timed = run_bench(["disjoint"], [4], trials=1, seed=0, measure_time=True)
        assert timed[0].wall_time_ns > 0


def test_csv_format():
    records = [BenchRecord("chain", 4, 0, 17, "covered", lb_union(4), 0)]
    buf = io.StringIO()
    write_bench_csv(records, buf)
    lines = buf.getvalue().split("\n")
    assert lines[0] == "family,n,trial,comparisons,verdict,lower_bound,wall_time_ns"
    assert lines[1] == "chain,4,0,17,covered,1.7737,0"
    assert buf.getvalue().endswith("\n")
    assert "\r" not in buf.getvalue()
