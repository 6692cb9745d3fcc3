import json

import pytest

from coverpierce.cli import (
    EXIT_DISAGREE,
    EXIT_IO,
    EXIT_NEGATIVE,
    EXIT_OK,
    EXIT_USAGE,
    main,
)
from coverpierce.core import dumps_instance, load_instance, loads_instance


def write_coverage(path, domain, pairs):
    doc = {"problem": "coverage", "domain": list(domain),
           "intervals": [list(p) for p in pairs]}
    path.write_text(json.dumps(doc) + "\n", encoding="utf-8")
    return str(path)


def write_piercing(path, crosses, xdomain=(0, 9), ydomain=(0, 9)):
    doc = {"problem": "piercing", "xdomain": list(xdomain),
           "ydomain": list(ydomain),
           "crosses": [{"h": list(h), "v": list(v)} for h, v in crosses]}
    path.write_text(json.dumps(doc) + "\n", encoding="utf-8")
    return str(path)


class TestGenerate:
    @pytest.mark.parametrize("family,n", [
        ("chain", 5), ("staircase", 6), ("staircase-literal", 8),
        ("disjoint", 4), ("random-coverage", 7), ("random-piercing", 7),
    ])
    def test_families_emit_loadable_json(self, family, n, tmp_path, capsys):
        out = tmp_path / "inst.json"
        code = main(["generate", "--family", family, "--n", str(n),
                     "--seed", "3", "--out", str(out)])
        assert code == EXIT_OK
        instance = load_instance(str(out))
        assert instance.n == n
        # writing back reproduces the file byte for byte
        assert dumps_instance(instance) == out.read_text(encoding="utf-8")

    def test_stdout_when_no_out(self, capsys):
        code = main(["generate", "--family", "chain", "--n", "3"])
        assert code == EXIT_OK
        text = capsys.readouterr().out
        assert text.endswith("\n")
        assert loads_instance(text).n == 3

    def test_deterministic_given_seed(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for path in (a, b):
            main(["generate", "--family", "random-piercing", "--n", "9",
                  "--seed", "77", "--out", str(path)])
        assert a.read_bytes() == b.read_bytes()

    def test_staircase_too_small_is_usage_error(self, tmp_path, capsys):
        code = main(["generate", "--family", "staircase", "--n", "2",
                     "--out", str(tmp_path / "x.json")])
        assert code == EXIT_USAGE
        assert capsys.readouterr().err != ""

    def test_unwritable_path_is_io_error(self, tmp_path, capsys):
        code = main(["generate", "--family", "chain", "--n", "3",
                     "--out", str(tmp_path / "no" / "dir" / "x.json")])
        assert code == EXIT_IO


class TestSolve:
    def test_covered_exits_zero(self, tmp_path, capsys):
        path = write_coverage(tmp_path / "c.json", (0, 5),
                              [(0, 2), (1, 4), (3, 5)])
        assert main(["solve", "--in", path]) == EXIT_OK
        out = json.loads(capsys.readouterr().out)
        assert out["covered"] is True
        assert "gap" not in out

    def test_uncovered_exits_one_with_gap(self, tmp_path, capsys):
        path = write_coverage(tmp_path / "c.json", (0, 5), [(0, 2), (3, 5)])
        assert main(["solve", "--in", path]) == EXIT_NEGATIVE
        out = json.loads(capsys.readouterr().out)
        assert out["covered"] is False
        assert out["gap"] == [2, 3]

    def test_pierceable_exits_zero_with_witness(self, tmp_path, capsys):
        path = write_piercing(tmp_path / "p.json", [((0, 3), (5, 9))])
        assert main(["solve", "--in", path]) == EXIT_OK
        out = json.loads(capsys.readouterr().out)
        assert out["pierceable"] is True
        assert len(out["witness"]) == 2

    def test_strict_rejects_degenerate(self, tmp_path, capsys):
        path = write_coverage(tmp_path / "c.json", (0, 5), [(2, 2), (0, 5)])
        assert main(["solve", "--in", path]) == EXIT_OK
        assert main(["solve", "--in", path, "--strict"]) == EXIT_USAGE

    def test_malformed_json_is_usage_error(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        assert main(["solve", "--in", str(path)]) == EXIT_USAGE

    def test_wrong_schema_is_usage_error(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text('{"problem":"coverage"}', encoding="utf-8")
        assert main(["solve", "--in", str(path)]) == EXIT_USAGE

    def test_missing_file_is_io_error(self, tmp_path, capsys):
        assert main(["solve", "--in", str(tmp_path / "nope.json")]) == EXIT_IO

    def test_input_file_not_mutated(self, tmp_path, capsys):
        path = write_coverage(tmp_path / "c.json", (0, 5), [(0, 5)])
        before = (tmp_path / "c.json").read_bytes()
        main(["solve", "--in", path])
        assert (tmp_path / "c.json").read_bytes() == before


class TestVerify:
    def test_agreement_exits_zero(self, tmp_path, capsys):
        path = write_coverage(tmp_path / "c.json", (0, 5), [(0, 3), (2, 5)])
        assert main(["verify", "--in", path]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["agree"] is True
        assert report["witnesses_sound"] is True

    def test_piercing_agreement(self, tmp_path, capsys):
        path = write_piercing(tmp_path / "p.json",
                              [((0, 3), (5, 9)), ((4, 9), (0, 2))])
        assert main(["verify", "--in", path]) == EXIT_OK

    def test_injected_fault_exits_four(self, tmp_path, capsys):
        path = write_coverage(tmp_path / "c.json", (0, 5), [(0, 5)])
        assert main(["verify", "--in", path, "--inject-fault"]) == EXIT_DISAGREE
        report = json.loads(capsys.readouterr().out)
        assert report["agree"] is False


class TestBench:
    def test_row_count_and_verdicts(self, tmp_path, capsys):
        out = tmp_path / "bench.csv"
        code = main(["bench", "--family", "chain", "--n", "4..6",
                     "--trials", "2", "--out", str(out)])
        assert code == EXIT_OK
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0].startswith("family,n,trial,comparisons,verdict")
        assert len(lines) == 1 + 3 * 2
        assert all(line.split(",")[4] == "covered" for line in lines[1:])

    def test_byte_identical_under_fixed_seed(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        argv = ["bench", "--family", "random-piercing", "--family", "staircase",
                "--n", "5..8", "--trials", "3", "--seed", "123"]
        main(argv + ["--out", str(a)])
        main(argv + ["--out", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_stdout_output(self, capsys):
        assert main(["bench", "--family", "disjoint", "--n", "3",
                     "--trials", "1"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.splitlines()[1].startswith("disjoint,3,0,")

    def test_bad_range_is_usage_error(self, capsys):
        assert main(["bench", "--family", "chain", "--n", "9..4",
                     "--trials", "1"]) == EXIT_USAGE


class TestBound:
    def test_values(self, capsys):
        assert main(["bound", "--n", "8"]) == EXIT_OK
        out = json.loads(capsys.readouterr().out)
        assert out["n"] == 8
        assert out["lb_union"] == pytest.approx(5.9186, abs=1e-3)
        assert out["lb_union_ceil"] == 6
        assert out["lb_piercing"] == pytest.approx(2.7738, abs=1e-3)

    def test_small_n_omits_piercing(self, capsys):
        assert main(["bound", "--n", "1"]) == EXIT_OK
        out = json.loads(capsys.readouterr().out)
        assert "lb_piercing" not in out


def test_unknown_subcommand_is_usage_error(capsys):
    assert main(["frobnicate"]) == EXIT_USAGE
