"""End-to-end tests of the command-line interface and its exit codes."""

import json
import subprocess

import bitpairs.tables
from bitpairs.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    def test_motivating_instance(self, capsys):
        code, out, err = invoke(capsys, "count", "--n", "8", "--k", "2", "--m", "2", "--circular")
        assert (code, out, err) == (0, "36\n", "")

    def test_odd_circular_is_zero(self, capsys):
        code, out, _ = invoke(capsys, "count", "--n", "5", "--k", "1", "--m", "1", "--circular")
        assert (code, out) == (0, "0\n")

    def test_methods_agree_linear(self, capsys):
        outs = set()
        for method in ("auto", "oracle", "split", "first-one", "reduce"):
            code, out, _ = invoke(
                capsys, "count", "--n", "10", "--k", "2", "--m", "3", "--method", method
            )
            assert code == 0
            outs.add(out)
        assert len(outs) == 1

    def test_methods_agree_circular(self, capsys):
        outs = set()
        for method in ("auto", "oracle", "split", "first-one", "reduce"):
            code, out, _ = invoke(
                capsys, "count", "--n", "10", "--k", "2", "--m", "2",
                "--circular", "--method", method,
            )
            assert code == 0
            outs.add(out)
        assert len(outs) == 1

    def test_closed_method_on_its_domain(self, capsys):
        code, out, _ = invoke(capsys, "count", "--n", "10", "--k", "3", "--m", "0", "--method", "closed")
        assert code == 0
        _, auto, _ = invoke(capsys, "count", "--n", "10", "--k", "3", "--m", "0")
        assert out == auto

    def test_closed_method_domain_errors(self, capsys):
        code, _, err = invoke(capsys, "count", "--n", "10", "--k", "3", "--m", "1", "--method", "closed")
        assert code == 2
        assert err.startswith("error:")
        code, _, err = invoke(
            capsys, "count", "--n", "10", "--k", "3", "--m", "0", "--circular", "--method", "closed"
        )
        assert code == 2

    def test_large_n_fast_path(self, capsys):
        code, out, _ = invoke(capsys, "count", "--n", "200", "--k", "30", "--m", "20")
        assert code == 0
        assert int(out) > 0


class TestUsageErrors:
    def test_missing_required_flag(self, capsys):
        code, _, err = invoke(capsys, "count", "--n", "8", "--k", "2")
        assert code == 2
        assert err.startswith("error:")
        assert err.count("\n") == 1

    def test_negative_argument(self, capsys):
        code, _, err = invoke(capsys, "count", "--n", "-8", "--k", "2", "--m", "2")
        assert code == 2
        assert "nonnegative" in err

    def test_unknown_flag(self, capsys):
        code, _, err = invoke(capsys, "count", "--n", "8", "--k", "2", "--m", "2", "--frobnicate")
        assert code == 2

    def test_unknown_subcommand(self, capsys):
        code, _, err = invoke(capsys, "frobnicate")
        assert code == 2

    def test_no_subcommand(self, capsys):
        code, _, err = invoke(capsys)
        assert code == 2

    def test_oracle_limit_exceeded(self, capsys):
        code, _, err = invoke(capsys, "count", "--n", "30", "--k", "2", "--m", "2", "--method", "oracle")
        assert code == 2
        assert "oracle limit exceeded" in err

    def test_help_exits_zero(self, capsys):
        code, out, _ = invoke(capsys, "--help")
        assert code == 0
        assert "count" in out


class TestOracleLimitPlumbing:
    def test_flag_raises_limit(self, capsys):
        code, out, _ = invoke(
            capsys, "count", "--n", "21", "--k", "2", "--m", "2",
            "--method", "oracle", "--oracle-limit", "21",
        )
        assert code == 0
        _, fast, _ = invoke(capsys, "count", "--n", "21", "--k", "2", "--m", "2")
        assert out == fast

    def test_env_raises_limit(self, capsys, monkeypatch):
        monkeypatch.setenv("BITPAIRS_ORACLE_LIMIT", "21")
        code, out, _ = invoke(capsys, "count", "--n", "21", "--k", "2", "--m", "2", "--method", "oracle")
        assert code == 0

    def test_flag_beats_env(self, capsys, monkeypatch):
        monkeypatch.setenv("BITPAIRS_ORACLE_LIMIT", "30")
        code, _, err = invoke(
            capsys, "count", "--n", "25", "--k", "2", "--m", "2",
            "--method", "oracle", "--oracle-limit", "10",
        )
        assert code == 2
        assert "oracle limit exceeded" in err

    def test_bad_env_value(self, capsys, monkeypatch):
        monkeypatch.setenv("BITPAIRS_ORACLE_LIMIT", "many")
        code, _, err = invoke(capsys, "count", "--n", "8", "--k", "1", "--m", "1", "--method", "oracle")
        assert code == 2
        assert "BITPAIRS_ORACLE_LIMIT" in err


class TestEnumerate:
    def test_lines_match_count(self, capsys):
        for n in range(1, 9):
            for k in range(0, n, 2):
                for m in range(0, n, 2):
                    code, out, _ = invoke(
                        capsys, "enumerate", "--n", str(n), "--k", str(k), "--m", str(m)
                    )
                    assert code == 0
                    lines = out.splitlines()
                    _, count, _ = invoke(capsys, "count", "--n", str(n), "--k", str(k), "--m", str(m))
                    assert len(lines) == int(count)

    def test_circular_lines_match_count(self, capsys):
        code, out, _ = invoke(capsys, "enumerate", "--n", "6", "--k", "2", "--m", "2", "--circular")
        assert code == 0
        _, count, _ = invoke(capsys, "count", "--n", "6", "--k", "2", "--m", "2", "--circular")
        assert len(out.splitlines()) == int(count)

    def test_lexicographic(self, capsys):
        _, out, _ = invoke(capsys, "enumerate", "--n", "6", "--k", "1", "--m", "1")
        lines = out.splitlines()
        assert lines == sorted(lines)


class TestBijection:
    def test_forward(self, capsys):
        code, out, _ = invoke(capsys, "bijection", "--string", "001010001010001")
        assert (code, out) == (0, "1,6,7,12,13\n")

    def test_backward(self, capsys):
        code, out, _ = invoke(capsys, "bijection", "--sequence", "1,6,7,12,13", "--n", "15")
        assert (code, out) == (0, "001010001010001\n")

    def test_empty_sequence(self, capsys):
        code, out, _ = invoke(capsys, "bijection", "--string", "0101")
        assert (code, out) == (0, "\n")
        code, out, _ = invoke(capsys, "bijection", "--sequence", "", "--n", "4")
        assert (code, out) == (0, "0101\n")

    def test_sequence_requires_n(self, capsys):
        code, _, err = invoke(capsys, "bijection", "--sequence", "1,2")
        assert code == 2
        assert "--n is required" in err

    def test_mutually_exclusive(self, capsys):
        code, _, _ = invoke(capsys, "bijection", "--string", "00", "--sequence", "1", "--n", "2")
        assert code == 2

    def test_domain_errors(self, capsys):
        code, _, err = invoke(capsys, "bijection", "--string", "0110")
        assert code == 2
        assert "not in Z" in err
        code, _, err = invoke(capsys, "bijection", "--sequence", "2,3", "--n", "6")
        assert code == 2
        assert "invalid Terquem sequence" in err
        code, _, err = invoke(capsys, "bijection", "--sequence", "1,x", "--n", "6")
        assert code == 2
        assert "invalid sequence" in err


class TestTableAndTriangle:
    def test_table_stdout_csv(self, capsys):
        code, out, _ = invoke(capsys, "table", "--n", "4", "--circular")
        assert code == 0
        assert "4,1,1,4" in out.splitlines()

    def test_table_json(self, capsys):
        code, out, _ = invoke(capsys, "table", "--n", "3", "--format", "json")
        records = json.loads(out)
        assert {"n": 3, "k": 1, "m": 0, "count": 1} in records

    def test_out_writes_identical_file(self, capsys, tmp_path):
        path = tmp_path / "table.csv"
        code, out, _ = invoke(capsys, "table", "--n", "5", "--out", str(path))
        assert code == 0
        assert out == ""
        _, direct, _ = invoke(capsys, "table", "--n", "5")
        assert path.read_bytes().decode() == direct
        assert b"\r" not in path.read_bytes()

    def test_triangle_bfile(self, capsys, tmp_path):
        path = tmp_path / "b.txt"
        code, _, _ = invoke(capsys, "triangle", "--rows", "10", "--format", "bfile", "--out", str(path))
        assert code == 0
        lines = path.read_text().splitlines()
        assert lines[0] == "1 1"
        assert len(lines) == 55

    def test_bad_format(self, capsys):
        code, _, err = invoke(capsys, "table", "--n", "4", "--format", "xml")
        assert code == 2


class TestVerify:
    def test_clean_build_exits_zero(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--max-n", "6")
        assert code == 0
        assert out.startswith("PASS: 0 mismatches")

    def test_mode_flag(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--max-n", "5", "--mode", "circular")
        assert code == 0
        assert "mode=circular" in out

    def test_fault_exits_one(self, capsys, monkeypatch):
        monkeypatch.setattr(bitpairs.tables, "z_auto", lambda n, k, m: 7)
        code, out, _ = invoke(capsys, "verify", "--max-n", "4", "--mode", "linear")
        assert code == 1
        assert out.startswith("FAIL")

    def test_over_limit(self, capsys):
        code, _, err = invoke(capsys, "verify", "--max-n", "25")
        assert code == 2
        assert "oracle limit exceeded" in err


class TestConsoleScript:
    def test_entry_point(self):
        proc = subprocess.run(
            ["bitpairs", "count", "--n", "8", "--k", "2", "--m", "2", "--circular"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout == "36\n"
