import subprocess
import sys

import numpy as np
import pytest

from logit_gof.cli import main, read_sample_file
from logit_gof.logistic import quantile_array
from logit_gof.statistics import statistic_v


@pytest.fixture()
def near_null_file(tmp_path):
    n = 200
    x = quantile_array((np.arange(n) + 0.5) / n)
    path = tmp_path / "sample.txt"
    path.write_text("# plug-in logistic quantiles\n" + "\n".join(map(str, x)) + "\n")
    return path


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTestCommand:
    def test_near_null_not_rejected(self, near_null_file, capsys):
        code, out, _ = run_cli(
            ["test", "--in", str(near_null_file), "--kind", "v", "--reps", "4000"],
            capsys,
        )
        assert code == 0
        assert out.count("not rejected") == 4
        assert "rejected\n" not in out.replace("not rejected", "")

    def test_uniform_sample_rejected(self, tmp_path, capsys):
        rng = np.random.default_rng(99)
        path = tmp_path / "u.txt"
        path.write_text("\n".join(map(str, rng.random(100))))
        code, out, _ = run_cli(
            ["test", "--in", str(path), "--kind", "w", "--reps", "4000"], capsys
        )
        assert code == 1

    def test_statistic_printed_bit_exact(self, tmp_path, capsys):
        rng = np.random.default_rng(7)
        values = np.tan(np.pi * (rng.random(20) - 0.5))
        path = tmp_path / "c.txt"
        path.write_text("\n".join(map(str, values)))
        code, out, _ = run_cli(
            ["test", "--in", str(path), "--kind", "v", "--reps", "2000"], capsys
        )
        printed = next(
            tok.split("=")[1]
            for tok in out.split()
            if tok.startswith("nV_n=")
        )
        expected = statistic_v(read_sample_file(path)).statistic
        assert float(printed) == expected

    def test_constant_sample_exits_2(self, tmp_path, capsys):
        path = tmp_path / "const.txt"
        path.write_text("5.0\n5.0\n5.0\n")
        code, _, err = run_cli(["test", "--in", str(path)], capsys)
        assert code == 2
        assert "constant" in err or "variance" in err

    def test_non_numeric_exits_2(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("1.0\nhello\n2.0\n")
        code, _, err = run_cli(["test", "--in", str(path)], capsys)
        assert code == 2
        assert "non-numeric" in err

    def test_missing_file_exits_2(self, tmp_path, capsys):
        code, _, err = run_cli(["test", "--in", str(tmp_path / "nope.txt")], capsys)
        assert code == 2

    def test_asymptotic_table(self, near_null_file, capsys):
        code, out, _ = run_cli(
            [
                "test", "--in", str(near_null_file), "--kind", "w",
                "--table", "asymptotic", "--reps", "3000", "--truncation", "300",
            ],
            capsys,
        )
        assert code == 0
        assert "limit-law series" in out


class TestReadSampleFile:
    def test_comments_and_blank_lines_ignored(self, tmp_path):
        path = tmp_path / "s.txt"
        path.write_text("# header\n1.0\n\n2.5\n# more\n-3.0\n")
        sample = read_sample_file(path)
        assert list(sample.values) == [1.0, 2.5, -3.0]

    def test_csv_fields_accepted(self, tmp_path):
        path = tmp_path / "s.csv"
        path.write_text("1.0,2.0\n3.0,4.0\n")
        assert read_sample_file(path).n == 4

    def test_too_few_values(self, tmp_path):
        path = tmp_path / "one.txt"
        path.write_text("1.0\n")
        with pytest.raises(ValueError, match="at least 2"):
            read_sample_file(path)


class TestCritvalsCommand:
    def test_writes_csv_and_caches(self, tmp_path, capsys):
        out_a = tmp_path / "a.csv"
        out_b = tmp_path / "b.csv"
        args = [
            "critvals", "--kind", "v", "--n", "15", "--reps", "2000",
            "--seed", "5", "--cache-dir", str(tmp_path / "cache"),
        ]
        assert main(args + ["--out", str(out_a)]) == 0
        assert main(args + ["--out", str(out_b)]) == 0
        capsys.readouterr()
        assert out_a.read_bytes() == out_b.read_bytes()
        lines = out_a.read_text().splitlines()
        assert lines[0] == "kind,size,level,critval,reps,truncation,seed"
        assert len(lines) == 5

    def test_prints_rows_without_out(self, tmp_path, capsys):
        code, out, _ = run_cli(
            [
                "critvals", "--kind", "w", "--reps", "1000", "--truncation", "200",
                "--levels", "0.9,0.95", "--cache-dir", str(tmp_path),
            ],
            capsys,
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "kind,size,level,critval,reps,truncation,seed"
        assert all(line.startswith("w,asymptotic,") for line in lines[1:])


class TestPowerCommand:
    def test_row_format_and_value(self, tmp_path, capsys):
        code, out, _ = run_cli(
            [
                "power", "--alt", "logistic", "--kind", "v", "--n", "20",
                "--alpha", "0.1", "--reps", "4000", "--seed", "3",
                "--cache-dir", str(tmp_path),
            ],
            capsys,
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "kind,alternative,n,alpha,power,reps,seed"
        kind, alt, n, alpha, power, reps, seed = lines[1].split(",")
        assert (kind, alt, n, reps, seed) == ("v", "logistic", "20", "4000", "3")
        assert 0.05 <= float(power) <= 0.2

    def test_asymptotic_table_flag(self, tmp_path, capsys):
        code, out, _ = run_cli(
            [
                "power", "--alt", "logistic", "--kind", "v", "--n", "100",
                "--alpha", "0.1", "--reps", "4000", "--seed", "3",
                "--table", "asymptotic", "--truncation", "500",
                "--cache-dir", str(tmp_path),
            ],
            capsys,
        )
        assert code == 0
        power = float(out.strip().splitlines()[1].split(",")[4])
        # size stays near alpha when asymptotic critical values are used at n=100
        assert 0.05 <= power <= 0.2

    def test_unknown_alternative_exits_2(self, tmp_path, capsys):
        code, _, err = run_cli(
            ["power", "--alt", "gumbel", "--reps", "500", "--n", "5",
             "--cache-dir", str(tmp_path)],
            capsys,
        )
        assert code == 2
        assert "unknown distribution" in err


class TestLimitdistCommand:
    def test_unwritable_path_exits_2(self, tmp_path, capsys):
        blocker = tmp_path / "file"
        blocker.write_text("x")
        code, _, err = run_cli(
            [
                "limitdist", "--kind", "w", "--reps", "10",
                "--truncation", "10", "--out", str(blocker / "x.csv"),
            ],
            capsys,
        )
        assert code == 2
        assert "error" in err

    def test_output_file(self, tmp_path, capsys):
        out = tmp_path / "dist.csv"
        code, _, _ = run_cli(
            [
                "limitdist", "--kind", "v", "--reps", "500",
                "--truncation", "100", "--out", str(out),
            ],
            capsys,
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "value,cdf"
        assert len(lines) == 501
        values = [float(line.split(",")[0]) for line in lines[1:]]
        cdf = [float(line.split(",")[1]) for line in lines[1:]]
        assert values == sorted(values)
        assert cdf[0] > 0.0 and cdf[-1] == 1.0
        assert all(b > a for a, b in zip(cdf, cdf[1:]))


def test_verify_command(capsys):
    code, out, _ = run_cli(["verify"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4
    assert all(line.startswith("PASS") for line in lines)


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "logit_gof.cli", "--version"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "0.1.0"
