import subprocess
import sys

import pytest

from pbheap.cli import InputError, main, parse_int64_lines


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_sort_stdin(capsys, monkeypatch):
    assert run(capsys, "sort", stdin="3\n1\n2\n", monkeypatch=monkeypatch)[:2] == (0, "1\n2\n3\n")


def test_sort_empty(capsys, monkeypatch):
    assert run(capsys, "sort", stdin="", monkeypatch=monkeypatch)[:2] == (0, "")


def test_sort_file_without_trailing_newline(capsys, tmp_path):
    f = tmp_path / "in.txt"
    f.write_text("-5\n9223372036854775807\n-9223372036854775808")
    code, out, _ = run(capsys, "sort", str(f))
    assert code == 0
    assert out == "-9223372036854775808\n-5\n9223372036854775807\n"


@pytest.mark.parametrize("text", ["1\nx\n", "1\n\n2\n", "9223372036854775808\n", "1.5\n", "--1\n"])
def test_sort_rejects_bad_input(capsys, monkeypatch, text):
    code, out, err = run(capsys, "sort", stdin=text, monkeypatch=monkeypatch)
    assert code == 2 and out == "" and "line" in err


def test_sort_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "sort", str(tmp_path / "nope"))
    assert code == 2 and err


def test_parse_int64_lines():
    assert parse_int64_lines(" 4 \n+2\n") == [4, 2]
    with pytest.raises(InputError):
        parse_int64_lines("-9223372036854775809\n")


def test_check_passes(capsys):
    code, out, _ = run(capsys, "check", "--seed", "42", "--ops", "10000")
    assert code == 0
    assert "FAIL" not in out
    assert out.count("PASS") == 6


def test_check_zero_ops_is_vacuous(capsys):
    code, out, _ = run(capsys, "check", "--ops", "0")
    assert code == 0 and "FAIL" not in out


def test_check_detects_injected_fault(capsys):
    code, out, _ = run(capsys, "check", "--ops", "500", "--fault", "swap-compare")
    assert code == 1
    assert "FAIL differential" in out
    line = next(l for l in out.splitlines() if "counterexample" in l)
    # shrunk to the two inserts that expose the reversed ordering
    assert "(2 ops)" in line


def test_bench_writes_csv(capsys, tmp_path):
    out = tmp_path / "b.csv"
    code, _, _ = run(capsys, "bench", "--sizes", "7,15", "--reps", "2", "--out", str(out))
    assert code == 0
    lines = out.read_bytes().split(b"\n")
    assert lines[0] == b"operation,n,rep,comparisons,allocations,depth,wall_nanos"
    assert b"\r" not in out.read_bytes()
    assert len([l for l in lines if l]) == 1 + 2 * 3 * 2


def test_bench_unwritable_path(capsys, tmp_path):
    code, _, err = run(capsys, "bench", "--sizes", "7", "--out", str(tmp_path / "missing" / "b.csv"))
    assert code != 0 and "cannot write" in err


@pytest.mark.parametrize("sizes", ["0", "a,b", ""])
def test_bench_rejects_bad_sizes(capsys, sizes):
    assert run(capsys, "bench", "--sizes", sizes)[0] == 2


def test_usage_error_exit_code(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "pbheap", "sort"], input="2\n-1\n", capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "-1\n2\n"
