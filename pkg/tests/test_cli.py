import csv
import io

import pytest

from kendall_seq.cli import main, parse_input


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dist_tokens_inline(capsys):
    code, out, _ = run(capsys, "dist", "--inline", "hello world hello blue sky",
                       "hello blue sky hello world", "--mode", "tokens")
    assert (code, out) == (0, "5\n")


@pytest.mark.parametrize("alg", ["sort", "hash", "both"])
def test_dist_ints(capsys, alg):
    code, out, _ = run(capsys, "dist", "--inline", "1 2 3 1 1 2 2", "3 2 1 2 1 2 1",
                       "--mode", "ints", "--alg", alg)
    assert (code, out) == (0, "6\n")


def test_dist_identical_files(capsys, tmp_path):
    f = tmp_path / "a.txt"
    f.write_text("the quick brown fox\njumps over\n", encoding="utf-8")
    code, out, _ = run(capsys, "dist", str(f), str(f))
    assert (code, out) == (0, "0\n")


def test_dist_chars_and_floats(capsys, tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    a.write_text("abacada\n", encoding="utf-8")
    b.write_text("bcaaaad\n", encoding="utf-8")
    assert run(capsys, "dist", str(a), str(b), "--mode", "chars")[:2] == (0, "4\n")
    assert run(capsys, "dist", "--inline", "1.5 2 nan", "nan 2.0 1.5",
               "--mode", "floats")[:2] == (0, "3\n")


@pytest.mark.parametrize("first, second, name", [
    ("a b c", "a b", "LengthMismatch"),
    ("a b c", "a b d", "ElementNotShared"),
    ("a a b", "a b b", "CountMismatch"),
])
def test_dist_domain_errors(capsys, first, second, name):
    code, out, err = run(capsys, "dist", "--inline", first, second)
    assert code == 2 and out == "" and name in err


def test_parse_error_reports_position(capsys):
    code, out, err = run(capsys, "dist", "--inline", "1 2\n3 x4", "1 2 3 4", "--mode", "ints")
    assert code == 1 and out == ""
    assert "<inline>:2:3" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "dist", str(tmp_path / "nope"), str(tmp_path / "nope"))
    assert code == 1 and "cannot read" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["dist", "--inline", "a"])
    assert info.value.code == 1


def test_rank_metrics(capsys):
    assert run(capsys, "rank", "--inline", "2 4 1 3", "4 1 3 2",
               "--metric", "kendall")[:2] == (0, "5\n")
    assert run(capsys, "rank", "--inline", "1 2 3 1 1 2 2", "3 2 1 2 1 2 1",
               "--metric", "kp", "--p", "0.5")[:2] == (0, "13.0\n")
    assert run(capsys, "rank", "--inline", "1 2 3", "1 2 3", "--metric", "tau")[:2] == (0, "1.0\n")
    code, out, _ = run(capsys, "rank", "--inline", "2 4 1 3", "4 1 3 2", "--metric", "kendall-norm")
    assert code == 0 and float(out) == pytest.approx(5 / 6)


def test_rank_errors(capsys):
    code, _, err = run(capsys, "rank", "--inline", "1 1 2", "1 2 3", "--metric", "tau")
    assert code == 2 and "total rankings" in err
    code, _, err = run(capsys, "rank", "--inline", "1 2", "2 1", "--metric", "kp")
    assert code == 1 and "--p" in err
    code, _, _ = run(capsys, "rank", "--inline", "1 2", "2 1", "--metric", "kp", "--p", "2")
    assert code == 2


def test_bench_one_cell(capsys, tmp_path):
    out_path = tmp_path / "b.csv"
    args = ["bench", "--lengths", "256", "--alphabets", "256", "--pairs", "5",
            "--mode", "ints", "--seed", "3", "--out", str(out_path)]
    code, out, err = run(capsys, *args)
    assert code == 0 and out == "" and "1 cells" in err
    rows = list(csv.DictReader(out_path.open(encoding="utf-8")))
    assert len(rows) == 2
    assert {r["algorithm"] for r in rows} == {"sort", "hash"}
    first = [r["distance_checksum"] for r in rows]
    run(capsys, *args)
    rows = list(csv.DictReader(out_path.open(encoding="utf-8")))
    assert [r["distance_checksum"] for r in rows] == first


def test_bench_default_grid_row_count(capsys):
    code, out, _ = run(capsys, "bench", "--pairs", "1", "--lengths", "8", "16", "32",
                       "--alphabets", "1", "4")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and len(rows) == 1 + 3 * 2 * 2


def test_bench_invalid_flags(capsys):
    with pytest.raises(SystemExit) as info:
        main(["bench", "--pairs", "0"])
    assert info.value.code == 1
    code, _, _ = run(capsys, "bench", "--lengths", "8", "--out", "/nonexistent/dir/x.csv")
    assert code == 1


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "4", "--alphabet", "2")
    assert code == 0 and out.startswith("checked 99 pairs") and "0 failed" in out
    code, out, _ = run(capsys, "verify", "--max-n", "1")
    assert code == 0 and "0 failed" in out
    code, _, _ = run(capsys, "verify", "--max-n", "11")
    assert code == 1
    code, out, _ = run(capsys, "verify", "--budget", "25")
    assert out.startswith("checked 25 pairs")


def test_parse_input_modes():
    assert parse_input("ab\n", "chars") == ["a", "b"]
    assert parse_input(" 1  2\n3 ", "ints") == [1, 2, 3]
    assert parse_input("x y\nz", "tokens") == ["x", "y", "z"]
