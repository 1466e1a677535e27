import io
import json

import pytest

from modwythoff.cli import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_classify_p(capsys):
    code, out = run_cli(capsys, "classify", "-m", "5", "4", "7")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "P"


def test_classify_n_names_a_move(capsys):
    code, out = run_cli(capsys, "classify", "-m", "2", "3", "5")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "N"
    assert lines[1].startswith("winning move:")


def test_classify_terminal(capsys):
    code, out = run_cli(capsys, "classify", "-m", "3", "0", "0")
    assert code == EXIT_OK and out.splitlines()[0] == "P"


def test_classify_json_round_trip(capsys):
    _, out = run_cli(capsys, "classify", "--format", "json", "-m", "2", "3", "5")
    payload = json.loads(out)
    assert payload["label"] == "N"
    assert set(payload["winning_move"]) == {"kind", "k1", "k2"}

    _, out = run_cli(capsys, "classify", "--format", "json", "-m", "5", "4", "7")
    assert json.loads(out) == {"label": "P", "winning_move": None}


def test_ppositions_text(capsys):
    code, out = run_cli(capsys, "ppositions", "-m", "4")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0].startswith("5 P-positions")
    assert lines[-1] == "(5, 3)"  # lexicographic order

    _, out = run_cli(capsys, "ppositions", "-m", "1")
    assert out.strip().splitlines()[0].startswith("1 P-position")


def test_ppositions_json(capsys):
    _, out = run_cli(capsys, "ppositions", "--format", "json", "-m", "2")
    payload = json.loads(out)
    assert payload["count"] == 3
    assert payload["positions"] == [[0, 0], [1, 2], [2, 1]]


def test_verify_range_passes(capsys):
    code, out = run_cli(capsys, "verify", "--range", "2", "5")
    assert code == EXIT_OK
    assert "all checks passed" in out


def test_verify_csv_format(capsys):
    code, out = run_cli(capsys, "verify", "--range", "2", "3", "--format", "csv")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "m,box_side,closed_count,oracle_count,sets_equal,count_ok,subset_ok,strategy_ok"
    assert len(lines) == 3


def test_verify_json_format(capsys):
    code, out = run_cli(capsys, "verify", "--range", "1", "4", "--format", "json")
    assert code == EXIT_OK
    reports = json.loads(out)
    assert [r["m"] for r in reports] == [1, 2, 3, 4]
    assert all(r["all_pass"] for r in reports)


def test_verify_mismatch_exit_code(capsys):
    # beyond the oracle tier: error recorded per-m -> exit 1, not a crash
    code, out = run_cli(capsys, "verify", "--range", "1700", "1700")
    assert code == EXIT_MISMATCH
    assert "FAILURES" in out


def test_usage_errors_exit_2():
    for argv in (
        ["classify", "-m", "0", "1", "1"],
        ["classify", "-m", "2", "-1", "1"],
        ["ppositions", "-m", "-3"],
        ["verify", "--range", "0", "0"],
        ["verify", "--range", "5", "2"],
        ["verify", "--range", "2", "4", "--box-factor", "1.0"],
        ["table", "0"],
        ["classify"],
        ["nonsense"],
    ):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == EXIT_USAGE


def test_out_of_cap_values_exit_2(capsys):
    assert main(["classify", "-m", "2", "99999999999999999999", "1"]) == EXIT_USAGE


def test_table_text(capsys):
    code, out = run_cli(capsys, "table", "2", "3", "4", "5")
    assert code == EXIT_OK
    assert "2 | (0, 0), (1, 2), (2, 1)" in out
    assert "5 | (0, 0), (1, 2), (2, 1), (3, 5), (5, 3), (4, 7), (7, 4)" in out


def test_table_csv(capsys):
    code, out = run_cli(capsys, "table", "--format", "csv", "2")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "m,count,p_positions"
    assert '2,3,"(0, 0), (1, 2), (2, 1)"' in out


def test_play_human_wins(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("II 3 3\n"))
    code, out = run_cli(capsys, "play", "-m", "2", "3", "3")
    assert code == EXIT_OK
    assert "you win!" in out


def test_play_illegal_then_resign(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("II 1 2\ngarbage\nquit\n"))
    code, out = run_cli(capsys, "play", "-m", "2", "3", "3")
    assert code == EXIT_OK
    assert "congruence failure" in out
    assert "could not parse" in out
    assert "resigned" in out


def test_play_engine_first_from_n_position(capsys, monkeypatch):
    # engine moves (3,3) -> (0,0); the human then has no move and loses
    monkeypatch.setattr("sys.stdin", io.StringIO(""))
    code, out = run_cli(capsys, "play", "-m", "2", "3", "3", "--engine-first")
    assert code == EXIT_OK
    assert "-> (0, 0)" in out
    assert "you lose" in out
