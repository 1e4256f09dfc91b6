"""
命令行测试：输出与退出码
"""

import io

import pytest

from hedonic_games.cli import EXIT_ERROR, EXIT_NOT_EXISTS, EXIT_OK, EXIT_UNSTABLE, main
from hedonic_games.core.formats import format_game, parse_game
from hedonic_games.core.generators import gen_extended_stalker
from hedonic_games.core.model import Variant, has_unacceptability, is_strict
from tests.conftest import STALKER_TEXT

XOR_DIMACS = "c (x1 or x2) and (not x1 or not x2)\np cnf 2 2\n1 2 0\n-1 -2 0\n"


@pytest.fixture
def stalker_file(write_file):
    return write_file("stalker.game", STALKER_TEXT)


@pytest.fixture
def extended_file(write_file):
    return write_file("extended.game", format_game(gen_extended_stalker()))


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_reports_deviation(capsys, stalker_file, write_file):
    partition = write_file("grand.part", "{1 2}\n")
    code, out, _ = _run(capsys, "check", "--game", stalker_file, "--partition", partition)
    assert code == EXIT_UNSTABLE
    assert out.splitlines() == ["stable: no", "deviation: player 1 -> empty"]


def test_check_stable(capsys, stalker_file, write_file):
    partition = write_file("single.part", "{1} {2}")
    code, out, _ = _run(capsys, "check", "--game", stalker_file, "--partition", partition, "--concept", "is")
    assert code == EXIT_OK
    assert out.splitlines() == ["stable: yes"]


def test_check_ir_and_core(capsys, stalker_file, extended_file, write_file):
    grand = write_file("grand.part", "{1 2}")
    code, out, _ = _run(capsys, "check", "--game", stalker_file, "--partition", grand, "--concept", "ir")
    assert code == EXIT_UNSTABLE
    assert out.splitlines()[1] == "player 1 finds its coalition unacceptable"

    start = write_file("start.part", "{1} {2 3} {4 5}")
    code, out, _ = _run(capsys, "check", "--game", extended_file, "--partition", start, "--concept", "strict-core")
    assert code == EXIT_UNSTABLE
    assert out.splitlines()[1].startswith("weakly blocking coalition: {")


def test_compare(capsys, stalker_file):
    code, out, _ = _run(capsys, "compare", "--game", stalker_file, "--player", "2", "--left", "1 2", "--right", "{2}")
    assert code == EXIT_OK
    assert out.strip() == "greater"


def test_solve_commands(capsys, stalker_file):
    code, out, _ = _run(capsys, "solve", "--game", stalker_file, "--algorithm", "cis-ir")
    assert (code, out.strip()) == (EXIT_OK, "{1} {2}")

    code, out, _ = _run(capsys, "solve", "--game", stalker_file, "--variant", "B", "--algorithm", "ns-b-uf")
    assert (code, out.strip()) == (EXIT_NOT_EXISTS, "no NS partition exists")

    code, out, _ = _run(capsys, "solve", "--game", stalker_file, "--variant", "B", "--algorithm", "is-b")
    assert (code, out.strip()) == (EXIT_OK, "{1} {2}")

    code, out, _ = _run(capsys, "solve", "--game", stalker_file, "--algorithm", "grand-ns")
    assert (code, out.strip()) == (EXIT_UNSTABLE, "no: grand coalition is not NS")


def test_solve_precondition_failure(capsys, stalker_file):
    code, out, err = _run(capsys, "solve", "--game", stalker_file, "--algorithm", "ns-b-uf")
    assert code == EXIT_ERROR
    assert out == ""
    assert "error [PRECONDITION_FAILED]" in err


def test_enumerate(capsys, stalker_file):
    code, out, _ = _run(capsys, "enumerate", "--game", stalker_file)
    assert code == EXIT_NOT_EXISTS
    assert out.splitlines() == ["count: 0 / 2"]

    code, out, _ = _run(capsys, "enumerate", "--game", stalker_file, "--concept", "is")
    assert code == EXIT_OK
    assert out.splitlines() == ["is: {1} {2}", "count: 1 / 2"]


def test_enumerate_capacity(capsys, stalker_file):
    code, _, err = _run(capsys, "enumerate", "--game", stalker_file, "--cap", "1")
    assert code == EXIT_ERROR
    assert "CAPACITY_EXCEEDED" in err
    assert "cap=1" in err


def test_dynamics_cycle(capsys, extended_file, write_file):
    start = write_file("start.part", "{1} {2 3} {4 5}")
    code, out, _ = _run(capsys, "dynamics", "--game", extended_file, "--partition", start)
    assert code == EXIT_UNSTABLE
    assert out.splitlines() == [
        "step 0: player 5 -> {1}",
        "step 1: player 3 -> {4}",
        "step 2: player 1 -> {2}",
        "step 3: player 4 -> {5}",
        "step 4: player 2 -> {3}",
        "cycle at 0",
    ]


def test_dynamics_defaults(capsys, stalker_file):
    code, out, _ = _run(capsys, "dynamics", "--game", stalker_file)
    assert (code, out.splitlines()) == (EXIT_OK, ["stabilized"])
    code, out, _ = _run(capsys, "dynamics", "--game", stalker_file, "--kind", "ns", "--max-steps", "1")
    assert code == EXIT_UNSTABLE
    assert out.splitlines() == ["step 0: player 2 -> {1}", "truncated"]


def test_reduce_with_witness(capsys, write_file):
    cnf = write_file("xor.cnf", XOR_DIMACS)
    code, out, _ = _run(capsys, "reduce", "--cnf", cnf, "--reduction", "ns-bb", "--witness", "10")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "variant: BB"
    assert "# name one -> id 1" in lines
    assert "# name X2 -> id 8" in lines
    assert lines[-1] == "# witness: {1 3 6} {2 4 5} {7 8}"
    assert parse_game(out).n == 8


def test_reduce_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("p cnf 1 2\n1 0\n-1 0\n"))
    code, out, _ = _run(capsys, "reduce", "--reduction", "is-bb")
    assert code == EXIT_OK
    assert parse_game(out).n == 13


def test_reduce_rejects_unsatisfying_witness(capsys, write_file):
    cnf = write_file("xor.cnf", XOR_DIMACS)
    code, _, err = _run(capsys, "reduce", "--cnf", cnf, "--reduction", "ns-w", "--witness", "11")
    assert code == EXIT_ERROR
    assert "assumption=satisfying-valuation" in err


def test_generate(capsys):
    code, out, _ = _run(capsys, "generate", "stalker")
    assert (code, out) == (EXIT_OK, STALKER_TEXT)

    code, out, _ = _run(
        capsys, "generate", "random", "--n", "5", "--seed", "3", "--variant", "W",
        "--strict", "--no-unacceptability"
    )
    assert code == EXIT_OK
    game = parse_game(out)
    assert game.variant == Variant.W
    assert game.n == 5
    assert is_strict(game.profile)
    assert not has_unacceptability(game.profile)


@pytest.mark.parametrize("argv", [
    ["generate", "random", "--strict", "--tie-probability", "0.5"],
    ["generate", "random", "--tie-probability", "2"],
    ["solve", "--game", "x.game"],
    ["unknown"],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == EXIT_ERROR


def test_parse_error_location(capsys, write_file):
    bad = write_file("bad.game", "variant: BB\nplayers: 3\npref 1: 2 ; 4\n")
    code, _, err = _run(capsys, "enumerate", "--game", bad)
    assert code == EXIT_ERROR
    assert "error [PARSE_ERROR]: line 3, column 13:" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = _run(capsys, "enumerate", "--game", str(tmp_path / "missing.game"))
    assert code == EXIT_ERROR
    assert "error:" in err


def test_help_exits_cleanly(capsys):
    assert main(["--help"]) == EXIT_OK
