import io

import pytest

from twoclosure.cli import main
from twoclosure.coloring import orb2
from twoclosure.fixtures import fixture_example1, random_abelian_cyclic
from twoclosure.groupfile import parse_group, serialize_group


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_group(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_decide_closed_group_exits_zero(tmp_path, capsys):
    path = write_group(tmp_path, "c4.grp", "degree 4\ngen (0 1 2 3)\n")
    code, out, _ = run(capsys, "decide", path)
    assert code == 0
    assert out.splitlines() == [
        "step Validate degree=4 order=4",
        "step TransitiveBase degree=4 order=4",
        "verdict 2-closed",
    ]


def test_decide_example1_exits_one(tmp_path, capsys):
    path = write_group(tmp_path, "ex1.grp", serialize_group(fixture_example1(2)))
    code, out, _ = run(capsys, "decide", path)
    assert code == 1
    assert out.splitlines() == [
        "step Validate degree=6 order=4",
        "step ZelNotInside degree=6 order=4",
        "verdict not-2-closed",
    ]


def test_decide_with_oracle_check(tmp_path, capsys):
    path = write_group(tmp_path, "ex1.grp", serialize_group(fixture_example1(2)))
    code, out, _ = run(capsys, "decide", path, "--oracle-check")
    assert code == 1
    lines = out.splitlines()
    assert "oracle not-2-closed" in lines
    assert "agreement ok" in lines


def test_decide_renders_detail_fields(tmp_path, capsys):
    path = write_group(tmp_path, "mix.grp", "degree 5\ngen (0 1)\ngen (2 3 4)\n")
    code, out, _ = run(capsys, "decide", path)
    assert code == 0
    assert "step SylowSplit degree=5 order=6 primes=2,3" in out.splitlines()


def test_decide_parse_error_exits_two(tmp_path, capsys):
    path = write_group(tmp_path, "bad.grp", "degree 2\ngen (0 1 2)\n")
    code, out, err = run(capsys, "decide", path)
    assert code == 2
    assert err.startswith("error:")


def test_decide_precondition_failure_exits_two(tmp_path, capsys):
    klein = "degree 4\ngen (0 1)(2 3)\ngen (0 2)(1 3)\n"
    path = write_group(tmp_path, "klein.grp", klein)
    code, _, err = run(capsys, "decide", path)
    assert code == 2
    assert "constituent" in err


def test_missing_file_exits_two(tmp_path, capsys):
    code, _, err = run(capsys, "decide", str(tmp_path / "absent.grp"))
    assert code == 2
    assert err.startswith("error:")


def test_closure_output_is_a_group_file(tmp_path, capsys):
    path = write_group(tmp_path, "ex1.grp", serialize_group(fixture_example1(2)))
    code, out, _ = run(capsys, "closure", path)
    assert code == 0
    assert out.splitlines()[0] == "# order 8"
    assert parse_group(out).order() == 8


def test_zel_output_matches_library(tmp_path, capsys):
    path = write_group(tmp_path, "ex1.grp", serialize_group(fixture_example1(2)))
    code, out, _ = run(capsys, "zel", path)
    assert code == 0
    assert out.splitlines()[0] == "# order 8"


def test_zel_on_transitive_group_exits_two(tmp_path, capsys):
    path = write_group(tmp_path, "c4.grp", "degree 4\ngen (0 1 2 3)\n")
    code, _, err = run(capsys, "zel", path)
    assert code == 2
    assert "transitive" in err


def test_orbits_output(tmp_path, capsys):
    path = write_group(tmp_path, "ex1.grp", serialize_group(fixture_example1(2)))
    code, out, _ = run(capsys, "orbits", path)
    assert code == 0
    assert out == "0 1\n2 3\n4 5\n"


def test_orb2_output(tmp_path, capsys):
    path = write_group(tmp_path, "c4.grp", "degree 4\ngen (0 1 2 3)\n")
    code, out, _ = run(capsys, "orb2", path)
    assert code == 0
    g = parse_group("degree 4\ngen (0 1 2 3)\n")
    assert out == orb2(g).render() + "\n"


def test_example_subcommands_emit_parseable_fixtures(capsys):
    code, out, _ = run(capsys, "example1", "2")
    assert code == 0
    assert parse_group(out) == fixture_example1(2)

    code, out, _ = run(capsys, "example2", "3")
    assert code == 0
    assert parse_group(out).degree == 18


def test_example_subcommand_rejects_non_prime(capsys):
    code, _, err = run(capsys, "example1", "4")
    assert code == 2
    assert "not prime" in err


def test_random_subcommand_is_deterministic(capsys):
    code, first, _ = run(capsys, "random", "--seed", "5", "--max-degree", "9")
    assert code == 0
    code, second, _ = run(capsys, "random", "--seed", "5", "--max-degree", "9")
    assert first == second
    assert parse_group(first) == random_abelian_cyclic(5, 9)


def test_random_regular_flag(capsys):
    code, out, _ = run(capsys, "random", "--seed", "1", "--max-degree", "8", "--regular")
    assert code == 0
    assert parse_group(out).is_transitive()


def test_stdin_input(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO("degree 4\ngen (0 1 2 3)\n"))
    code, out, _ = run(capsys, "decide", "-")
    assert code == 0
    assert "verdict 2-closed" in out


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["decide"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 2
