import json

import pytest

from staircase_rings.cli import (
    EXIT_INPUT,
    EXIT_MISMATCH,
    EXIT_OK,
    grid_cells,
    main,
    parse_partition,
)
from staircase_rings.qpoly import QPoly


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_partition():
    assert parse_partition("") == ()
    assert parse_partition("2,1") == (2, 1)
    with pytest.raises(ValueError):
        parse_partition("1,2")
    with pytest.raises(ValueError):
        parse_partition("x")


def test_hilb_table(capsys):
    code, out, _ = run(capsys, "hilb", "--n", "3", "--lambda", "1,1", "--s", "2")
    assert code == EXIT_OK
    assert out.strip() == str(QPoly((1, 3, 2)))


def test_hilb_json_round_trip(capsys):
    code, out, _ = run(
        capsys, "hilb", "--n", "3", "--lambda", "1,1", "--s", "2",
        "--format", "json",
    )
    assert code == EXIT_OK
    assert QPoly.from_json(json.loads(out)) == QPoly((1, 3, 2))


def test_hilb_check_agrees(capsys):
    code, out, _ = run(
        capsys, "hilb", "--n", "4", "--lambda", "2,1", "--s", "3", "--check"
    )
    assert code == EXIT_OK


def test_bad_partition_exit_code(capsys):
    code, _, err = run(capsys, "hilb", "--n", "3", "--lambda", "1,2", "--s", "2")
    assert code == EXIT_INPUT
    assert "error" in err


def test_semantically_bad_input_exit_code(capsys):
    # partition longer than s
    code, _, err = run(capsys, "hilb", "--n", "3", "--lambda", "1,1", "--s", "1")
    assert code == EXIT_INPUT


def test_basis_count_and_listing(capsys):
    code, out, _ = run(
        capsys, "basis", "--n", "4", "--lambda", "2,1", "--s", "3", "--count"
    )
    assert code == EXIT_OK and out.strip() == "22"
    code, out, _ = run(
        capsys, "basis", "--n", "4", "--lambda", "2,1", "--s", "3",
        "--format", "json",
    )
    members = json.loads(out)
    assert len(members) == 22 and [0, 0, 0, 0] in members


def test_osp_count(capsys):
    code, out, _ = run(
        capsys, "osp", "--n", "4", "--lambda", "1,1", "--s", "2", "--count"
    )
    assert code == EXIT_OK and out.strip() == "14"


def test_fillings_count_matches_basis(capsys):
    code, out, _ = run(
        capsys, "fillings", "--n", "4", "--lambda", "2,1", "--s", "3",
        "--standard", "--count",
    )
    assert code == EXIT_OK and out.strip() == "22"


def test_frob_schur_output(capsys):
    code, out, _ = run(capsys, "frob", "--n", "2", "--lambda", "1", "--s", "2")
    assert code == EXIT_OK
    assert "s[2]" in out and "s[1,1]" in out
    code, out, _ = run(
        capsys, "frob", "--n", "2", "--lambda", "1", "--s", "2", "--check"
    )
    assert code == EXIT_OK


def test_rank_hilb_output(capsys):
    code, out, _ = run(
        capsys, "rank-hilb", "--n", "3", "--lambda", "1", "--max-degree", "4",
        "--format", "csv",
    )
    assert code == EXIT_OK
    assert out.strip() == "1,3,6,9,12"


def test_verify_small_grid(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "basis", "--max-n", "3", "--max-s", "2",
        "--threads", "1",
    )
    assert code == EXIT_OK
    assert "0 failures" in out
    assert "FAIL" not in out


def test_verify_exact_sequence(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "exact-sequence", "--max-n", "3",
        "--max-s", "3", "--threads", "1",
    )
    assert code == EXIT_OK and "0 failures" in out


def test_grid_cells_shape():
    cells = list(grid_cells(3, 2))
    assert (1, (), 1) in cells
    assert all(len(la) <= s and sum(la) <= n for n, la, s in cells)


def test_determinism(capsys):
    args = ["frob", "--n", "4", "--lambda", "2,1", "--s", "3", "--format", "json"]
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
