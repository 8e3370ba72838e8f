"""End-to-end tests for the command line front end.

Everything runs in-process through main(argv) so exit codes, stdout and
stderr are all observable.  Input files are produced either by hand or
by round-tripping the tool's own dump output through tmp_path.
"""

import json

import pytest

from lralg.cli import main
from lralg.fileformat import parse_algebra_text, format_algebra


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def dump_to(tmp_path, capsys, fname, key, *params):
    argv = ["catalog", "dump", key]
    for p in params:
        argv += ["--param", p]
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    path = tmp_path / fname
    path.write_text(out, encoding="utf-8")
    return str(path)


# ---------------------------------------------------------------------------
# check


def test_check_valid_structure(tmp_path, capsys):
    path = dump_to(tmp_path, capsys, "a3.alg", "n3/A3")
    code, out, err = run(capsys, "check", path)
    assert code == 0
    assert "algebra n3_A3: dim 3" in out
    assert "axioms: ok (compat 3, left_commute 9, right_commute 9)" in out
    assert "complete: yes" in out
    assert "lemmas" not in out

    code, out, err = run(capsys, "check", path, "--lemmas")
    assert code == 0
    assert "lemmas: ok (" in out


def test_check_json_schema(tmp_path, capsys):
    path = dump_to(tmp_path, capsys, "a3.alg", "n3/A3")
    code, out, err = run(capsys, "check", path, "--lemmas", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["complete"] is True
    assert payload["dim"] == 3
    assert payload["axioms"]["counts"] == {
        "compat": 3,
        "left_commute": 9,
        "right_commute": 9,
    }
    assert payload["axioms"]["violations"] == []
    assert payload["lemmas"]["ok"] is True


def test_check_axiom_violation_exits_1(tmp_path, capsys):
    path = tmp_path / "bad.alg"
    path.write_text(
        "algebra bad\ndim 3\n[1,2] = e3\nproduct\n(1,2) = e3\n(2,1) = e3\n",
        encoding="utf-8",
    )
    code, out, err = run(capsys, "check", str(path))
    assert code == 1
    assert "axioms: 1 violation(s)" in out
    assert "compat at (1, 2)" in out

    code, out, err = run(capsys, "check", str(path), "--json")
    assert code == 1
    payload = json.loads(out)
    assert payload["ok"] is False
    assert payload["axioms"]["violations"][0]["check"] == "compat"


def test_check_requires_product_section(tmp_path, capsys):
    path = tmp_path / "bonly.alg"
    path.write_text("algebra b\ndim 3\n[1,2] = e3\n", encoding="utf-8")
    code, out, err = run(capsys, "check", str(path))
    assert code == 1
    assert "no product section" in err


def test_parse_error_exits_2_with_position(tmp_path, capsys):
    path = tmp_path / "malformed.alg"
    path.write_text("algebra x\ndim 2\n[1,2] = 1/0*e1\n", encoding="utf-8")
    code, out, err = run(capsys, "check", str(path))
    assert code == 2
    assert err.strip() == f"{path}: line 3, column 9: zero denominator"


def test_missing_file_exits_2(tmp_path, capsys):
    code, out, err = run(capsys, "check", str(tmp_path / "nope.alg"))
    assert code == 2
    assert "No such file" in err


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    capsys.readouterr()


# ---------------------------------------------------------------------------
# series


def test_series_line_format(tmp_path, capsys):
    path = dump_to(tmp_path, capsys, "a3.alg", "n3/A3")
    code, out, err = run(capsys, "series", path)
    assert code == 0
    assert out.strip() == (
        "gamma: 3 1 0; derived: 3 1 0; upper: 1 3; two-step solvable: yes"
    )


def test_series_g13(tmp_path, capsys):
    path = dump_to(tmp_path, capsys, "g13.alg", "g13")
    code, out, err = run(capsys, "series", path)
    assert code == 0
    assert out.startswith("gamma: 13 9 5 0; derived: 13 9 0;")
    assert "two-step solvable: yes" in out

    code, out, err = run(capsys, "series", path, "--json")
    payload = json.loads(out)
    assert payload["gamma"] == [13, 9, 5, 0]
    assert payload["derived"] == [13, 9, 0]
    assert payload["two_step_solvable"] is True


# ---------------------------------------------------------------------------
# catalog


def test_catalog_list(capsys):
    code, out, err = run(capsys, "catalog", "list")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 29
    assert lines[0] == "r2/A1 [incomplete]"
    assert "n3/A1 (alpha: any rational) [complete]" in lines
    assert lines[-1] == "g13 [admits no LR-structure]"
    assert sum("[incomplete]" in line for line in lines) == 4


def test_catalog_list_json(capsys):
    code, out, err = run(capsys, "catalog", "list", "--json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["families"]) == 28
    assert payload["counterexamples"] == ["g13"]
    keys = [f["key"] for f in payload["families"]]
    assert keys == sorted(keys, key=keys.index)  # stable listing order


def test_catalog_verify_all(capsys):
    code, out, err = run(capsys, "catalog", "verify")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 28
    assert all(line.endswith("ok") for line in lines)
    total = sum(int(line.split(":")[1].split()[0]) for line in lines)
    assert total == 86


def test_catalog_verify_prefix_and_unknown(capsys):
    code, out, err = run(capsys, "catalog", "verify", "r2", "n4")
    assert code == 0
    lines = out.splitlines()
    assert [line.split(":")[0] for line in lines] == [
        "r2/A1",
        "r2/A2",
        "r2/A3",
        "n4/A1",
        "n4/A2",
        "n4/A3",
        "n4/A4",
        "n4/A5",
        "n4/A6",
    ]

    code, out, err = run(capsys, "catalog", "verify", "nosuch")
    assert code == 1
    assert "nosuch" in err


def test_catalog_verify_json(capsys):
    code, out, err = run(capsys, "catalog", "verify", "n3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert set(payload["results"]) == {"n3/A1", "n3/A2", "n3/A3", "n3/A4"}


def test_catalog_dump_round_trip(capsys):
    code, first, err = run(capsys, "catalog", "dump", "n3/A3")
    assert code == 0
    code, second, err = run(capsys, "catalog", "dump", "n3/A3")
    assert first == second  # byte-identical reruns
    f = parse_algebra_text(first)
    assert format_algebra(f.name, f.to_lie(), f.to_lr()) == first


def test_catalog_dump_with_params(capsys):
    code, out, err = run(
        capsys, "catalog", "dump", "n3/A1", "--param", "alpha=-1/2"
    )
    assert code == 0
    assert "(2,2) = -1/2*e3" in out

    code, out, err = run(capsys, "catalog", "dump", "r2/A9")
    assert code == 1
    code, out, err = run(
        capsys, "catalog", "dump", "n3/A1", "--param", "alpha=x"
    )
    assert code == 1
    assert "bad rational" in err
    code, out, err = run(
        capsys, "catalog", "dump", "n3_r/A7", "--param", "alpha=1"
    )
    assert code == 1  # outside the recorded domain alpha <= 3/4


def test_catalog_dump_g13_has_no_product(capsys):
    code, out, err = run(capsys, "catalog", "dump", "g13")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "algebra g13"
    assert lines[1] == "dim 13"
    assert "product" not in out


# ---------------------------------------------------------------------------
# construct


def test_construct_filiform(capsys):
    code, out, err = run(capsys, "construct", "filiform", "4")
    assert code == 0
    assert out == (
        "algebra filiform4\n"
        "dim 4\n"
        "[1,2] = e3\n"
        "[1,3] = e4\n"
        "product\n"
        "(2,1) = -e3\n"
        "(3,1) = -e4\n"
    )

    code, out, err = run(capsys, "construct", "filiform", "5", "--coeffs", "2")
    assert code == 0
    assert out.splitlines()[1] == "dim 5"

    code, out, err = run(capsys, "construct", "filiform", "5")
    assert code == 1
    assert "needs 1 entries" in err


def test_construct_halfad(tmp_path, capsys):
    code, out, err = run(capsys, "construct", "filiform", "5", "--coeffs", "0")
    (tmp_path / "fil5.alg").write_text(out, encoding="utf-8")

    path = dump_to(tmp_path, capsys, "a3.alg", "n3/A3")
    code, out, err = run(capsys, "construct", "halfad", path)
    assert code == 0
    assert "algebra n3_A3_halfad" in out
    assert "(1,2) = 1/2*e3" in out
    assert "(2,1) = -1/2*e3" in out

    # a four-step nilpotent input is rejected
    code, out, err = run(capsys, "construct", "halfad", str(tmp_path / "fil5.alg"))
    assert code == 1


def test_construct_free_families(capsys):
    code, out, err = run(capsys, "construct", "free3", "2")
    assert code == 0
    assert out.splitlines()[1] == "dim 5"
    code, again, err = run(capsys, "construct", "free3", "2")
    assert again == out

    code, out, err = run(capsys, "construct", "free4-2gen", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["dim"] == 8
    assert payload["complete"] is True
    assert payload["name"] == "free_nilpotent_4step_2gen"


def test_construct_extension(tmp_path, capsys):
    tiny = tmp_path / "tiny.ext"
    tiny.write_text(
        "extension tiny\nkernel 1\nbase 1\nphi 1 = [1]\n", encoding="utf-8"
    )
    code, out, err = run(capsys, "construct", "extension", str(tiny))
    assert code == 0
    assert out == "algebra tiny\ndim 2\n[1,2] = -e1\n"

    code, out, err = run(capsys, "construct", "extension", str(tiny), "--lift", "1")
    assert code == 0
    assert "algebra tiny_lift" in out
    assert "(2,1) = e1" in out
    lifted = tmp_path / "lifted.alg"
    lifted.write_text(out, encoding="utf-8")
    code, out, err = run(capsys, "check", str(lifted))
    assert code == 0

    code, out, err = run(capsys, "construct", "extension", str(tiny), "--lift", "1,2")
    assert code == 1
    assert "--lift needs 1 coordinates" in err

    heis = tmp_path / "heis.ext"
    heis.write_text(
        "extension heis\nkernel 1\nbase 2\nomega (1,2) = a1\n", encoding="utf-8"
    )
    code, out, err = run(capsys, "construct", "extension", str(heis))
    assert code == 0
    assert "dim 3" in out and "[2,3] = e1" in out
    # the zero map has no invertible value, so no generator lift exists
    code, out, err = run(capsys, "construct", "extension", str(heis), "--lift", "1,0")
    assert code == 1
    assert "singular" in err


# ---------------------------------------------------------------------------
# constraints and solve


def test_constraints_stdout(tmp_path, capsys):
    path = dump_to(tmp_path, capsys, "r2.alg", "r2/A2")
    code, out, err = run(capsys, "constraints", path)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# product constraints for r2_A2"
    assert lines[1] == "# 8 variables, 10 generated constraints"
    assert lines[2] == "dim 2"
    assert len(lines) == 3 + 10


def test_constraints_reduce_and_output(tmp_path, capsys):
    path = dump_to(tmp_path, capsys, "r2.alg", "r2/A2")
    out_file = tmp_path / "r2red.txt"
    code, out, err = run(
        capsys, "constraints", path, "--reduce", "-o", str(out_file)
    )
    assert code == 0
    assert out.strip() == f"wrote {out_file}"
    lines = out_file.read_text(encoding="utf-8").splitlines()
    assert lines[2] == "# reduced: 5 variables eliminated, 1 residual constraints"
    assert lines[4] == "x[1][1][1] * x[2][1][2] - x[1][1][2]^2 + x[1][1][2]"

    code, out, err = run(capsys, "constraints", path, "--reduce", "--json")
    payload = json.loads(out)
    assert payload["variables"] == 8
    assert payload["generated"] == 10
    assert payload["eliminated"] == 5
    assert payload["contradiction"] is False
    assert len(payload["polys"]) == 1


def test_constraints_reduce_flags_contradiction(tmp_path, capsys):
    path = dump_to(tmp_path, capsys, "g13.alg", "g13")
    code, out, err = run(capsys, "constraints", path, "--reduce")
    assert code == 0
    lines = out.splitlines()
    assert lines[1] == "# 2197 variables, 27378 generated constraints"
    assert "# linear layer is contradictory" in lines[:4]
    marker = [l for l in lines if l.startswith("# reduced:")]
    assert len(marker) == 1
    eliminated = int(marker[0].split()[2])
    assert eliminated > 1000


def test_solve_inconsistent_toy(tmp_path, capsys):
    path = tmp_path / "toy.txt"
    path.write_text("dim 1\nx[1][1][1]^2\nx[1][1][1] - 1\n", encoding="utf-8")
    code, out, err = run(capsys, "solve", str(path))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "inconsistent"
    assert "ending in a nonzero constant" in lines[1]

    code, out, err = run(capsys, "solve", str(path), "--json")
    payload = json.loads(out)
    assert payload["status"] == "inconsistent"
    assert payload["trace_length"] >= 1


def test_solve_consistent_and_budget(tmp_path, capsys):
    r2 = dump_to(tmp_path, capsys, "r2.alg", "r2/A2")
    red = tmp_path / "red.txt"
    code, out, err = run(capsys, "constraints", r2, "--reduce", "-o", str(red))
    assert code == 0
    code, out, err = run(capsys, "solve", str(red))
    assert code == 0
    assert out.strip() == "solutions_may_exist"

    n3 = dump_to(tmp_path, capsys, "n3.alg", "n3/A3")
    raw = tmp_path / "raw.txt"
    code, out, err = run(capsys, "constraints", n3, "-o", str(raw))
    assert code == 0
    code, out, err = run(capsys, "solve", str(raw), "--max-basis", "1")
    assert code == 0
    assert out.strip() == "budget_exhausted"

    code, out, err = run(capsys, "solve", str(raw), "--max-degree", "1")
    assert out.strip() == "budget_exhausted"


# ---------------------------------------------------------------------------
# iso


def test_iso_self_found(tmp_path, capsys):
    path = dump_to(tmp_path, capsys, "a3.alg", "n3/A3")
    code, out, err = run(capsys, "iso", path, path)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "found"
    assert lines[1:] == ["  [1, 0, 0]", "  [0, 1, 0]", "  [0, 0, 1]"]


def test_iso_distinguished(tmp_path, capsys):
    p0 = dump_to(tmp_path, capsys, "na0.alg", "n3/A1", "alpha=0")
    p1 = dump_to(tmp_path, capsys, "na1.alg", "n3/A1", "alpha=1")
    code, out, err = run(capsys, "iso", p0, p1)
    assert code == 0
    assert out.splitlines()[0] == "distinguished: left_annihilator_dim"
    assert "2 vs 1" in out

    a1 = dump_to(tmp_path, capsys, "r2a1.alg", "r2/A1")
    a2 = dump_to(tmp_path, capsys, "r2a2.alg", "r2/A2")
    code, out, err = run(capsys, "iso", a1, a2)
    assert out.splitlines()[0] == "distinguished: complete"

    code, out, err = run(capsys, "iso", p0, p1, "--json")
    payload = json.loads(out)
    assert payload["status"] == "distinguished"
    assert payload["invariant"] == "left_annihilator_dim"
    assert payload["transform"] is None
