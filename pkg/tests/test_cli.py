import csv
import json

from genpos import cli
from genpos.experiments import VerificationError


def run(args):
    return cli.main(args)


def test_generate_and_census(tmp_path, capsys):
    grid = tmp_path / "grid.csv"
    assert run(["generate", "--family", "grid", "--n", "9", "--d", "2", "--out", str(grid)]) == 0
    assert grid.read_text().splitlines()[0] == "x1,x2"
    assert run(["census", str(grid), "--verify"]) == 0
    out = capsys.readouterr().out
    assert "k,h_k,s_k" in out and "total,8" in out


def test_census_types_and_json(tmp_path, capsys):
    cube = tmp_path / "cube.csv"
    run(["generate", "--family", "grid", "--n", "8", "--d", "3", "--out", str(cube)])
    profile = tmp_path / "profile.json"
    assert run(["census", str(cube), "--gamma", "3/4", "--out", str(profile)]) == 0
    out = capsys.readouterr().out
    assert "type2,12" in out and "total,12" in out
    payload = json.loads(profile.read_text())
    assert payload["tuple_counts"]["type2"] == 12


def test_arrange_and_verify(tmp_path, capsys):
    par = tmp_path / "par.json"
    run(["generate", "--family", "parallel", "--n", "4", "--d", "2", "--out", str(par)])
    arr_json = tmp_path / "arr.json"
    assert run(["arrange", str(par), "--verify", "--out", str(arr_json)]) == 0
    out = capsys.readouterr().out
    assert "cells,5" in out
    payload = json.loads(arr_json.read_text())
    assert len(payload["cells"]) == 5


def test_independent_with_log(tmp_path, capsys):
    par = tmp_path / "par.json"
    run(["generate", "--family", "parallel", "--n", "4", "--d", "2", "--out", str(par)])
    log = tmp_path / "beta.csv"
    for seed in ("3", "4"):
        assert run(["independent", str(par), "--seed", seed, "--verify", "--log", str(log)]) == 0
    rows = list(csv.reader(log.open()))
    assert rows[0][:4] == ["seed", "n", "d", "p"]
    assert len(rows) == 3


def test_color_command(tmp_path, capsys):
    dual = tmp_path / "dual.json"
    assert run([
        "generate", "--family", "dual_of_points", "--n", "5", "--d", "2",
        "--seed", "2", "--out", str(dual),
    ]) == 0
    assert run(["color", str(dual), "--verify"]) == 0
    assert "colors," in capsys.readouterr().out


def test_genpos_and_ramsey(tmp_path, capsys):
    grid = tmp_path / "grid.csv"
    run(["generate", "--family", "grid", "--n", "9", "--d", "2", "--out", str(grid)])
    wit = tmp_path / "witness.json"
    assert run(["genpos", str(grid), "--seed", "1", "--verify", "--out", str(wit)]) == 0
    payload = json.loads(wit.read_text())
    assert payload["size"] >= 4
    assert run(["ramsey", str(grid), "--q", "3", "--verify"]) == 0
    out = capsys.readouterr().out
    assert '"kind"' in out


def test_hj_commands(tmp_path, capsys):
    assert run(["hj", "lines", "3", "2"]) == 0
    assert "lines,7" in capsys.readouterr().out
    assert run(["hj", "linefree", "3", "2"]) == 0
    assert "size,6" in capsys.readouterr().out
    proj = tmp_path / "proj.csv"
    assert run(["hj", "project", "3", "2", "2", "--seed", "0", "--out", str(proj)]) == 0
    assert proj.read_text().splitlines()[0] == "x1,x2"


def test_experiment_and_fit(tmp_path, capsys):
    cfg = tmp_path / "exp.cfg"
    cfg.write_text(
        "family = grid\noperation = census\nsizes = 9, 16, 25, 36\ndims = 2\nseeds = 0\n"
    )
    out_csv = tmp_path / "records.csv"
    assert run(["experiment", str(cfg), "--out", str(out_csv), "--verify"]) == 0
    assert run([
        "fit", str(out_csv), "--metric", "cohyperplanar_tuples", "--model", "power",
    ]) == 0
    out = capsys.readouterr().out
    assert "exponent," in out


def test_validation_exit_codes(tmp_path, capsys):
    assert run(["generate", "--family", "bogus", "--n", "4", "--d", "2"]) == 2
    assert run(["census", str(tmp_path / "missing.csv")]) == 2
    bad_cfg = tmp_path / "bad.cfg"
    bad_cfg.write_text("family = grid\nwhat = 1\n")
    assert run(["experiment", str(bad_cfg)]) == 2
    assert run(["not-a-command"]) == 2
    capsys.readouterr()


def test_verification_exit_code(monkeypatch, tmp_path, capsys):
    grid = tmp_path / "grid.csv"
    run(["generate", "--family", "grid", "--n", "9", "--d", "2", "--out", str(grid)])

    def broken(*_args, **_kwargs):
        raise VerificationError("forced")

    monkeypatch.setattr(cli, "naive_cohyperplanar_count", broken)
    assert run(["census", str(grid), "--verify"]) == 3
    capsys.readouterr()
