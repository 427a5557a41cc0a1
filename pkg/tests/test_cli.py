import json

import pytest

from twobar.cli import main
from twobar.io import save_instance
from twobar import Instance


@pytest.fixture
def ex4_file(tmp_path, ex4):
    f = tmp_path / "ex4.json"
    save_instance(ex4, f)
    return f


@pytest.fixture
def ex3_file(tmp_path, ex3):
    f = tmp_path / "ex3.json"
    save_instance(ex3, f)
    return f


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def test_gen(tmp_path, capsys):
    out = tmp_path / "g.json"
    code, _ = run(capsys, "gen", "--n", 5, "--class", "big+monotone-nonincreasing",
                  "--seed", 3, "--out", out)
    assert code == 0
    charts = json.loads(out.read_text())["charts"]
    assert len(charts) == 5 and all(c["a"] >= c["b"] and c["a"] > 500 for c in charts)


def test_gen_contradiction(tmp_path, capsys):
    code, _ = run(capsys, "gen", "--n", 3, "--class",
                  "monotone-nonincreasing+monotone-nondecreasing", "--out", tmp_path / "x")
    assert code == 2


def test_solve_baseline(tmp_path, ex3_file, capsys):
    code, out = run(capsys, "solve", "--algo", "baseline", "--input", ex3_file)
    assert code == 0 and json.loads(out)["length"] == 6


def test_solve_a1_with_oracle(tmp_path, ex3_file, capsys):
    pf = tmp_path / "p.json"
    code, out = run(capsys, "solve", "--algo", "a1", "--engine", "exact", "--input", ex3_file,
                    "--out", pf, "--oracle", "bcpp1-bf")
    rep = json.loads(out)
    assert code == 0 and rep["length"] == 5 and rep["ratio"] == "1"
    assert json.loads(pf.read_text())["length"] == 5


def test_solve_a2_needs_flag(ex4_file, capsys):
    code, _ = run(capsys, "solve", "--algo", "a2", "--input", ex4_file)
    assert code == 2
    code, out = run(capsys, "solve", "--algo", "a2", "--input", ex4_file, "--allow-nonbig",
                    "--render", "ascii")
    assert code == 0
    lines = out.splitlines()
    assert json.loads(lines[0])["length"] == 4
    assert len(lines) == 12


def test_solve_svg(tmp_path, ex3_file, capsys):
    pf = tmp_path / "p.json"
    code, _ = run(capsys, "solve", "--algo", "a1", "--input", ex3_file, "--out", pf,
                  "--render", "svg")
    assert code == 0
    assert (tmp_path / "p.svg").read_text().startswith("<svg")


def test_solve_bad_input(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text("[")
    assert run(capsys, "solve", "--algo", "a1", "--input", f)[0] == 2
    assert run(capsys, "solve", "--algo", "a1", "--input", tmp_path / "missing.json")[0] == 2


def test_size_limit_exit_code(tmp_path, capsys):
    f = tmp_path / "big.json"
    save_instance(Instance.from_pairs([(1000, 1000)] * 21), f)
    assert run(capsys, "solve", "--algo", "a1", "--engine", "exact", "--input", f)[0] == 3
    assert run(capsys, "oracle", "--mode", "general", "--input", f)[0] == 3


@pytest.mark.parametrize("mode, length", [("bcpp1", 5), ("bcpp1-bf", 5),
                                          ("sequence", 4), ("general", 4)])
def test_oracle_modes(ex4_file, capsys, mode, length):
    code, out = run(capsys, "oracle", "--mode", mode, "--input", ex4_file)
    assert code == 0 and json.loads(out)["optimum_length"] == length


def test_bench(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({
        "sizes": {"min": 4, "max": 6}, "classes": ["non-strictly-big"], "trials": 3,
        "seed": 5, "runs": [{"algo": "a2", "engine": "exact"},
                            {"algo": "a1", "engine": "cycle-cover"},
                            {"algo": "baseline"}],
        "oracle": "sequence"}))
    out = tmp_path / "r.csv"
    code, _ = run(capsys, "bench", "--config", cfg, "--out", out)
    assert code == 0
    rows = out.read_text().splitlines()
    assert rows[0].startswith("row_type,instance")
    assert sum(r.startswith("trial,") for r in rows) == 27
    assert sum(r.startswith("aggregate,") for r in rows) == 3


def test_bench_bad_config(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"sizes": [3], "oracle": "cplex"}))
    assert run(capsys, "bench", "--config", cfg, "--out", tmp_path / "r.csv")[0] == 2
