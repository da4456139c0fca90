import csv
import subprocess
import sys

import pytest

from graphzip.cli import DEFAULT_ALPHA, DEFAULT_THETA, main


def run(*args):
    return main([str(a) for a in args])


@pytest.fixture
def generated(tmp_path):
    g, t = tmp_path / "g.gs", tmp_path / "g.truth"
    assert run("generate", "--pattern", "3-CLIQ", "--vertices", 300, "--edges", 1200,
               "--coverage", 0.8, "--seed", 7, "--out", g, "--truth", t) == 0
    return g, t


def test_generate_prints_count(tmp_path, capsys):
    g, t = tmp_path / "g.gs", tmp_path / "g.truth"
    assert run("generate", "--pattern", "3-CLIQ", "--coverage", 0.8, "--out", g, "--truth", t) == 0
    assert "planted 1333" in capsys.readouterr().out
    planted = sum(1 for line in g.read_text().splitlines() if line.startswith("e ") and line.endswith(" p"))
    assert planted == 3 * 1333


def test_generate_flag_errors(tmp_path, capsys):
    with pytest.raises(SystemExit) as info:
        run("generate", "--coverage", 0.5, "--out", tmp_path / "a", "--truth", tmp_path / "b")
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        run("generate", "--pattern", "3-CLIQ", "--coverage", 1.5,
            "--out", tmp_path / "a", "--truth", tmp_path / "b")
    assert info.value.code == 2
    assert "coverage" in capsys.readouterr().err


def test_generate_infeasible(tmp_path, capsys):
    code = run("generate", "--pattern", "8-TREE", "--vertices", 10, "--edges", 20,
               "--coverage", 0.2, "--out", tmp_path / "a", "--truth", tmp_path / "b")
    assert code != 0
    assert "graphzip generate" in capsys.readouterr().err


def test_mine_and_eval(generated, tmp_path, capsys):
    g, t = generated
    d, s = tmp_path / "d.txt", tmp_path / "s.csv"
    assert run("mine", "--alpha", 10, "--theta", 50, "--input", g,
               "--dict-out", d, "--stats-out", s, "--threads", 1) == 0
    rows = list(csv.reader(s.open()))
    assert rows[0][0] == "batch" and len(rows) - 1 == 120
    assert d.read_text().startswith("# graphzip-dict v1 directed=0 alpha=10 theta=50")
    capsys.readouterr()
    assert run("eval", "--dict", d, "--truth", t) == 0
    assert capsys.readouterr().out.startswith("accuracy=1.000 matched=1/1")


def test_threads_do_not_change_output(generated, tmp_path):
    g, _ = generated
    outs = []
    for n in (1, 8):
        d = tmp_path / f"d{n}.txt"
        assert run("mine", "--input", g, "--dict-out", d, "--threads", n) == 0
        outs.append(d.read_bytes())
    assert outs[0] == outs[1]


def test_eval_miss_and_corrupt(generated, tmp_path, capsys):
    g, t = generated
    d = tmp_path / "d.txt"
    # alpha=2 cannot hold a triangle
    assert run("mine", "--alpha", 2, "--input", g, "--dict-out", d) == 0
    assert run("eval", "--dict", d, "--truth", t) == 1
    bad = tmp_path / "bad.txt"
    bad.write_text(d.read_text().replace("freq=", "freq=x", 1))
    capsys.readouterr()
    assert run("eval", "--dict", bad, "--truth", t) == 2
    assert "bad.txt:3" in capsys.readouterr().err
    assert run("eval", "--dict", tmp_path / "nope.txt", "--truth", t) == 2


def test_batch_files(tmp_path):
    src = tmp_path / "years"
    src.mkdir()
    for i in range(98):
        (src / f"{i:03d}.gs").write_text(
            f"graph undirected\nv {2 * i} movie\nv {2 * i + 1} actor\ne {2 * i} {2 * i + 1} acted-by\n"
        )
    s = tmp_path / "s.csv"
    assert run("mine", "--batch-files", src, "--dict-out", tmp_path / "d.txt", "--stats-out", s) == 0
    assert len(s.read_text().splitlines()) == 99


def test_mine_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.gs"
    bad.write_text("graph undirected\ne 0 1 x\ne 0 1\n")
    assert run("mine", "--input", bad, "--dict-out", tmp_path / "d.txt") == 1
    assert "bad.gs:3" in capsys.readouterr().err


def test_stdin_input(tmp_path):
    d = tmp_path / "d.txt"
    proc = subprocess.run(
        [sys.executable, "-m", "graphzip", "mine", "--input", "-", "--dict-out", str(d)],
        input="graph undirected\ne 0 1 x\ne 1 2 x\n", text=True, capture_output=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert "p 0 " in d.read_text()


def test_defaults():
    assert (DEFAULT_ALPHA, DEFAULT_THETA) == (10, 50)
