import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

import lendkit
from lendkit.cat import discrete_cat, terminal_cat, walking_arrow
from lendkit.cli import run_command
from lendkit.corpus import iso_pair
from lendkit.io import serialize
from lendkit.twocat import constant_diagram, locally_discrete

DATA = Path(lendkit.__file__).parent / "data"
S2 = locally_discrete(walking_arrow())


@pytest.fixture
def files(tmp_path):
    out = {}

    def put(name, kind, value):
        p = tmp_path / name
        p.write_text(serialize(kind, value))
        out[name] = str(p)

    put("const2.json", "diagram", constant_diagram(None, walking_arrow(), base=S2))
    put("weight.json", "diagram", constant_diagram(S2, terminal_cat()))
    put("cov2.json", "diagram", constant_diagram(S2, walking_arrow()))
    put("arrow.json", "category", walking_arrow())
    put("d2.json", "category", discrete_cat(["0", "1"]))
    put("iso.json", "category", iso_pair())
    put("one.json", "category", terminal_cat())
    put("shape.json", "twocategory", S2)
    out["dir"] = tmp_path
    return out


def _doc(path):
    return json.loads(Path(path).read_text())


def test_laxend_example(files):
    out = files["dir"] / "end.json"
    assert run_command(["laxend", "--diagram", files["const2.json"], "--out", str(out)]) == 0
    doc = _doc(out)
    assert doc["kind"] == "wedge"
    assert len(doc["payload"]["category"]["objects"]) == 3


def test_every_builder_command_succeeds(files):
    d = files["dir"]
    cmds = [
        ["validate", files["const2.json"]],
        ["laxcoend", "--diagram", files["const2.json"]],
        ["descent", "--diagram", files["const2.json"]],
        ["laxlim", "--weight", files["weight.json"], "--diagram", files["cov2.json"]],
        ["oplaxlim", "--weight", files["weight.json"], "--diagram", files["cov2.json"]],
        ["grothendieck", "--diagram", files["cov2.json"]],
        ["laxslice", "--shape", files["shape.json"], "--object", "1"],
        ["sharp", "--diagram", files["weight.json"]],
        ["flat", "--diagram", files["weight.json"]],
        ["adjcheck", "--diagram", files["weight.json"], "--other", files["cov2.json"]],
        ["adjcheck", "--diagram", files["weight.json"], "--other", files["cov2.json"], "--side", "flat"],
        ["yoneda", "--diagram", files["cov2.json"], "--object", "0"],
        ["dot", files["arrow.json"]],
    ]
    for i, c in enumerate(cmds):
        assert run_command(c + ["--out", str(d / f"o{i}.txt")]) == 0, c


def test_iso_and_equiv(files):
    assert run_command(["iso", files["arrow.json"], files["arrow.json"], "--out", os.devnull]) == 0
    assert run_command(["iso", files["arrow.json"], files["d2.json"], "--out", os.devnull]) == 1
    assert run_command(["iso", files["iso.json"], files["one.json"], "--out", os.devnull]) == 1
    assert run_command(["equiv", files["iso.json"], files["one.json"], "--out", os.devnull]) == 0


def test_check_single_law(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert run_command(["check", "--law", "fubini", "--seed", "7", "--out", str(out)]) == 0
    doc = _doc(out)
    assert doc["payload"]["ok"] is True
    (law,) = doc["payload"]["data"]["laws"]
    assert law["lawId"] == "FUBINI"
    assert "FUBINI" in capsys.readouterr().out


def test_input_errors_exit_2(files, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    assert run_command(["validate", str(bad)]) == 2
    assert run_command(["validate", str(tmp_path / "missing.json")]) == 2
    assert run_command(["laxend", "--diagram", files["cov2.json"]]) == 2
    assert run_command(["laxlim", "--weight", files["const2.json"], "--diagram", files["cov2.json"]]) == 2
    assert run_command(["check", "--law", "nonsense"]) == 2
    assert run_command(["frobnicate"]) == 2


def test_budget_exit_3(files):
    assert run_command(["laxend", "--diagram", files["const2.json"], "--budget", "3"]) == 3


def test_budget_env_var(files, monkeypatch):
    monkeypatch.setenv("LENDKIT_BUDGET", "3")
    assert run_command(["laxend", "--diagram", files["const2.json"], "--out", os.devnull]) == 3
    assert run_command(["laxend", "--diagram", files["const2.json"], "--budget", "100000",
                        "--out", os.devnull]) == 0


def _run(args, hashseed, cwd):
    env = dict(os.environ, PYTHONHASHSEED=str(hashseed))
    return subprocess.run([sys.executable, "-m", "lendkit", *args], env=env, cwd=cwd, capture_output=True)


def test_output_is_byte_identical_across_processes(files):
    d = files["dir"]
    outs = []
    for seed in (1, 2):
        o = d / f"det{seed}.json"
        r = _run(["check", "--law", "oplax-duality", "--law", "constant-end", "--seed", "3", "--out", str(o)],
                 seed, d)
        assert r.returncode == 0, r.stderr
        o2 = d / f"end{seed}.json"
        r = _run(["laxend", "--diagram", files["const2.json"], "--out", str(o2)], seed, d)
        assert r.returncode == 0, r.stderr
        outs.append((o.read_bytes(), o2.read_bytes()))
    assert outs[0] == outs[1]
