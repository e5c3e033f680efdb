import json
import math

import pytest

from spinnet_jones.cli import main
from spinnet_jones.qtensor import QContext, q_dim


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_trefoil(capsys):
    code, out, _ = run(capsys, "eval", "--strands", "4", "--colors", "1/2,1/2", "--level", "5", "--word", "s2 s2 s2")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert {"re", "im", "probability", "moves", "bound", "writhe"} <= set(doc)
    q = QContext(5).q
    target = ((-1 + q + q**3) / q**4).conjugate()
    assert abs(complex(doc["calibrated"]["re"], doc["calibrated"]["im"]) - target) < 1e-9
    assert doc["writhe"] == 3


def test_eval_unknot(capsys):
    code, out, _ = run(capsys, "eval", "--strands", "2", "--colors", "1/2", "--level", "5", "--word", "")
    assert code == 0
    assert json.loads(out)["re"] == pytest.approx(q_dim(1, QContext(5)), abs=1e-11)


def test_eval_semantic_errors(capsys):
    assert run(capsys, "eval", "--strands", "4", "--colors", "1/2,1", "--level", "5", "--word", "s2")[0] == 3
    assert run(capsys, "eval", "--strands", "4", "--colors", "2,2", "--level", "3")[0] == 3


def test_eval_parse_errors(capsys):
    assert run(capsys, "eval", "--strands", "4", "--colors", "1/2,1/2", "--level", "5", "--word", "s0")[0] == 2
    assert run(capsys, "eval", "--strands", "4", "--colors", "1/2,1/2", "--level", "5", "--word", "s1 x")[0] == 2
    assert run(capsys, "eval", "--strands", "4", "--colors", "1/3,1/2", "--level", "5")[0] == 2
    assert run(capsys, "eval", "--strands", "3", "--colors", "1/2", "--level", "5")[0] == 2
    assert run(capsys, "eval", "--link", "nosuch", "--level", "5")[0] == 2


def test_eval_deterministic(capsys):
    args = ("eval", "--link", "figure-eight", "--level", "7")
    assert run(capsys, *args)[1] == run(capsys, *args)[1]


def test_eval_spec_json(capsys):
    spec = '{"strands": 4, "colors": ["1/2","1/2"], "orientations": "+--+", "level": 5, "word": "s2 s2 s2"}'
    code, out, _ = run(capsys, "eval", "--spec", spec)
    assert code == 0 and json.loads(out)["orientations"] == "+--+"


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "--link", "trefoil-left", "--k-min", "5", "--k-max", "16")
    assert code == 0
    rows = out.strip().splitlines()[1:]
    assert len(rows) == 12
    for row in rows:
        k, _, _, cre, cim = row.split(",")
        q = QContext(int(k)).q
        assert abs(complex(float(cre), float(cim)) - (-1 + q + q**3) / q**4) < 1e-9
    code, out, _ = run(capsys, "sweep", "--strands", "2", "--colors", "1/2", "--k-min", "3", "--k-max", "6")
    for row in out.strip().splitlines()[1:]:
        k, re, im = row.split(",")[:3]
        assert float(re) == pytest.approx(q_dim(1, QContext(int(k))), abs=1e-11)
    assert run(capsys, "sweep", "--link", "unknot", "--k-min", "2", "--k-max", "5")[0] == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "trefoil")
    assert code == 0 and "PASS" in out
    code, out, _ = run(capsys, "verify", "--suite", "oracle", "--max-crossings", "3", "--format", "json")
    assert code == 0 and json.loads(out)["passed"]
    assert run(capsys, "verify", "--suite", "nosuch")[0] == 2


def test_graph(capsys):
    code, out, _ = run(capsys, "graph", "--n", "3")
    assert code == 0 and out.splitlines()[1].split(",")[2] == "120"
    code, out, _ = run(capsys, "graph", "--n", "2", "--format", "json")
    assert json.loads(out)["vertices"] == 12
    assert run(capsys, "graph", "--n", "9")[0] == 2
    code, out, _ = run(capsys, "graph", "--n", "6", "--no-twists", "--sweep")
    assert code == 0 and len(out.splitlines()) == 6


def test_float_format(capsys):
    _, out, _ = run(capsys, "eval", "--link", "hopf", "--level", "7")
    doc = json.loads(out)
    for key in ("re", "im", "probability"):
        text = repr(doc[key])
        digits = text.replace("-", "").replace(".", "").split("e")[0].lstrip("0")
        assert len(digits) <= 12
