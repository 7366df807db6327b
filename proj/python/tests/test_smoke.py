import math
import os
from pathlib import Path

import pytest

import twtl

CASESTUDY = Path(os.environ.get("TWTL_CASESTUDY_DIR", Path(__file__).resolve().parents[2] / "casestudy"))
PHI = "[H^2 A]^[0,6] . ([H^1 B]^[0,3] | [H^1 C]^[1,4]) . [H^1 D]^[0,6]"


def test_parse_and_bounds():
    f = twtl.parse("[H^3 A]^[0,5] . [H^2 B]^[4,9]")
    assert str(f) == "[H^3 A]^[0,5] . [H^2 B]^[4,9]"
    assert f.time_bound == 15
    assert f.within_count == 2
    assert f.is_feasible()
    assert f == twtl.parse(str(f))


def test_syntax_error_kind():
    with pytest.raises(twtl.Error) as e:
        twtl.parse("[H^2 A]^[0,")
    assert e.value.args[0] == "syntax error"


def test_translate_and_accept():
    a = twtl.translate(twtl.parse("H^2 A"))
    assert a.num_states == 4
    assert a.accepts([["A"], ["A"], ["A"]])
    assert not a.accepts([["A"], [], ["A"]])
    assert twtl.load_dump(a.dump()).dump() == a.dump()
    assert twtl.translate(twtl.parse(PHI), inf=True).num_states == 11


def test_temporal_relaxation():
    word = twtl.parse_word((CASESTUDY / "relaxation.word").read_text())
    r = twtl.temporal_relaxation(twtl.parse(PHI), word, ap=["A", "B", "C", "D"])
    assert r["satisfied"]
    assert r["tau_star"] == -2
    assert r["tau"][1] == -math.inf


def test_synthesis():
    ts = twtl.load_ts((CASESTUDY / "office.ts").read_text())
    assert (ts.num_states, ts.num_transitions) == (27, 67)
    r = twtl.synthesize(ts, twtl.parse(PHI))
    assert r["tau_star"] == -2
    assert r["run"][0] == "Base" and r["run"][-1] == "D"


def test_verify():
    ts = twtl.load_ts((CASESTUDY / "simple.ts").read_text())
    assert twtl.verify(ts, twtl.parse("[H^1 A]^[1,2]"))["holds"]
    r = twtl.verify(ts, twtl.parse("[H^2 B]^[0,2]"))
    assert not r["holds"] and r["counterexample"]


def test_learning():
    def load(d):
        return [twtl.parse_word(p.read_text()) for p in sorted((CASESTUDY / "learning" / d).glob("*.word"))]

    tmpl = twtl.parse("[H^1 A]^[0,1] . [H^2 B]^[0,2]")
    r = twtl.learn_deadlines(load("pos"), load("neg"), tmpl)
    assert r["deadlines"] == [2, 3]
    assert r["misclassified"] == 0
    assert str(r["formula"]) == "[H^1 A]^[0,2] . [H^2 B]^[0,3]"
