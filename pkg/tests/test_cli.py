import io
import json
from fractions import Fraction

import pytest

from spinorlab import suites
from spinorlab.cli import main
from spinorlab.fock import FockState
from spinorlab.roots import headline_rhs
from spinorlab.statefile import parse_state, serialize_state


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def write_state(tmp_path, name, state):
    path = tmp_path / name
    path.write_text(serialize_state(state), encoding="utf-8")
    return str(path)


def make(tmp_path, name, *argv):
    code, text, _ = run("make", *argv)
    assert code == 0
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path), text


def test_make_gstate_e1(tmp_path):
    _, text = make(tmp_path, "g.json", "gstate", "--y", "1,0,0,0,0,0,0,0")
    st, _ = parse_state(text)
    assert {tuple(t["occupied"]) for t in json.loads(text)["terms"]} == {(1, 2, 3, 4), (5, 6, 7, 8)}
    assert serialize_state(st) == text


def test_make_semisimple(tmp_path):
    _, text = make(tmp_path, "s.json", "semisimple4q", "--x", "1,0,0,0")
    st, _ = parse_state(text)
    assert st.modes == 8 and not st.is_zero()


def test_make_embed_and_arity_errors(tmp_path):
    code, text, _ = run("make", "embed", "--pattern", "01", "--amps", "1,2,3,4")
    assert code == 0
    src = write_state(tmp_path, "two.json", parse_state(text)[0])
    assert run("make", "embed", "--pattern", "011", "--amps", "1,2,3,4")[0] == 2
    assert run("make", "embed", "--pattern", "010", "--state", src)[0] == 2
    assert run("make", "embed", "--pattern", "10", "--state", src)[0] == 0
    assert run("make", "gstate", "--y", "1,2")[0] == 2
    assert run("make", "semisimple4q", "--x", "1,a,0,0")[0] == 2
    assert run("make", "embed", "--pattern", "0x", "--amps", "1,2")[0] == 2


def test_invariants_spin16_matches_headline(tmp_path):
    y = [1, 2, 0, -1, 0, 0, 1, 0]
    path, _ = make(tmp_path, "g.json", "gstate", "--y", ",".join(map(str, y)))
    code, text, _ = run("invariants", "--state", path, "--family", "spin16", "--orders", "1,4")
    assert code == 0
    rep = json.loads(text)
    assert rep["format"] == "spinorlab-report-1"
    for p_ in (1, 4):
        assert Fraction(rep["values"][f"II_{2 * p_}"]["value"]["re"]) == headline_rhs(y, p_)
    ordered = json.loads(run("invariants", "--state", path, "--family", "spin16", "--orders", "1", "--pairs", "ordered")[1])
    assert Fraction(ordered["values"]["II_2"]["value"]["re"]) == 2 * headline_rhs(y, 1)


def test_invariants_fourqubit_csv_and_families(tmp_path):
    path, _ = make(tmp_path, "s.json", "semisimple4q", "--x", "1,2,3,4")
    code, text, _ = run("invariants", "--state", path, "--family", "fourqubit", "--output", "csv")
    assert code == 0
    rows = dict(line.split(",")[:2] for line in text.strip().splitlines()[1:])
    assert Fraction(rows["H"]) == Fraction(30, 2)
    for fam in ("g", "fprime", "sl8"):
        assert run("invariants", "--state", path, "--family", fam)[0] == 0


def test_report_is_deterministic(tmp_path):
    path, _ = make(tmp_path, "s.json", "semisimple4q", "--x", "1,-1,1/2,3")
    a = run("invariants", "--state", path, "--family", "g")[1]
    b = run("invariants", "--state", path, "--family", "g")[1]
    assert a == b
    assert json.loads(a)["input_digest"]


def test_classify(tmp_path):
    path, _ = make(tmp_path, "g.json", "gstate", "--y", "1,0,0,0,0,0,0,0")
    code, text, _ = run("classify", "--state", path)
    assert code == 0
    props = json.loads(text)["properties"]
    assert props["nullity"] == 0 and props["majorana"] is True and props["pure"] is False
    assert props["chirality"] == "positive"
    slater = write_state(tmp_path, "sl.json", FockState.monomial(5, (2, 4)))
    props = json.loads(run("classify", "--state", slater)[1])["properties"]
    assert props["pure"] is True and props["nullity"] == 5


def test_shape_and_zero_state_errors(tmp_path):
    zero = write_state(tmp_path, "zero.json", FockState(8))
    assert run("classify", "--state", zero)[0] == 3
    three = write_state(tmp_path, "three.json", FockState.monomial(8, (1, 2, 3)))
    assert run("invariants", "--state", three, "--family", "sl8")[0] == 3
    six = write_state(tmp_path, "six.json", FockState.monomial(6, (1, 2)))
    assert run("invariants", "--state", six, "--family", "spin16")[0] == 3
    stray = write_state(tmp_path, "stray.json", FockState(8, {0b1111: 1, 0b0001_0001: 1}))
    assert run("invariants", "--state", stray, "--family", "fourqubit")[0] == 3


def test_usage_errors(tmp_path):
    assert run()[0] == 2
    assert run("verify", "--suite", "nonsense")[0] == 2
    assert run("verify")[0] == 2
    assert run("invariants", "--family", "g")[0] == 2
    assert run("invariants", "--state", str(tmp_path / "missing.json"), "--family", "g")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"modes": 2, "terms": [{"occupied": [2, 1], "coeff": {"re": "1"}}]}')
    assert run("classify", "--state", str(bad))[0] == 2
    good, _ = make(tmp_path, "s.json", "semisimple4q", "--x", "1,0,0,0")
    assert run("invariants", "--state", good, "--family", "g", "--orders", "0")[0] == 2


def test_verify_passes_and_is_seeded(monkeypatch):
    code, text, _ = run("verify", "--suite", "classify", "--trials", "3", "--seed", "5")
    assert code == 0
    rep = json.loads(text)["suite"]
    assert rep["failed"] == 0 and rep["seed"] == 5
    assert text == run("verify", "--suite", "classify", "--trials", "3", "--seed", "5")[1]
    monkeypatch.setenv("SPINORLAB_SEED", "5")
    env = json.loads(run("verify", "--suite", "classify", "--trials", "3")[1])["suite"]
    assert env["seed"] == 5 and env["checks"] == rep["checks"]
    monkeypatch.setenv("SPINORLAB_SEED", "five")
    assert run("verify", "--suite", "classify", "--trials", "3")[0] == 2


def test_verify_csv():
    code, text, _ = run("verify", "--suite", "car", "--trials", "1", "--output", "csv")
    assert code == 0
    assert text.splitlines()[0] == "check,passed,detail"


def test_verify_failure_exit_code(monkeypatch):
    def broken(trials, seed):
        return [suites.Check("always false", False, "forced", FockState.monomial(2, (1,)))]

    monkeypatch.setitem(suites.RUNNERS, "car", broken)
    code, text, _ = run("verify", "--suite", "car")
    assert code == 1
    check = json.loads(text)["suite"]["checks"][0]
    assert check["state"]["terms"][0]["occupied"] == [1]


@pytest.mark.parametrize("verb", ["invariants", "classify"])
def test_float_state_files_are_accepted(tmp_path, verb):
    path = tmp_path / "f.json"
    path.write_text(json.dumps({"modes": 8, "scalar": "complex-float", "terms": [
        {"occupied": [1, 2, 3, 4], "coeff": {"re": "0.5", "im": "0"}},
        {"occupied": [5, 6, 7, 8], "coeff": {"re": "0.5", "im": "0"}}]}))
    argv = [verb, "--state", str(path)] + (["--family", "spin16", "--orders", "1"] if verb == "invariants" else [])
    code, text, _ = run(*argv)
    assert code == 0
