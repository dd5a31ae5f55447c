import json

import pytest

from aperyres.cli import main
from aperyres.complexes import build_apery_complex
from aperyres.minimal import minimalize
from aperyres.semigroup import from_generators
from aperyres.serialize import betti_from_json, complex_from_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_apery(capsys):
    code, out, _ = run(capsys, "apery", "--gens", "4,9,11,14")
    assert code == 0
    assert "Ap(S) = {0,9,14,11}" in out
    code, out, _ = run(capsys, "apery", "--gens", "4,13,23")
    assert "face signature: {(1,1)}" in out
    doc = json.loads(run(capsys, "apery", "--gens", "4,13,23", "--format", "json")[1])
    assert doc["semigroup"]["faceSignature"] == [[1, 1]]


def test_invalid_input_exit_two(capsys):
    code, _, err = run(capsys, "apery", "--gens", "2,4")
    assert code == 2 and "NotCofinite" in err
    assert run(capsys, "apery", "--gens", "a,b")[0] == 2
    assert run(capsys, "apery", "--gens", "0,3")[0] == 2
    assert run(capsys, "resolve", "--gens", "1")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "verify", "--gens", "4,9,11,14", "--checks", "nope")[0] == 2
    assert run(capsys, "verify", "--gens", "4,9,11,14", "--checks", "exactness", "--bound", "10")[0] == 2
    assert run(capsys, "betti", "--gens", "3,4", "--field", "prime:4")[0] == 2


def test_resolve_text_and_json(capsys):
    code, out, _ = run(capsys, "resolve", "--gens", "4,9,11,14", "--format", "text")
    assert code == 0
    assert out.count("d_") == 3 and "1,[3]" in out
    code, out, _ = run(capsys, "resolve", "--gens", "4,13,23", "--minimal", "--format", "json")
    assert code == 0
    F = complex_from_json(json.loads(out)["complex"])
    assert F.ranks() == (1, 4, 5, 2)
    assert F == minimalize(build_apery_complex(from_generators([4, 13, 23])))
    code, out, _ = run(capsys, "resolve", "--gens", "2,3")
    assert "x_1^2 - y^3" in out and "ranks: 1, 1" in out


def test_resolve_target_i(capsys):
    code, out, _ = run(capsys, "resolve", "--gens", "4,13,23", "--target", "I", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["koszul"] == {"r": 1, "f": [1, 4, 5, 2], "g": [1, 3, 2]}
    assert len(doc["iGenerators"]) == 3
    assert betti_from_json(doc["betti"]).total == (1, 3, 2)


def test_betti(capsys):
    out = run(capsys, "betti", "--gens", "4,9,11,14")[1]
    assert "R/J betti (quotient): (1,6,8,3)" in out
    out = run(capsys, "betti", "--gens", "4,13,23", "--graded")[1]
    assert "(1,4,5,2)" in out and "R/I betti (quotient): (1,3,2)" in out and "I betti (ideal): (3,2)" in out
    assert "residue-class sums" in out
    out = run(capsys, "betti", "--gens", "2,3")[1]
    assert "R/J betti (quotient): (1,1)" in out and "R/I betti (quotient): (1,1)" in out


def test_face(capsys):
    code, out, _ = run(capsys, "face", "--gens", "4,13,23")
    assert code == 0 and "(13, 26, 23)" in out and "{(1,1)}" in out


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--gens", "4,9,11,14")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "verify", "--gens", "4,13,23", "--checks", "exactness", "--bound", "120")
    assert code == 0 and "exactness: PASS (bound 120)" in out
    code, out, _ = run(capsys, "verify", "--gens", "3,4,5", "--format", "json", "--field", "prime:32003")
    assert code == 0 and all(c["passed"] for c in json.loads(out)["checks"])


@pytest.mark.slow
def test_verify_six_nine_twenty(capsys):
    code, out, _ = run(capsys, "verify", "--gens", "6,9,20", "--checks", "complex,exactness,euler,grobner")
    assert code == 0


def test_compare(capsys):
    code, out, _ = run(capsys, "compare", "--a", "4,13,23", "--b", "4,17,27")
    assert code == 0 and "same face {(1,1)}" in out and "coincide" in out
    code, out, _ = run(capsys, "compare", "--a", "4,9,11,14", "--b", "4,13,15,18", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["verdict"] == "same face" and all(doc["checks"].values())
    code, out, _ = run(capsys, "compare", "--a", "4,9,11,14", "--b", "4,13,23")
    assert code == 0 and "not comparable" in out
    assert run(capsys, "compare", "--a", "4,9,11,14", "--b", "3,4,5")[0] == 2


def test_format_env(capsys, monkeypatch):
    monkeypatch.setenv("APERYRES_FORMAT", "json")
    out = run(capsys, "apery", "--gens", "3,4,5")[1]
    assert json.loads(out)["schemaVersion"] == 1
    out = run(capsys, "resolve", "--gens", "3,4,5", "--format", "latex")[1]
    assert r"\begin{blockarray}" in out
