import json
import re
import subprocess
import sys

import pytest

from maxspec import io, rings
from maxspec.cli import main
from maxspec.errors import StructureError
from maxspec.poset_core import fixture
from maxspec.theorems import REGISTRY
from maxspec.topology import discrete, sierpinski

from conftest import CORPUS, SPACES
from test_rings import NON_ASSOCIATIVE


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(json.dumps(data))
    return str(p)


# ---- round trips -----------------------------------------------------------


@pytest.mark.parametrize("c", CORPUS, ids=lambda c: c.name)
def test_lattice_json_roundtrip(c):
    d = io.lattice_to_json(c.lattice)
    again = io.lattice_from_json(json.loads(io.dumps(d)))
    assert again.poset == c.lattice.poset
    assert io.lattice_to_json(again) == d


@pytest.mark.parametrize("X", SPACES, ids=lambda X: f"{len(X)}pt-{len(X.opens)}opens")
def test_space_json_roundtrip(X):
    d = io.space_to_json(X)
    again = io.space_from_json(json.loads(io.dumps(d)))
    assert again == X
    assert io.space_to_json(again) == d


@pytest.mark.parametrize("R", [rings.zmod(12), rings.ring_product(rings.zmod(2), rings.zmod(3))], ids=str)
def test_ring_json_roundtrip(R):
    d = io.to_json(R)
    again = io.from_json(json.loads(io.dumps(d)))
    assert io.to_json(again) == d


def test_space_loader_closes_basis():
    X = io.space_from_json({"points": ["x", "y", "z"], "opens": [["x"], ["y"]]})
    assert frozenset({"x", "y"}) in X.opens


def test_loader_errors():
    with pytest.raises(StructureError):
        io.from_json({"foo": 1})
    with pytest.raises(StructureError):
        io.lattice_from_json({"elements": ["a"]})
    with pytest.raises(StructureError):
        io.space_from_json({"points": ["x"], "opens": [["q"]]})


def test_shorthands():
    assert len(io.load("zmod:12")) == 12
    assert len(io.load("product:2,3")) == 6
    assert io.load("lattice:B2").elements == fixture("B2").elements
    assert io.load("space:sierpinski") == sierpinski()
    assert io.load("space:discrete:3") == discrete(3)
    assert len(io.load("space:indiscrete:2").opens) == 2


# ---- DOT -------------------------------------------------------------------


def dot_is_wellformed(text):
    lines = text.strip().splitlines()
    if not re.fullmatch(r'digraph "[^"]*" \{', lines[0]) or lines[-1] != "}":
        return False
    body = lines[1:-1]
    node = re.compile(r'  "[^"]*";')
    edge = re.compile(r'  "[^"]*" -> "[^"]*" \[arrowhead=none\];')
    attr = re.compile(r"  (rankdir=BT|node \[shape=\w+\]);")
    return all(node.fullmatch(s) or edge.fullmatch(s) or attr.fullmatch(s) for s in body)


@pytest.mark.parametrize("c", CORPUS, ids=lambda c: c.name)
def test_lattice_dot(c):
    a, b = io.lattice_to_dot(c.lattice), io.lattice_to_dot(c.lattice)
    assert a == b and dot_is_wellformed(a)
    # one edge per cover
    assert a.count("->") == len(c.lattice.poset.covers())


@pytest.mark.parametrize("X", SPACES, ids=lambda X: f"{len(X)}pt-{len(X.opens)}opens")
def test_space_dot(X):
    a = io.space_to_dot(X)
    assert a == io.space_to_dot(X) and dot_is_wellformed(a)


def test_l5_dot_edges():
    text = io.lattice_to_dot(fixture("L5"))
    for a, b in (("0", "a"), ("0", "b"), ("a", "ab"), ("b", "ab"), ("ab", "1")):
        assert f'"{a}" -> "{b}"' in text


# ---- CLI -------------------------------------------------------------------


def test_check_valid_lattice(capsys, tmp_path):
    path = write(tmp_path, "b2.json", io.lattice_to_json(fixture("B2")))
    code, out, _ = run(capsys, "check", path)
    assert code == 0
    assert out.strip() == "ok: distributive lattice, 4 elements"


def test_check_non_transitive(capsys, tmp_path):
    path = write(tmp_path, "bad.json", {"elements": ["a", "b", "c"], "leq": [["a", "b"], ["b", "c"]]})
    code, _, err = run(capsys, "check", path)
    assert code == 1
    assert "not transitive" in err and "['a', 'c']" in err


def test_check_non_associative_ring(capsys, tmp_path):
    path = write(tmp_path, "ring.json", NON_ASSOCIATIVE)
    code, _, err = run(capsys, "check", path)
    assert code == 1
    assert "not associative" in err and "['a', 'a', 'b']" in err


def test_check_parse_error(capsys, tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    code, _, err = run(capsys, "check", str(p))
    assert code == 1 and "invalid JSON" in err
    code, _, err = run(capsys, "check", str(tmp_path / "missing.json"))
    assert code == 1 and "cannot read" in err


def test_spectrum_commands(capsys):
    code, out, _ = run(capsys, "spectrum", "lattice:B2", "--kind", "max")
    assert code == 0
    data = json.loads(out)
    assert sorted(data["points"]) == ["{0,a}", "{0,b}"]
    code, out, _ = run(capsys, "spectrum", "zmod:12")
    assert sorted(json.loads(out)["points"]) == ["(2)", "(3)"]
    code, out, _ = run(capsys, "spectrum", "lattice:C3", "--kind", "max")
    assert len(json.loads(out)["points"]) == 1
    code, out, _ = run(capsys, "spectrum", "lattice:C3", "--dot")
    assert code == 0 and dot_is_wellformed(out)


def test_spectrum_json_reloads(capsys):
    _, out, _ = run(capsys, "spectrum", "lattice:C3")
    data = json.loads(out)
    X = io.space_from_json(data)
    assert io.space_to_json(X) == {k: data[k] for k in ("points", "opens")}


def test_predicates(capsys):
    _, out, _ = run(capsys, "predicates", "lattice:C3")
    rec = json.loads(out)
    assert rec["conjunctive"] is False and rec["normal"] is True
    assert rec["subfit"] is False and rec["coatomistic"] is False
    _, out, _ = run(capsys, "predicates", "lattice:B2")
    assert all(json.loads(out).values())
    _, out, _ = run(capsys, "predicates", "lattice:L5")
    rec = json.loads(out)
    assert rec["conjunctive"] is False and rec["coatomistic"] is False and rec["normal"] is True
    _, out, _ = run(capsys, "predicates", "lattice:M3")
    rec = json.loads(out)
    assert rec["distributive"] is False and rec["conjunctive"] is None


def test_reticulate(capsys):
    code, out, _ = run(capsys, "reticulate", "zmod:12")
    data = json.loads(out)
    assert code == 0 and sorted(data["elements"]) == ["(1)", "(2)", "(3)", "(6)"]
    assert data["class_of"]["8"] == "(2)"
    code, out, _ = run(capsys, "reticulate", "zmod:12", "--dot")
    assert dot_is_wellformed(out)


def test_duality_roundtrip(capsys):
    code, out, _ = run(capsys, "duality", "roundtrip", "--input", "space:discrete:2")
    assert code == 0 and json.loads(out)["verdict"] == "holds"
    code, out, _ = run(capsys, "duality", "roundtrip", "--input", "lattice:B3")
    assert code == 0
    code, out, _ = run(capsys, "duality", "roundtrip", "--input", "space:sierpinski")
    assert code == 2 and json.loads(out)["failed_hypotheses"]


def test_sweep_commands(capsys):
    code, out, _ = run(capsys, "sweep", "--max-size", "8", "--theorem", "conjunctive-iff-coatomistic")
    assert code == 0 and out.startswith("PASS conjunctive-iff-coatomistic") and " 0 fail" in out
    code, out, _ = run(capsys, "sweep", "--theorem", "max-implies-prime", "--json")
    data = json.loads(out)
    assert code == 0 and data[0]["fail"] == 0 and data[0]["ok"]
    code, _, err = run(capsys, "sweep", "--theorem", "no-such-theorem")
    assert code == 1
    assert all(t in err for t in REGISTRY)


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export", "dot", "lattice:L5")
    assert code == 0 and out == io.lattice_to_dot(fixture("L5"))
    code, out, _ = run(capsys, "export", "dot", "space:sierpinski")
    assert dot_is_wellformed(out)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "maxspec", "check", "lattice:B2"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "ok: distributive lattice, 4 elements"
