import json

import pytest

from conftest import SURFACES
from surfcat.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_ext_hexagon(capsys):
    assert run(capsys, SURFACES / "hexagon.json", "ext", "--curve", "g1", "--curve", "g2") == (
        0, "ext=1 int=1 ok\n", "")


def test_ext_self_crossing(capsys):
    code, out, _ = run(capsys, SURFACES / "self_crossing.json", "ext", "--curve", "loop")
    assert (code, out) == (0, "ext=2 int=2 ok\n")


def test_ext_band_is_unsupported(capsys):
    code, out, _ = run(capsys, SURFACES / "self_crossing.json", "ext", "--curve", "band")
    assert (code, out) == (2, "unsupported: band Ext out of scope\n")


def test_int_json(capsys):
    code, out, _ = run(capsys, SURFACES / "hexagon.json", "int", "--curve", "g1",
                       "--curve", "d03", "--json")
    assert code == 0 and json.loads(out)["int"] == 0


@pytest.mark.parametrize("core,rows", [("I", 4), ("empty", 2)])
def test_cotorsion_hexagon(capsys, core, rows):
    code, out, _ = run(capsys, SURFACES / "hexagon.json", "cotorsion", "--core", core)
    assert code == 0 and sum(line.startswith("J=") for line in out.splitlines()) == rows


def test_cotorsion_example_json(capsys):
    code, out, _ = run(capsys, SURFACES / "pants.json", "cotorsion", "--core", "I", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["m"] == 3 and len(doc["pairs"]) == 8


def test_not_rigid_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"boundaries": [6], "curves": {
        "x": {"from": [0, 0], "to": [0, 3]}, "y": {"from": [0, 1], "to": [0, 4]}},
        "collections": {"I": ["x", "y"]}}), encoding="utf-8")
    code, _, err = run(capsys, path, "cotorsion", "--core", "I")
    assert code == 2 and "cross" in err


def test_tstructures(capsys):
    code, out, _ = run(capsys, SURFACES / "hexagon_annulus.json", "tstructures")
    assert code == 0 and out.splitlines()[0] == "t-structures=4"


def test_rotate_example(capsys, tmp_path):
    svg = tmp_path / "r.svg"
    code, out, _ = run(capsys, SURFACES / "pants.json", "rotate", "--core", "I",
                       "--black", "1,3", "--d", "gamma2,gamma4", "--svg", svg, "--json")
    doc = json.loads(out)
    assert code == 0 and doc["m"] == 3 and len(doc["black"]) == 2
    names = [c["name"] for c in doc["core"]]
    assert names[:2] == ["gamma2", "gamma4"]
    assert 'class="before"' in svg.read_text() and 'class="after"' in svg.read_text()


def test_rotate_with_full_core_is_identity(capsys):
    code, out, _ = run(capsys, SURFACES / "pants.json", "rotate", "--core", "I", "--black", "2",
                       "--d", "gamma1,gamma2,gamma3,gamma4", "--json")
    doc = json.loads(out)
    assert [c["name"] for c in doc["core"]] == ["gamma1", "gamma2", "gamma3", "gamma4"]
    assert doc["black"] == [2]


def test_rotate_rejects_foreign_d(capsys):
    code, _, err = run(capsys, SURFACES / "hexagon.json", "rotate", "--core", "I", "--d", "g1")
    assert code == 2 and "core" in err


def test_bad_black(capsys):
    code, _, _ = run(capsys, SURFACES / "hexagon.json", "rotate", "--core", "I", "--black", "7")
    assert code == 2


def test_render_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    for p in (a, b):
        assert run(capsys, SURFACES / "hexagon.json", "render", "triangulation", "--svg", p)[0] == 0
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text().count('class="arc"') == 3


def test_render_to_stdout(capsys):
    code, out, _ = run(capsys, SURFACES / "hexagon_annulus.json", "render", "surface")
    assert code == 0 and out.startswith("<svg")


def test_verify(capsys):
    code, out, _ = run(capsys, SURFACES / "hexagon.json", "verify")
    assert code == 0 and out.splitlines()[-1] == "ok"


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, tmp_path / "none.json", "verify")
    assert code == 2 and "cannot read" in err


def test_outputs_are_deterministic(capsys):
    args = (SURFACES / "pants.json", "rotate", "--core", "I", "--black", "1,3", "--d", "")
    assert run(capsys, *args) == run(capsys, *args)
