import json

import pytest

from conftest import SURFACES, ends
from surfcat.curves import ClosedCurve
from surfcat.errors import InvalidCurve, MonogonDigonTriangle
from surfcat.workspace import SpecError, curve_literal, load, load_dict, parse_curve


def test_hexagon_file():
    ws = load(SURFACES / "hexagon.json")
    assert ends(ws.curve("g1")) == {0, 2} and ends(ws.curve("g2")) == {1, 3}
    assert ws.collection("I") == [ws.curve("d03")]
    assert ws.curve("a2") == ws.curve("d03")


def test_cross_form_and_cycle():
    ws = load(SURFACES / "self_crossing.json")
    assert ws.curve("loop").names() == ["a2", "a1"]
    assert isinstance(ws.curve("band"), ClosedCurve)


def test_literals_round_trip():
    for name in ("hexagon.json", "self_crossing.json", "pants.json"):
        ws = load(SURFACES / name)
        for c in ws.curves.values():
            assert parse_curve(ws.T, json.loads(json.dumps(curve_literal(c)))) == c


def test_flips_rename_nothing():
    ws = load_dict({"genus": 0, "boundaries": [6], "triangulation": {"flips": ["a2"]},
                    "curves": {"x": {"arc": "a2"}}})
    assert ends(ws.curve("x")) == {2, 4}


def test_components():
    ws = load_dict({"components": [{"boundaries": [6]}, {"boundaries": [2, 1]}]})
    assert ws.surface.n_components == 2


@pytest.mark.parametrize("doc,err", [
    ({"genus": 0, "boundaries": [3]}, MonogonDigonTriangle),
    ({"genus": 0}, SpecError),
    ({"boundaries": "6"}, SpecError),
    ({"boundaries": [6], "curves": {"x": {"from": [0, 0], "to": [0, 9]}}}, InvalidCurve),
    ({"boundaries": [6], "curves": {"x": {"from": [0, 0], "to": [0, 1]}}}, InvalidCurve),
    ({"boundaries": [6], "curves": {"x": {"arc": "a9"}}}, InvalidCurve),
    ({"boundaries": [6], "curves": {"x": {"from": [0, 1], "cross": ["a3"], "to": [0, 3]}}},
     InvalidCurve),
    ({"boundaries": [6], "collections": {"I": ["nope"]}}, InvalidCurve),
    ({"boundaries": [2, 1], "curves": {"x": {"from": [0, 0], "to": [1, 0]}}}, InvalidCurve),
    ([1, 2], SpecError),
])
def test_bad_input(doc, err):
    with pytest.raises(err):
        load_dict(doc)


def test_bad_json(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{", encoding="utf-8")
    with pytest.raises(SpecError):
        load(p)
    with pytest.raises(SpecError):
        load(tmp_path / "missing.json")
