import re

from conftest import SURFACES
from surfcat.cotorsion import Painting
from surfcat.cutting import Cut
from surfcat.render import render_painting, render_surface, render_triangulation
from surfcat.topology import annulus, build_surface, disjoint_union, polygon
from surfcat.triangulation import triangulate
from surfcat.workspace import load


def test_hexagon_fan_has_three_arcs():
    svg = render_triangulation(triangulate(polygon(6)))
    assert svg.count('class="arc"') == 3 and svg.count('class="point"') == 6
    assert svg == render_triangulation(triangulate(polygon(6)))


def test_painting_fills_black_pieces():
    ws = load(SURFACES / "pants.json")
    cut = Cut(ws.T, ws.collection("I"))
    svg = render_painting(Painting(cut, ("black", "white", "black")))
    black = re.findall(r'class="piece black" data-piece="(\d+)"', svg)
    white = re.findall(r'class="piece white" data-piece="(\d+)"', svg)
    assert black == ["1", "3"] and white == ["2"]
    assert svg.count('class="core"') == 4


def test_components_in_a_row():
    S = disjoint_union(polygon(4), annulus(1, 2), build_surface(1, [1]))
    svg = render_surface(S)
    assert 'width="1060"' in svg
    assert svg.count('class="boundary"') == 4 and svg.count('class="handle"') == 1


def test_control_points_do_not_collide():
    svg = render_triangulation(triangulate(build_surface(0, [2, 2, 2])))
    ctrls = re.findall(r"Q ([-\d.]+) ([-\d.]+)", svg)
    assert len(ctrls) == len(set(ctrls))
