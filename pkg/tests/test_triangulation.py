import pytest

from surfcat.curves import arc_curve
from surfcat.errors import InvalidCurve
from surfcat.intersect import intersection_number
from surfcat.moves import flip
from surfcat.topology import annulus, build_surface, disjoint_union, polygon
from surfcat.triangulation import triangulate

CASES = [polygon(4), polygon(6), polygon(8), annulus(1, 1), annulus(2, 2),
         build_surface(0, [2, 2, 2]), build_surface(1, [1]), build_surface(1, [2, 1]),
         disjoint_union(polygon(5), annulus(1, 2))]


def test_hexagon_fan():
    T = triangulate(polygon(6))
    assert T.n_tri == 4
    assert [frozenset(p[1] for p in T.arc_ends(a)) for a in range(T.n_arcs)] == [
        {0, 2}, {0, 3}, {0, 4}]
    assert T.arc_names == ("a1", "a2", "a3")


def test_square_and_annulus_sizes():
    T = triangulate(polygon(4))
    assert (T.n_arcs, T.n_tri) == (1, 2)
    T = triangulate(annulus(1, 1))
    assert (T.n_arcs, T.n_tri) == (2, 2)


@pytest.mark.parametrize("S", CASES, ids=lambda S: S.describe())
def test_triangulations_are_valid_and_compatible(S):
    T = triangulate(S)
    T.validate()
    arcs = [arc_curve(T, a) for a in range(T.n_arcs)]
    for a in arcs:
        for b in arcs:
            assert intersection_number(a, b) == 0


@pytest.mark.parametrize("S", CASES, ids=lambda S: S.describe())
def test_flips_keep_triangulations_valid(S):
    T = triangulate(S)
    for a in range(T.n_arcs):
        T2 = flip(T, a).target
        T2.validate()
        assert T2.n_arcs == T.n_arcs


def test_unknown_arc_name():
    with pytest.raises(InvalidCurve):
        triangulate(polygon(5)).arc_index("zz")


def test_fan_is_deterministic():
    a, b = triangulate(annulus(2, 2)), triangulate(annulus(2, 2))
    assert (a.twin, a.vert, a.arc_of) == (b.twin, b.vert, b.arc_of)
