import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import diag
from oracles import random_string_algebra, strings_of
from strategies import closed_curve, curve_on
from surfcat.curves import arc_curve, enumerate_curves
from surfcat.errors import InTriangulation, NotString
from surfcat.homext import hom_dim_linear
from surfcat.intersect import intersection_number
from surfcat.moves import flip
from surfcat.stralg import (Quiver, StringWord, band_of_closed_curve, factor_strings,
                            hom_dim, is_string, jacobian_dimension, qp_from_triangulation,
                            quiver_with_potential, string_of_curve, substrings, trivial)
from surfcat.topology import disjoint_union, polygon
from surfcat.triangulation import triangulate

A2 = Quiver(2, ((0, 1),))
ALPHA = StringWord((0, 1), ((0, 1),))


def test_fan_gives_linear_a3(hexagon):
    A = qp_from_triangulation(hexagon)
    q = A.quiver
    assert q.n_vertices == 3 and not A.potential and not q.relations
    assert sorted(frozenset(a) for a in q.arrows) == [{0, 1}, {1, 2}]
    assert jacobian_dimension(q) == 6  # linear A3: 3 + 2 + 1


def test_inner_triangle_gives_three_cycle(hexagon):
    A = qp_from_triangulation(flip(hexagon, 1).target)
    q = A.quiver
    assert len(A.potential) == 1 and len(q.relations) == 3
    succ = {s: t for s, t in q.arrows}
    assert succ[succ[succ[0]]] == 0


def test_square_has_no_arrows():
    q = qp_from_triangulation(triangulate(polygon(4))).quiver
    assert (q.n_vertices, q.arrows, q.relations) == (1, (), frozenset())


def test_three_cycle_relations_and_dimension():
    # alpha: 0 -> 1, beta: 1 -> 2, gamma: 2 -> 0, potential gamma beta alpha
    q = quiver_with_potential(3, [(0, 1), (1, 2), (2, 0)], [(0, 1, 2)])
    assert q.relations == {(0, 1), (1, 2), (2, 0)}
    # three idempotents and three arrows; every path of length two vanishes
    assert jacobian_dimension(q) == 6
    assert q.is_gentle()


def test_disjoint_union_is_componentwise():
    S = disjoint_union(polygon(6), polygon(6))
    T = triangulate(S)
    T2 = flip(T, 4).target
    q = qp_from_triangulation(T2).quiver
    assert len(q.arrows) == 5 and len(q.relations) == 3


def test_square_cross_diagonal_is_simple():
    T = triangulate(polygon(4))
    w = string_of_curve(T, diag(T, 1, 3))
    assert w == trivial(0)


def test_hexagon_strings(hexagon):
    w = string_of_curve(hexagon, diag(hexagon, 1, 4))
    assert sorted(w.vertices) == [0, 1] and w.length == 1
    w = string_of_curve(hexagon, diag(hexagon, 1, 5))
    assert sorted(w.vertices) == [0, 1, 2] and w.length == 2


def test_arc_has_no_string(hexagon):
    with pytest.raises(InTriangulation):
        string_of_curve(hexagon, arc_curve(hexagon, 0))


def test_annulus_core_band(annulus11):
    from surfcat.curves import enumerate_closed
    (b,) = enumerate_closed(annulus11, 6)
    w = band_of_closed_curve(annulus11, b)
    assert w.length == 2 and w.vertices[0] == w.vertices[-1]
    assert sorted(s for _, s in w.letters) == [-1, 1]


def test_factor_and_substrings_of_an_arrow():
    f = {(d, e, x) for d, e, x in factor_strings(ALPHA)}
    assert f == {(ALPHA, trivial(0), None), (None, ALPHA, None)}
    s = {(d, e, x) for d, e, x in substrings(ALPHA)}
    assert s == {(None, trivial(1), ALPHA), (None, ALPHA, None)}
    assert factor_strings(trivial(0)) == substrings(trivial(0)) == [(None, trivial(0), None)]


def test_hom_from_projective():
    assert hom_dim(ALPHA, trivial(0)) == 1
    assert hom_dim(ALPHA, trivial(1)) == 0
    assert hom_dim(ALPHA, ALPHA) == 1
    assert hom_dim(None, ALPHA) == 0


def test_walk_validation():
    with pytest.raises(NotString):
        StringWord((0,), ((0, 1),))
    assert not is_string(A2, StringWord((1, 0), ((0, 1),)))
    assert not is_string(A2, StringWord((0, 1, 0), ((0, 1), (0, -1))))


@given(curve_on())
def test_curve_strings_avoid_relations(c):
    if c.arc is not None:
        return
    A = qp_from_triangulation(c.T)
    w = string_of_curve(c.T, c, A)
    assert is_string(A.quiver, w)
    assert len(w.vertices) == sum(intersection_number(arc_curve(c.T, a), c)
                                  for a in range(c.T.n_arcs))


@given(closed_curve())
def test_band_strings_avoid_relations(b):
    A = qp_from_triangulation(b.T)
    w = band_of_closed_curve(b.T, b, A)
    assert is_string(A.quiver, w) and w.vertices[0] == w.vertices[-1]


@pytest.mark.parametrize("n", range(4, 10))
def test_strings_are_injective_on_polygons(n):
    T = triangulate(polygon(n))
    seen = set()
    for c in enumerate_curves(T, n):
        if c.arc is None:
            k = string_of_curve(T, c).canonical()
            assert k not in seen
            seen.add(k)


@pytest.mark.parametrize("name", ["polygon-7", "annulus-2-2", "pants", "torus-1"])
def test_every_flip_stays_gentle(name):
    from strategies import tri
    T = tri(name)
    assert qp_from_triangulation(T).quiver.is_gentle()
    for a in range(T.n_arcs):
        assert qp_from_triangulation(flip(T, a).target).quiver.is_gentle()


@given(st.integers(0, 10 ** 6))
def test_hom_matches_linear_algebra(seed):
    rng = random.Random(seed)
    q = random_string_algebra(rng)
    assert q.is_string_algebra()
    ws = strings_of(q, 4)
    for _ in range(40):
        w, v = rng.choice(ws), rng.choice(ws)
        assert hom_dim(w, v) == hom_dim_linear(q, w, v)
