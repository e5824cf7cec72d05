import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import SURFACES, diag, ends
from oracles import ptolemy_diagrams
from surfcat.cotorsion import (LEFT, RIGHT, Painting, boundary_sets, cotorsion_pairs,
                               cotorsion_pairs_with_core, is_co_t_structure, mutate,
                               pair_of_painting, painting, rotate_painting, side_contains,
                               t_structures)
from surfcat.curves import enumerate_curves, pivot, shift
from surfcat.cutting import Cut, NotIn, curve_component
from surfcat.errors import DNotInCore, NotRigid
from surfcat.intersect import intersection_number
from surfcat.topology import annulus, build_surface, disjoint_union, polygon
from surfcat.triangulation import triangulate
from surfcat.workspace import load


def _rigid_sets(T, n):
    ds = enumerate_curves(T, n)
    out = []
    for k in range(0, n - 2):
        for sub in itertools.combinations(ds, k):
            if all(intersection_number(a, b) == 0 for a, b in itertools.combinations(sub, 2)):
                out.append(list(sub))
    return out


@pytest.fixture(scope="module")
def pants_ws():
    return load(SURFACES / "pants.json")


def test_cut_along_one_short_diagonal(hexagon):
    cut = Cut(hexagon, [diag(hexagon, 0, 2)])
    assert cut.m == 1
    (p,) = cut.pieces
    assert p.is_disk and p.boundary_sizes == (5,)
    assert {q[1] for q in p.point_map.values()} == {0, 2, 3, 4, 5}


def test_cut_along_long_diagonal(hexagon):
    cut = Cut(hexagon, [diag(hexagon, 0, 3)])
    assert [p.boundary_sizes for p in cut.pieces] == [(4,), (4,)]


def test_example_surface_has_three_pieces(pants_ws):
    cut = Cut(pants_ws.T, pants_ws.collection("I"))
    assert cut.m == 3
    assert len(cotorsion_pairs_with_core(pants_ws.T, pants_ws.collection("I"))) == 8


@pytest.mark.parametrize("S", [polygon(7), annulus(2, 1), build_surface(0, [2, 2, 2]),
                               disjoint_union(polygon(6), annulus(1, 1))],
                         ids=lambda S: S.describe())
def test_empty_cut_keeps_components(S):
    T = triangulate(S)
    cut = Cut(T, [])
    assert cut.m == S.n_components
    for p, c in zip(cut.pieces, range(S.n_components)):
        g, sizes = S.component_data(c)
        assert p.genus == g and sorted(p.boundary_sizes) == sorted(sizes)


def test_curve_component(hexagon):
    I = [diag(hexagon, 0, 3)]
    k = curve_component(hexagon, I, diag(hexagon, 1, 3))
    assert {q[1] for q in Cut(hexagon, I).pieces[k - 1].point_map.values()} == {0, 1, 2, 3}
    assert curve_component(hexagon, I, diag(hexagon, 2, 4)) == NotIn("crossing")
    assert curve_component(hexagon, I, diag(hexagon, 3, 0)) == NotIn("core")


def test_crossing_collection_is_not_rigid(hexagon):
    with pytest.raises(NotRigid):
        Cut(hexagon, [diag(hexagon, 0, 3), diag(hexagon, 1, 4)])


def test_pair_counts(hexagon):
    assert len(cotorsion_pairs(hexagon, [diag(hexagon, 0, 3)])) == 4
    pairs = cotorsion_pairs(hexagon, [])
    assert [sorted(p.black) for p in pairs] == [[], [1]]


def test_side_membership(hexagon):
    I = [diag(hexagon, 0, 3)]
    cut = Cut(hexagon, I)
    c = diag(hexagon, 1, 3)
    k = cut.piece_of(c)
    for p in cotorsion_pairs(hexagon, I, cut):
        assert side_contains(p, LEFT, c) == (k in p.black)
        assert side_contains(p, RIGHT, c) == (k not in p.black)
        assert side_contains(p, LEFT, I[0]) and side_contains(p, RIGHT, I[0])
        assert not side_contains(p, LEFT, diag(hexagon, 2, 4))
        assert not side_contains(p, RIGHT, diag(hexagon, 2, 4))


@pytest.mark.parametrize("S,count", [
    (polygon(6), 2), (annulus(2, 2), 2), (build_surface(0, [2, 2, 2]), 2),
    (disjoint_union(polygon(6), annulus(1, 1)), 4),
    (disjoint_union(polygon(4), annulus(1, 1), polygon(5)), 8)],
    ids=lambda x: getattr(x, "describe", lambda: str(x))())
def test_t_structure_counts_and_separation(S, count):
    ts = t_structures(triangulate(S))
    assert len(ts) == count
    for p in ts:
        left, right = boundary_sets(p)
        assert not left & right and left | right == set(range(len(S.boundaries)))


@given(st.data())
def test_t_structure_sides_are_pivot_closed(data):
    T = triangulate(disjoint_union(polygon(5), annulus(2, 1)))
    ts = t_structures(T)
    cs = enumerate_curves(T, 4)
    p = data.draw(st.sampled_from(ts))
    c = data.draw(st.sampled_from(cs))
    k = data.draw(st.integers(-3, 3))
    for side in (LEFT, RIGHT):
        if not side_contains(p, side, c):
            continue
        for end in ("start", "end"):
            moved = pivot(c, end, k)
            if moved is not None:
                assert side_contains(p, side, moved)
        assert side_contains(p, side, shift(c, k))


@pytest.mark.parametrize("n", [5, 6])
def test_swap_closure(n):
    T = triangulate(polygon(n))
    probes = enumerate_curves(T, n)
    for I in _rigid_sets(T, n):
        pairs = {p.black: p for p in cotorsion_pairs(T, I)}
        for J, p in pairs.items():
            q = pairs[p.white]
            assert q.core == p.core
            for x in probes:
                assert side_contains(p, LEFT, x) == side_contains(q, RIGHT, x)


@pytest.mark.parametrize("S", [polygon(6), annulus(2, 1)], ids=lambda S: S.describe())
def test_only_trivial_co_t_structures(S):
    T = triangulate(S)
    probes = enumerate_curves(T, 4)
    rigid = [[]] + [[c] for c in probes if intersection_number(c, c) == 0]
    rigid += [list(x) for x in itertools.combinations(probes[:T.n_arcs], 2)]
    found = []
    for I in rigid:
        for p in cotorsion_pairs(T, I):
            if is_co_t_structure(p, probes):
                found.append((len(p.core), sorted(p.black)))
    assert sorted(found) == [(0, []), (0, [1])]


@pytest.mark.parametrize("n", [4, 5, 6])
def test_torsion_classes_are_ptolemy_diagrams(n):
    T = triangulate(polygon(n))
    ds = enumerate_curves(T, n)
    classes = set()
    for I in _rigid_sets(T, n):
        for p in cotorsion_pairs(T, I):
            classes.add(frozenset(tuple(sorted(ends(d))) for d in ds if side_contains(p, LEFT, d)))
    assert classes == ptolemy_diagrams(n)


def test_paintings_of_example(pants_ws):
    I = pants_ws.collection("I")
    pairs = cotorsion_pairs(pants_ws.T, I)
    ps = [painting(p) for p in pairs]
    assert len(set(p.colours for p in ps)) == 8
    assert all(pair_of_painting(x).black == p.black for x, p in zip(ps, pairs))
    assert ps[0].colours == ("white",) * 3 and pairs[0].black == frozenset()


def test_rotation_with_whole_core_fixes_everything(pants_ws):
    I = pants_ws.collection("I")
    p = painting(cotorsion_pairs(pants_ws.T, I)[4])
    q = rotate_painting(p, I)
    assert set(q.core) == set(I) and q.colours == p.colours


def test_empty_rotation_is_shift(hexagon):
    I = [diag(hexagon, 0, 3)]
    p = painting(cotorsion_pairs(hexagon, I)[1])
    q = rotate_painting(p, [])
    assert q.core == [shift(I[0])]
    for x in enumerate_curves(hexagon, 4):
        for side in (LEFT, RIGHT):
            assert side_contains(pair_of_painting(p), side, x) == \
                side_contains(pair_of_painting(q), side, shift(x))


def test_example_rotation(pants_ws):
    ws = pants_ws
    I = ws.collection("I")
    g1, g2, g3, g4 = (ws.curve(f"gamma{k}") for k in range(1, 5))
    start = next(p for p in cotorsion_pairs(ws.T, I) if p.black == {1, 3})
    res = mutate(start, [g2, g4])
    assert res.m == 3 and len(res.black) == 2
    assert g2 in res.core and g4 in res.core
    moved = [c for c in res.core if c not in (g2, g4)]
    assert len(moved) == 2 and g1 not in moved and g3 not in moved
    cut_d = Cut(ws.T, [g2, g4])
    assert sorted(map(repr, moved)) == sorted(repr(cut_d.shift_within(c)) for c in (g1, g3))


def test_rotation_rejects_foreign_curves(hexagon):
    I = [diag(hexagon, 0, 3)]
    p = painting(cotorsion_pairs(hexagon, I)[0])
    with pytest.raises(DNotInCore):
        rotate_painting(p, [diag(hexagon, 1, 3)])
