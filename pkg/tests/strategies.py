"""Hypothesis strategies over a fixed set of small triangulated surfaces."""
from functools import lru_cache

from hypothesis import strategies as st

from surfcat.curves import enumerate_closed, enumerate_curves
from surfcat.topology import annulus, build_surface, polygon
from surfcat.triangulation import triangulate

NAMED = {
    "polygon-5": polygon(5),
    "polygon-7": polygon(7),
    "annulus-1-1": annulus(1, 1),
    "annulus-2-1": annulus(2, 1),
    "annulus-2-2": annulus(2, 2),
    "pants": build_surface(0, [2, 2, 2]),
    "torus-1": build_surface(1, [1]),
}


@lru_cache(maxsize=None)
def tri(name):
    return triangulate(NAMED[name])


@lru_cache(maxsize=None)
def curves(name, max_len=5):
    return tuple(enumerate_curves(tri(name), max_len))


@lru_cache(maxsize=None)
def closed(name, max_len=6):
    return tuple(enumerate_closed(tri(name), max_len))


surface_names = st.sampled_from(sorted(NAMED))


@st.composite
def curve_on(draw, name=None):
    name = name or draw(surface_names)
    return draw(st.sampled_from(curves(name)))


@st.composite
def curve_pair(draw):
    name = draw(surface_names)
    cs = curves(name)
    return draw(st.sampled_from(cs)), draw(st.sampled_from(cs))


@st.composite
def closed_curve(draw):
    name = draw(st.sampled_from(["annulus-1-1", "annulus-2-2", "pants", "torus-1"]))
    return draw(st.sampled_from(closed(name)))
