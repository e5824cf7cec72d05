import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from surfcat.curves import curve_between
from surfcat.topology import annulus, build_surface, polygon
from surfcat.triangulation import triangulate

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("repo", deadline=None, derandomize=True, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

SURFACES = Path(__file__).resolve().parent.parent / "surfaces"


def diag(T, i, j):
    """Curve between points ``i`` and ``j`` of the first boundary of a disk."""
    return curve_between(T, (0, i), (0, j))


def ends(c):
    """Unordered point indices of a disk curve."""
    return frozenset((c.start[1], c.end[1]))


@pytest.fixture
def hexagon():
    return triangulate(polygon(6))


@pytest.fixture
def pants():
    return triangulate(build_surface(0, [2, 2, 2]))


@pytest.fixture
def annulus11():
    return triangulate(annulus(1, 1))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
