"""Error types raised by the surface and algebra layers."""


class SurfcatError(Exception):
    """Base class; the CLI maps these to exit code 2."""


class MonogonDigonTriangle(SurfcatError):
    """A component is a disk with fewer than four marked points."""


class NoBoundary(SurfcatError):
    """A component has no boundary, or a boundary has no marked point."""


class NotFlippable(SurfcatError):
    pass


class NotRigid(SurfcatError):
    """Two curves in a collection cross, or one crosses itself."""


class DNotInCore(SurfcatError):
    pass


class NotString(SurfcatError):
    pass


class NotArc(SurfcatError):
    """A curve is not a simple arc (closed, or self-crossing)."""


class InTriangulation(SurfcatError):
    """The curve is an arc of the triangulation; its string module is zero."""


class ZeroModule(SurfcatError):
    pass


class Unsupported(SurfcatError):
    pass


class InvalidCurve(SurfcatError):
    """Input does not describe a curve on the surface."""
