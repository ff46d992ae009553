"""Exception types raised by the geometry routines."""


class GeometryError(ValueError):
    """Base class for all domain errors in this package."""


class SingularMatrix(GeometryError):
    """Input matrix has (numerically) zero determinant."""


class NotPositiveTranslation(GeometryError):
    """Operation needs a hyperbolic element or glide-reflection."""


class CoincidentPoints(GeometryError):
    """Two points that must be distinct coincide."""


class PointNotOnGeodesic(GeometryError):
    """Point does not lie on the given geodesic."""


class PointNotOnBoth(GeometryError):
    """Point does not lie on both geodesics."""


class NotTransverse(GeometryError):
    """Curves meet but do not cross transversely."""


class AxesDoNotCross(GeometryError):
    """The axes of the two isometries have no transverse crossing."""


class InvalidAngle(GeometryError):
    """Angle outside the open interval (0, pi)."""


class InvalidLength(GeometryError):
    """Length that must be positive is not."""


class ConditionNotSatisfied(GeometryError):
    """Hypothesis of the requested check fails for the given inputs."""
