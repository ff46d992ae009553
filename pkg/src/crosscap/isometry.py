"""Isometries of the upper half-plane as projectivized 2x2 real matrices.

An isometry is stored as a matrix with determinant +1 or -1, taken up to
global sign.  Determinant +1 matrices act holomorphically by
z -> (az + b)/(cz + d); determinant -1 matrices act antiholomorphically by
z -> (a conj(z) + b)/(c conj(z) + d).  Boundary points of the half-plane
are real numbers together with a single point at infinity, represented by
``math.inf``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import NotPositiveTranslation, SingularMatrix

#: Default tolerance for classification decisions.
DEFAULT_TOL = 1e-9

#: The boundary point at infinity (negative infinity is not used).
INFINITY = math.inf

# Entries whose magnitude falls below this are treated as zero when the
# canonical projective sign is chosen; keeps the choice stable when a
# quantity that is exactly zero in exact arithmetic comes out as +-1e-16.
_SIGN_EPS = 1e-12

_DET_EPS = 1e-12


class IsometryType(Enum):
    IDENTITY = "identity"
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"
    REFLECTION = "reflection"
    GLIDE_REFLECTION = "glide-reflection"


#: The two classes that translate along an axis.
POSITIVE_TRANSLATION = (IsometryType.HYPERBOLIC, IsometryType.GLIDE_REFLECTION)


@dataclass(frozen=True)
class IsometryClass:
    """Classification tag plus translation length where one exists."""

    tag: IsometryType
    length: float | None = None


@dataclass(frozen=True)
class HPoint:
    """Point x + iy of the open upper half-plane (y strictly positive)."""

    x: float
    y: float

    def __post_init__(self):
        if not self.y > 0.0:
            raise ValueError(f"point ({self.x}, {self.y}) not in the open upper half-plane")

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)


@dataclass(frozen=True)
class Isometry:
    """Normalized matrix [[a, b], [c, d]] with |ad - bc| = 1.

    Instances are produced by :func:`normalize` and the constructors in
    :mod:`crosscap.geodesic`; they are always in canonical projective form
    (the first entry of (a+d, a, b, c) exceeding 1e-12 in magnitude is
    positive), so two equal isometries have entrywise-close matrices.
    """

    a: float
    b: float
    c: float
    d: float
    det: int  # sign of ad - bc, always +1 or -1

    @property
    def trace(self) -> float:
        return self.a + self.d

    def matrix(self) -> list[list[float]]:
        return [[self.a, self.b], [self.c, self.d]]


def _canonical(a: float, b: float, c: float, d: float, det: int) -> Isometry:
    for v in (a + d, a, b, c):
        if abs(v) > _SIGN_EPS:
            if v < 0.0:
                a, b, c, d = -a, -b, -c, -d
            break
    return Isometry(a, b, c, d, det)


def normalize(matrix) -> Isometry:
    """Scale a raw 2x2 matrix to |det| = 1 and pick the canonical sign.

    Raises SingularMatrix when |det| <= 1e-12.
    """
    (a, b), (c, d) = matrix
    a, b, c, d = float(a), float(b), float(c), float(d)
    det = a * d - b * c
    if abs(det) <= _DET_EPS:
        raise SingularMatrix(f"matrix {[[a, b], [c, d]]} has determinant {det}")
    s = 1.0 / math.sqrt(abs(det))
    return _canonical(a * s, b * s, c * s, d * s, 1 if det > 0 else -1)


def compose(g: Isometry, h: Isometry) -> Isometry:
    """Matrix product g @ h, renormalized (acts as g after h)."""
    a = g.a * h.a + g.b * h.c
    b = g.a * h.b + g.b * h.d
    c = g.c * h.a + g.d * h.c
    d = g.c * h.b + g.d * h.d
    det = a * d - b * c
    s = 1.0 / math.sqrt(abs(det))
    return _canonical(a * s, b * s, c * s, d * s, g.det * h.det)


def inverse(g: Isometry) -> Isometry:
    """Projective inverse (the adjugate matrix)."""
    return _canonical(g.d, -g.b, -g.c, g.a, g.det)


def projective_distance(g: Isometry, h: Isometry) -> float:
    """Max entrywise gap between g and h, minimized over the global sign."""
    direct = max(abs(g.a - h.a), abs(g.b - h.b), abs(g.c - h.c), abs(g.d - h.d))
    flipped = max(abs(g.a + h.a), abs(g.b + h.b), abs(g.c + h.c), abs(g.d + h.d))
    return min(direct, flipped)


def _hyperbolic_length(g: Isometry) -> float:
    # tr^2 - 4 det = (a-d)^2 + 4bc = 4 sinh^2(t/2); this form avoids the
    # cancellation in tr^2 - 4 near the parabolic boundary.
    s2 = (g.a - g.d) ** 2 + 4.0 * g.b * g.c
    return 2.0 * math.asinh(0.5 * math.sqrt(max(s2, 0.0)))


def classify(g: Isometry, tol: float = DEFAULT_TOL) -> IsometryClass:
    """Classify by determinant sign and |trace|.

    det +1: identity (within tol of +-I), elliptic (|tr| < 2 - tol),
    parabolic (||tr| - 2| <= tol), else hyperbolic with length
    2 arccosh(|tr|/2).  det -1: reflection (|tr| <= tol), else
    glide-reflection with length 2 arcsinh(|tr|/2).
    """
    tr = abs(g.trace)
    if g.det > 0:
        # canonical form of anything near +-I has a, d near +1
        if max(abs(g.a - 1.0), abs(g.d - 1.0), abs(g.b), abs(g.c)) <= tol:
            return IsometryClass(IsometryType.IDENTITY)
        if tr < 2.0 - tol:
            return IsometryClass(IsometryType.ELLIPTIC)
        if tr <= 2.0 + tol:
            return IsometryClass(IsometryType.PARABOLIC)
        return IsometryClass(IsometryType.HYPERBOLIC, _hyperbolic_length(g))
    if tr <= tol:
        return IsometryClass(IsometryType.REFLECTION)
    return IsometryClass(IsometryType.GLIDE_REFLECTION, 2.0 * math.asinh(0.5 * tr))


def translation_length(g: Isometry, tol: float = DEFAULT_TOL) -> float:
    """Translation length of a hyperbolic element or glide-reflection."""
    cls = classify(g, tol)
    if cls.tag not in POSITIVE_TRANSLATION:
        raise NotPositiveTranslation(f"{cls.tag.value} isometry has no positive translation length")
    return cls.length


def apply(g: Isometry, p: HPoint) -> HPoint:
    """Image of a half-plane point under the isometry."""
    w = p.z.conjugate() if g.det < 0 else p.z
    img = (g.a * w + g.b) / (g.c * w + g.d)
    return HPoint(img.real, img.imag)


def boundary_apply(g: Isometry, x: float) -> float:
    """Action on the boundary circle (reals plus the point at infinity)."""
    if math.isinf(x):
        return g.a / g.c if g.c != 0.0 else INFINITY
    den = g.c * x + g.d
    if den == 0.0:
        return INFINITY
    return (g.a * x + g.b) / den


def fixed_boundary_points(g: Isometry, tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """Boundary fixed points of a positive-translation isometry.

    Returns the pair (repelling, attracting).  The fixed points solve
    c x^2 + (d - a) x - b = 0 on the extended reals (the same quadratic
    for both determinant signs, since conj(x) = x on the boundary); a zero
    leading coefficient puts one fixed point at infinity.  The attracting
    endpoint is the one where the boundary derivative has magnitude < 1.
    """
    cls = classify(g, tol)
    if cls.tag not in POSITIVE_TRANSLATION:
        raise NotPositiveTranslation(f"{cls.tag.value} isometry has no axis")
    x1, x2 = _boundary_quadratic_roots(g)
    if _boundary_deriv_growth(g, x1) > 1.0:
        return x2, x1  # |f'(x1)| = 1/growth < 1, so x1 is the attracting end
    return x1, x2


def _boundary_quadratic_roots(g: Isometry) -> tuple[float, float]:
    A, B, C = g.c, g.d - g.a, -g.b
    if A == 0.0:
        return INFINITY, -C / B
    disc = B * B - 4.0 * A * C  # equals tr^2 - 4 det > 0 here
    sq = math.sqrt(max(disc, 0.0))
    q = -0.5 * (B + math.copysign(sq, B)) if B != 0.0 else -0.5 * sq
    return q / A, C / q


def _boundary_deriv_growth(g: Isometry, x: float) -> float:
    # |f'(x)| = 1/(cx+d)^2, and 1/a^2 at infinity; return the reciprocal,
    # so values > 1 mean the fixed point is repelling.
    if math.isinf(x):
        return g.a * g.a
    t = g.c * x + g.d
    return t * t


def hyp_distance(p: HPoint, q: HPoint) -> float:
    """Hyperbolic distance, via sinh(d/2) = |p - q| / (2 sqrt(py qy))."""
    chord = math.hypot(q.x - p.x, q.y - p.y)
    return 2.0 * math.asinh(0.5 * chord / math.sqrt(p.y * q.y))


def displacement(g: Isometry, p: HPoint) -> float:
    """Distance from p to its image g(p)."""
    return hyp_distance(p, apply(g, p))
