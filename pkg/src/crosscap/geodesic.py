"""Oriented geodesics of the upper half-plane.

A geodesic is stored by its ordered pair of boundary endpoints, oriented
from the first toward the second.  Its trace is a vertical line when one
endpoint is infinity, otherwise the semicircle orthogonal to the real axis
through both endpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    CoincidentPoints,
    GeometryError,
    InvalidLength,
    NotTransverse,
    PointNotOnBoth,
    PointNotOnGeodesic,
)
from .isometry import (
    DEFAULT_TOL,
    INFINITY,
    HPoint,
    Isometry,
    IsometryType,
    _boundary_quadratic_roots,
    _canonical,
    apply,
    boundary_apply,
    classify,
    fixed_boundary_points,
    hyp_distance,
)


@dataclass(frozen=True)
class Geodesic:
    """Oriented geodesic running from boundary point `start` to `end`."""

    start: float
    end: float

    def __post_init__(self):
        if self.start == self.end:
            raise CoincidentPoints(f"geodesic endpoints coincide: {self.start}")

    @property
    def vertical(self) -> bool:
        return math.isinf(self.start) or math.isinf(self.end)


@dataclass(frozen=True)
class Crossing:
    """Transverse intersection: the point and the forward angle in (0, pi)."""

    point: HPoint
    angle: float


def reverse(A: Geodesic) -> Geodesic:
    return Geodesic(A.end, A.start)


def _circle(A: Geodesic) -> tuple[float, float]:
    # (center, radius) of the semicircular trace; only for non-vertical A
    c = 0.5 * (A.start + A.end)
    return c, 0.5 * abs(A.end - A.start)


def _foot(A: Geodesic) -> float:
    # x-coordinate of a vertical geodesic
    return A.end if math.isinf(A.start) else A.start


def axis(g: Isometry, tol: float = DEFAULT_TOL) -> Geodesic:
    """Axis of a positive-translation isometry, repelling toward attracting."""
    rep, att = fixed_boundary_points(g, tol)
    return Geodesic(rep, att)


def mirror(g: Isometry, tol: float = DEFAULT_TOL) -> Geodesic:
    """Fixed geodesic of a reflection (orientation is arbitrary but fixed)."""
    cls = classify(g, tol)
    if cls.tag is not IsometryType.REFLECTION:
        raise GeometryError(f"{cls.tag.value} isometry is not a reflection")
    x1, x2 = _boundary_quadratic_roots(g)
    return Geodesic(min(x1, x2), max(x1, x2))


def geodesic_through(p: HPoint, q: HPoint) -> Geodesic:
    """The geodesic through two distinct points, oriented from p toward q."""
    scale = max(abs(p.x), abs(q.x), p.y, q.y, 1.0)
    dx = q.x - p.x
    if abs(dx) <= 1e-13 * scale:
        if abs(q.y - p.y) <= 1e-13 * scale:
            raise CoincidentPoints(f"points coincide: ({p.x}, {p.y})")
        x = 0.5 * (p.x + q.x)
        return Geodesic(x, INFINITY) if q.y > p.y else Geodesic(INFINITY, x)
    c = ((q.x * q.x + q.y * q.y) - (p.x * p.x + p.y * p.y)) / (2.0 * dx)
    r = math.hypot(p.x - c, p.y)
    # p sits nearer the left endpoint exactly when its polar angle about
    # the center is the larger one
    if math.atan2(p.y, p.x - c) > math.atan2(q.y, q.x - c):
        return Geodesic(c - r, c + r)
    return Geodesic(c + r, c - r)


def intersect(A: Geodesic, B: Geodesic) -> Crossing | None:
    """Transverse crossing of two geodesics, or None.

    Disjoint, asymptotic (shared endpoint) and identical geodesics all
    yield None.
    """
    if {A.start, A.end} & {B.start, B.end}:
        return None
    if A.vertical and B.vertical:
        return None
    if A.vertical or B.vertical:
        V, C = (A, B) if A.vertical else (B, A)
        x = _foot(V)
        c, r = _circle(C)
        y2 = r * r - (x - c) ** 2
        if y2 <= 0.0:
            return None
        point = HPoint(x, math.sqrt(y2))
    else:
        c1, r1 = _circle(A)
        c2, r2 = _circle(B)
        if c1 == c2:
            return None
        x = (r1 * r1 - r2 * r2 - c1 * c1 + c2 * c2) / (2.0 * (c2 - c1))
        y2 = r1 * r1 - (x - c1) ** 2
        if y2 <= 0.0:
            return None
        point = HPoint(x, math.sqrt(y2))
    return Crossing(point, forward_angle(A, B, point))


def _on_trace(A: Geodesic, p: HPoint, tol: float) -> bool:
    if A.vertical:
        return abs(p.x - _foot(A)) <= tol * max(1.0, p.y)
    c, r = _circle(A)
    return abs(math.hypot(p.x - c, p.y) - r) <= tol * max(1.0, r)


def _forward_tangent(A: Geodesic, p: HPoint) -> tuple[float, float]:
    if A.vertical:
        return (0.0, 1.0) if math.isinf(A.end) else (0.0, -1.0)
    c, _ = _circle(A)
    if A.end > A.start:  # traversed left to right
        return (p.y, c - p.x)
    return (-p.y, p.x - c)


def forward_angle(A: Geodesic, B: Geodesic, at: HPoint, tol: float = 1e-6) -> float:
    """Unsigned angle in (0, pi) between the forward directions at a common point.

    Reversing the orientation of either geodesic replaces the angle by
    pi minus it.
    """
    if not _on_trace(A, at, tol):
        raise PointNotOnBoth(f"({at.x}, {at.y}) not on the first geodesic")
    if not _on_trace(B, at, tol):
        raise PointNotOnBoth(f"({at.x}, {at.y}) not on the second geodesic")
    ux, uy = _forward_tangent(A, at)
    vx, vy = _forward_tangent(B, at)
    angle = math.atan2(abs(ux * vy - uy * vx), ux * vx + uy * vy)
    if angle <= 0.0 or angle >= math.pi:
        raise NotTransverse("geodesics share a tangent line at the point")
    return angle


def reflection_in(L: Geodesic) -> Isometry:
    """Reflection fixing L pointwise (determinant -1, trace 0, involution)."""
    if L.vertical:
        v = _foot(L)
        return _canonical(1.0, -2.0 * v, 0.0, -1.0, -1)
    c, r = _circle(L)
    return _canonical(c / r, (r * r - c * c) / r, 1.0 / r, -c / r, -1)


def half_turn(p: HPoint) -> Isometry:
    """Rotation of order two about p (determinant +1, trace 0)."""
    return _canonical(p.x / p.y, -(p.x * p.x + p.y * p.y) / p.y, 1.0 / p.y, -p.x / p.y, 1)


def _frame(A: Geodesic) -> tuple[Isometry, Isometry]:
    # U maps the upward imaginary axis onto A (0 -> start, inf -> end);
    # V is its inverse.  Either may be orientation-reversing as a matrix,
    # which is harmless: both still carry geodesic to geodesic.
    if math.isinf(A.start):
        u = (A.end, 1.0, 1.0, 0.0)
    elif math.isinf(A.end):
        u = (1.0, A.start, 0.0, 1.0)
    else:
        u = (A.end, A.start, 1.0, 1.0)
    det = u[0] * u[3] - u[1] * u[2]
    s = 1.0 / math.sqrt(abs(det))
    sign = 1 if det > 0 else -1
    U = _canonical(u[0] * s, u[1] * s, u[2] * s, u[3] * s, sign)
    V = _canonical(u[3] * s, -u[1] * s, -u[2] * s, u[0] * s, sign)
    return U, V


def make_hyperbolic(A: Geodesic, t: float) -> Isometry:
    """Hyperbolic element with axis A (oriented start -> end) and length t."""
    if not t > 0.0:
        raise InvalidLength(f"translation length must be positive, got {t}")
    U, V = _frame(A)
    return _conjugate_diagonal(U, V, math.exp(0.5 * t), math.exp(-0.5 * t), 1)


def make_glide(A: Geodesic, t: float) -> Isometry:
    """Glide-reflection with axis A (oriented start -> end) and length t."""
    if not t > 0.0:
        raise InvalidLength(f"translation length must be positive, got {t}")
    U, V = _frame(A)
    return _conjugate_diagonal(U, V, math.exp(0.5 * t), -math.exp(-0.5 * t), -1)


def _conjugate_diagonal(U: Isometry, V: Isometry, lam: float, mu: float, det: int) -> Isometry:
    # U diag(lam, mu) V with U, V mutually inverse normalized matrices
    a = U.a * lam * V.a + U.b * mu * V.c
    b = U.a * lam * V.b + U.b * mu * V.d
    c = U.c * lam * V.a + U.d * mu * V.c
    d = U.c * lam * V.b + U.d * mu * V.d
    s = 1.0 / math.sqrt(abs(a * d - b * c))
    return _canonical(a * s, b * s, c * s, d * s, det)


def point_along(A: Geodesic, start: HPoint, s: float, tol: float = DEFAULT_TOL) -> HPoint:
    """Point of A at signed arc length s from `start` (positive = forward).

    Works by carrying A to the imaginary axis, scaling by e^s, and
    carrying back; raises PointNotOnGeodesic when `start` is off the trace.
    """
    U, V = _frame(A)
    w = apply(V, start)
    if math.asinh(abs(w.x) / w.y) > tol:
        raise PointNotOnGeodesic(f"({start.x}, {start.y}) not on the geodesic")
    y0 = math.hypot(w.x, w.y)  # project onto the axis
    return apply(U, HPoint(0.0, y0 * math.exp(s)))


def point_geodesic_distance(p: HPoint, A: Geodesic) -> float:
    """Hyperbolic distance from a point to the trace of a geodesic."""
    _, V = _frame(A)
    w = apply(V, p)
    return math.asinh(abs(w.x) / w.y)


def common_perpendicular(L1: Geodesic, L2: Geodesic) -> Geodesic | None:
    """Geodesic orthogonal to both, oriented from L1 toward L2.

    Exists exactly when the traces are disjoint and not asymptotic;
    returns None otherwise.
    """
    U, V = _frame(L1)
    u = boundary_apply(V, L2.start)
    v = boundary_apply(V, L2.end)
    if math.isinf(u) or math.isinf(v) or u == 0.0 or v == 0.0:
        return None
    if u * v <= 0.0:
        return None  # L2 crosses the normalized axis
    rho = math.sqrt(u * v)
    lo, hi = (-rho, rho) if u > 0.0 else (rho, -rho)
    return Geodesic(boundary_apply(U, lo), boundary_apply(U, hi))


def geodesic_distance(L1: Geodesic, L2: Geodesic) -> float:
    """Distance between two geodesics (0 when they meet or are asymptotic)."""
    _, V = _frame(L1)
    u = boundary_apply(V, L2.start)
    v = boundary_apply(V, L2.end)
    if math.isinf(u) or math.isinf(v) or u * v <= 0.0:
        return 0.0
    rho = math.sqrt(u * v)
    c, r = 0.5 * (u + v), 0.5 * abs(v - u)
    # crossing of the perpendicular semicircle |z| = rho with the L2 circle
    x = (rho * rho - r * r + c * c) / (2.0 * c)
    y2 = rho * rho - x * x
    if y2 <= 0.0:
        return 0.0
    return hyp_distance(HPoint(0.0, rho), HPoint(x, math.sqrt(y2)))
