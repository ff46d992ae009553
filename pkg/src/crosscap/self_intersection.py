"""Lower bounds on self-intersection counts from one crossing angle.

A closed curve alpha crossing a one-sided closed geodesic beta at forward
angle theta must self-intersect at least m times whenever
|cos theta| > tanh((2m - 1) l_beta / 2).  The bound is sharp in the
strictness of the inequality; equality does not count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConditionNotSatisfied, InvalidAngle, InvalidLength
from .geodesic import Geodesic, intersect, point_along, reflection_in
from .isometry import INFINITY, HPoint, boundary_apply, hyp_distance


@dataclass(frozen=True)
class SelfIntersectionBound:
    """Largest m passing the threshold, with the per-m checks up to it."""

    m_lower: int
    threshold_satisfied: tuple[bool, ...]


def _validate(l_beta: float, theta: float) -> float:
    if not l_beta > 0.0:
        raise InvalidLength(f"curve length must be positive, got {l_beta}")
    if not 0.0 < theta < math.pi:
        raise InvalidAngle(f"forward angle must lie in (0, pi), got {theta}")
    return abs(math.cos(theta))


def _holds(l_beta: float, c: float, m: int) -> bool:
    return math.tanh(0.5 * (2 * m - 1) * l_beta) < c


def bound(l_beta: float, theta: float) -> SelfIntersectionBound:
    """Largest m with tanh((2m - 1) l_beta / 2) < |cos theta|, floored at 0."""
    c = _validate(l_beta, theta)
    m = max(math.ceil(0.5 * (2.0 * math.atanh(c) / l_beta + 1.0)) - 1, 0)
    # absorb rounding of the closed form by re-checking the inequality
    while _holds(l_beta, c, m + 1):
        m += 1
    while m > 0 and not _holds(l_beta, c, m):
        m -= 1
    return SelfIntersectionBound(m, tuple(_holds(l_beta, c, k) for k in range(1, m + 1)))


def is_simple_excluded(l_beta: float, theta: float) -> bool:
    """True when the crossing angle alone forces alpha to self-intersect."""
    c = _validate(l_beta, theta)
    return math.tanh(0.5 * l_beta) < c


@dataclass(frozen=True)
class LiftCheckReport:
    """Outcome of the universal-cover construction behind the bound.

    crossings_ok: the lift of alpha crosses all m half-integer mirrors;
    reflections_ok: each reflected lift crosses it transversely there;
    angles_increasing: the crossing angles grow strictly with the mirror
    index.
    """

    m: int
    crossing_points: tuple[HPoint, ...]
    angles: tuple[float, ...]
    crossings_ok: bool
    reflections_ok: bool
    angles_increasing: bool

    @property
    def passed(self) -> bool:
        return self.crossings_ok and self.reflections_ok and self.angles_increasing


def lift_crosscheck(l_beta: float, theta: float, m: int) -> LiftCheckReport:
    """Rebuild the lifted configuration and verify the m crossings directly.

    Puts the lift of beta on the imaginary axis with the crossing at i,
    drops mirrors perpendicular to it at the half-integer multiples of
    l_beta against beta's direction, reflects the lift of alpha in each,
    and reports the three checks.  Raises ConditionNotSatisfied when the
    angle condition fails for this m.
    """
    c = _validate(l_beta, theta)
    if m < 1:
        raise ConditionNotSatisfied(f"m must be a positive integer, got {m}")
    if not _holds(l_beta, c, m):
        raise ConditionNotSatisfied(
            f"|cos theta| = {c} does not exceed tanh((2m-1) l_beta/2) for m = {m}"
        )
    # the negative-cosine case reflects onto the positive one
    th = theta if math.cos(theta) > 0.0 else math.pi - theta
    beta_lift = Geodesic(0.0, INFINITY)
    base = HPoint(0.0, 1.0)
    ct, cs = math.cos(th) / math.sin(th), 1.0 / math.sin(th)
    alpha_lift = Geodesic(ct - cs, ct + cs)  # through i at forward angle th

    points: list[HPoint] = []
    angles: list[float] = []
    crossings_ok = reflections_ok = True
    for i in range(1, m + 1):
        foot = point_along(beta_lift, base, -0.5 * (2 * i - 1) * l_beta)
        mirror_i = Geodesic(-foot.y, foot.y)
        hit = intersect(alpha_lift, mirror_i)
        if hit is None:
            crossings_ok = False
            break
        refl = reflection_in(mirror_i)
        # reflection reverses orientation; the deck image of the lift
        # runs from the image of the far endpoint back
        reflected = Geodesic(
            boundary_apply(refl, alpha_lift.end), boundary_apply(refl, alpha_lift.start)
        )
        hit2 = intersect(alpha_lift, reflected)
        if hit2 is None or hyp_distance(hit.point, hit2.point) > 1e-8:
            reflections_ok = False
            break
        points.append(hit2.point)
        angles.append(hit2.angle)
    increasing = all(angles[i] < angles[i + 1] for i in range(len(angles) - 1)) and len(angles) == m
    return LiftCheckReport(
        m, tuple(points), tuple(angles), crossings_ok, reflections_ok, increasing
    )
