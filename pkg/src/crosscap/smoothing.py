"""Smoothing a crossing of two closed geodesics on a non-orientable surface.

Smoothing a transverse crossing P of closed geodesics alpha and beta
concatenates them into a single free homotopy class.  Its geodesic
representative is governed by the half-trace identities of
:mod:`crosscap.traces`, with one-sided curves entering as
glide-reflections and two-sided curves as hyperbolic elements.  When both
curves are one-sided, the product can degenerate to a parabolic, i.e. the
smoothed class winds around a puncture; this module decides that case and
searches the odd winding numbers m for which traversing alpha m times
before smoothing yields a puncture loop.

The search solves f(t) = 1 for f(t) = |r sinh t + s cosh t| with
r = sinh(l_beta/2) and s = cosh(l_beta/2) cos(theta), evaluated at
t = m l_alpha / 2.  Substituting u = e^t turns each sign branch into the
quadratic A u^2 -+ u + B = 0 with A = (s + r)/2, B = (s - r)/2, so there
are never more than two solutions; odd m at distinct solutions are
consecutive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import GeometryError, InvalidAngle, InvalidLength
from .isometry import DEFAULT_TOL
from .traces import glide_glide_half_trace, glide_hyp_half_trace, hyp_hyp_half_trace


class Sidedness(Enum):
    ONE_SIDED = "one-sided"
    TWO_SIDED = "two-sided"


@dataclass(frozen=True)
class CurveData:
    """Length of a closed geodesic and whether its neighborhood is a
    Moebius band (one-sided) or an annulus (two-sided)."""

    length: float
    sided: Sidedness


class SmoothedClass(Enum):
    ESSENTIAL = "essential"
    PUNCTURE_LOOP = "puncture-loop"
    SUB_UNIT = "sub-unit"


@dataclass(frozen=True)
class SmoothingOutcome:
    """Class of the smoothed curve; `length` is present for essential
    outcomes, except in the degenerate mixed case flagged by
    `reflection_degenerate` (product trace zero), where no geodesic
    length is defined."""

    tag: SmoothedClass
    length: float | None = None
    reflection_degenerate: bool = False


class FCase(Enum):
    """Graph shape of f(t) = |r sinh t + s cosh t| by the sign of s -+ r."""

    I = "i"  # s > r: U-shaped with positive minimum
    II = "ii"  # s = r: increasing exponential
    III = "iii"  # -r < s < r: |sinh|-shaped, reaches zero
    IV = "iv"  # s = -r: decreasing exponential
    V = "v"  # s < -r: U-shaped with positive minimum


@dataclass(frozen=True)
class PunctureSearchResult:
    """Odd winding numbers solving the puncture equation (at most two,
    consecutive when two), with the graph case and the coefficients."""

    ms: tuple[int, ...]
    f_case: FCase
    r: float
    s: float


class AngleRelation(Enum):
    GREATER = "greater"
    EQUAL = "equal"
    LESS = "less"
    NOT_APPLICABLE = "not-applicable"


def puncture_quantity(l_alpha: float, l_beta: float, theta: float) -> float:
    """|sinh(l_a/2) sinh(l_b/2) + cosh(l_a/2) cosh(l_b/2) cos(theta)|.

    The smoothed class of two one-sided geodesics is a puncture loop
    exactly when this equals 1.
    """
    if not l_alpha > 0.0:
        raise InvalidLength(f"curve length must be positive, got {l_alpha}")
    if not l_beta > 0.0:
        raise InvalidLength(f"curve length must be positive, got {l_beta}")
    return glide_glide_half_trace(l_alpha, l_beta, theta)


def smooth(alpha: CurveData, beta: CurveData, theta: float, tol: float = DEFAULT_TOL) -> SmoothingOutcome:
    """Free homotopy class obtained by smoothing one crossing of alpha and beta.

    Two two-sided curves and mixed pairs always smooth to an essential
    class; for two one-sided curves the outcome follows the trichotomy of
    the glide-glide half trace against 1.
    """
    if not alpha.length > 0.0:
        raise InvalidLength(f"curve length must be positive, got {alpha.length}")
    if not beta.length > 0.0:
        raise InvalidLength(f"curve length must be positive, got {beta.length}")
    if not 0.0 < theta < math.pi:
        raise InvalidAngle(f"forward angle must lie in (0, pi), got {theta}")

    one_sided = [c for c in (alpha, beta) if c.sided is Sidedness.ONE_SIDED]
    if not one_sided:
        v = hyp_hyp_half_trace(alpha.length, beta.length, theta)
        return SmoothingOutcome(SmoothedClass.ESSENTIAL, 2.0 * math.acosh(max(v, 1.0)))
    if len(one_sided) == 1:
        l_one = one_sided[0].length
        l_two = alpha.length if alpha.sided is Sidedness.TWO_SIDED else beta.length
        v = glide_hyp_half_trace(l_one, l_two, theta)
        if v <= tol:
            return SmoothingOutcome(SmoothedClass.ESSENTIAL, None, reflection_degenerate=True)
        return SmoothingOutcome(SmoothedClass.ESSENTIAL, 2.0 * math.asinh(v))
    q = glide_glide_half_trace(alpha.length, beta.length, theta)
    if abs(q - 1.0) <= tol:
        return SmoothingOutcome(SmoothedClass.PUNCTURE_LOOP)
    if q > 1.0:
        return SmoothingOutcome(SmoothedClass.ESSENTIAL, 2.0 * math.acosh(q))
    return SmoothingOutcome(SmoothedClass.SUB_UNIT)


def unit_crossings(r: float, s: float) -> tuple[float, ...]:
    """All real t with |r sinh t + s cosh t| = 1, in increasing order."""
    A = 0.5 * (s + r)
    B = 0.5 * (s - r)
    disc = 1.0 - 4.0 * A * B
    if disc < 0.0:
        return ()
    sq = math.sqrt(disc)
    ts = []
    for sigma in (1.0, -1.0):
        # A u^2 - sigma u + B = 0 via the cancellation-free split; the
        # A == 0 branch falls out as one infinite root, discarded below
        q = 0.5 * (sigma + math.copysign(sq, sigma))
        for u in ((q / A) if A != 0.0 else math.inf, B / q):
            if math.isfinite(u) and u > 0.0:
                ts.append(math.log(u))
    ts.sort()
    out: list[float] = []
    for t in ts:
        if not out or abs(t - out[-1]) > 1e-12 * (1.0 + abs(t)):
            out.append(t)
    return tuple(out)


def classify_f_case(r: float, s: float, tol: float = DEFAULT_TOL) -> FCase:
    """Graph case of f(t) = |r sinh t + s cosh t| (equalities tol-banded)."""
    if abs(s - r) <= tol:
        return FCase.II
    if abs(s + r) <= tol:
        return FCase.IV
    if s > r:
        return FCase.I
    if s < -r:
        return FCase.V
    return FCase.III


def find_puncture_m(
    l_alpha: float,
    l_beta: float,
    theta: float,
    tol: float = DEFAULT_TOL,
    m_cap: int = 10**6,
) -> PunctureSearchResult:
    """Odd m for which smoothing alpha^m with beta gives a puncture loop.

    Closed-form: roots t of f(t) = 1 are kept when 2t/l_alpha lies within
    tol*(1+|m|) of an odd integer m.  Negative m traverses alpha
    backwards, which replaces theta by pi - theta; evaluating f at
    negative t encodes exactly that.
    """
    if not l_alpha > 0.0:
        raise InvalidLength(f"curve length must be positive, got {l_alpha}")
    if not l_beta > 0.0:
        raise InvalidLength(f"curve length must be positive, got {l_beta}")
    r = math.sinh(0.5 * l_beta)
    s = math.cosh(0.5 * l_beta) * math.cos(theta)
    ms = set()
    for t in unit_crossings(r, s):
        m_real = 2.0 * t / l_alpha
        k = math.floor(0.5 * (m_real - 1.0))
        for m in (2 * k + 1, 2 * k + 3):
            if abs(m_real - m) <= tol * (1.0 + abs(m)) and abs(m) <= m_cap:
                ms.add(m)
    return PunctureSearchResult(tuple(sorted(ms)), classify_f_case(r, s, tol), r, s)


def consecutive_angle_relation(
    m: int,
    l_alpha: float,
    l_beta: float,
    theta: float,
    tol: float = DEFAULT_TOL,
) -> AngleRelation:
    """Relate theta to pi/2 when the punctures occur exactly at m - 1, m + 1.

    For even m with both neighboring odd powers giving puncture loops,
    theta is greater than, equal to, or less than pi/2 according to the
    sign of m; any other search outcome yields NOT_APPLICABLE.
    """
    if m % 2 != 0:
        raise GeometryError(f"m must be even, got {m}")
    result = find_puncture_m(l_alpha, l_beta, theta, tol)
    if result.ms != (m - 1, m + 1):
        return AngleRelation.NOT_APPLICABLE
    if abs(theta - 0.5 * math.pi) <= tol:
        relation = AngleRelation.EQUAL
    elif theta > 0.5 * math.pi:
        relation = AngleRelation.GREATER
    else:
        relation = AngleRelation.LESS
    expected = AngleRelation.EQUAL if m == 0 else (AngleRelation.GREATER if m > 0 else AngleRelation.LESS)
    if relation is not expected:
        raise GeometryError(
            f"angle relation {relation.value} contradicts sign of m = {m}; inputs are inconsistent"
        )
    return relation


def solve_consecutive_pair(m: int, l_alpha: float) -> tuple[float, float] | None:
    """Construct (l_beta, theta) making both m - 1 and m + 1 puncture powers.

    The two puncture equations are linear in (A, B) = ((s+r)/2, (s-r)/2);
    each of the four sign branches is solved exactly and the first
    solution with valid r > 0 and |cos theta| < 1 that the closed-form
    search confirms is returned.  None when no branch admits one.
    """
    if m % 2 != 0:
        raise GeometryError(f"m must be even, got {m}")
    if not l_alpha > 0.0:
        raise InvalidLength(f"curve length must be positive, got {l_alpha}")
    t1 = 0.5 * (m - 1) * l_alpha
    t2 = 0.5 * (m + 1) * l_alpha
    denom = -2.0 * math.sinh(l_alpha)  # e^(t1-t2) - e^(t2-t1)
    for s1, s2 in ((-1.0, 1.0), (1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)):
        A = (s1 * math.exp(-t2) - s2 * math.exp(-t1)) / denom
        B = (s2 * math.exp(t1) - s1 * math.exp(t2)) / denom
        r = A - B
        s = A + B
        if not r > 0.0:
            continue
        cos_theta = s / math.sqrt(1.0 + r * r)  # cosh(l_beta/2) = sqrt(1 + r^2)
        if not -1.0 < cos_theta < 1.0:
            continue
        l_beta = 2.0 * math.asinh(r)
        theta = math.acos(cos_theta)
        if find_puncture_m(l_alpha, l_beta, theta).ms == (m - 1, m + 1):
            return l_beta, theta
    return None
