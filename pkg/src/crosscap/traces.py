"""Half-trace identities for compositions of positive-translation isometries.

For axes crossing at forward angle theta, the half trace |Tr(gh)|/2 of the
product is, writing ch = cosh(t/2) and sh = sinh(t/2) of each factor:

    hyperbolic * hyperbolic:   ch_g ch_h + sh_g sh_h cos(theta)
    glide * hyperbolic:        |sh_gl ch_hy + ch_gl sh_hy cos(theta)|
    glide * glide:             |sh_g sh_h + ch_g ch_h cos(theta)|

with the mixed case bound to (glide, hyperbolic) slots in either argument
order, since |Tr(gh)| = |Tr(hg)|.  Every prediction here can be checked
against the raw matrix product; that is what :func:`verify_against_oracle`
does.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import AxesDoNotCross, GeometryError, InvalidAngle, InvalidLength, NotPositiveTranslation
from .geodesic import axis, intersect, point_along
from .isometry import (
    DEFAULT_TOL,
    POSITIVE_TRANSLATION,
    HPoint,
    Isometry,
    IsometryClass,
    IsometryType,
    classify,
    compose,
    hyp_distance,
)


class FormulaCase(Enum):
    HYP_HYP = "hyp-hyp"
    GLIDE_HYP = "glide-hyp"
    HYP_GLIDE = "hyp-glide"
    GLIDE_GLIDE = "glide-glide"


@dataclass(frozen=True)
class CompositionPrediction:
    """Predicted |Tr(gh)|/2 with the classification it implies."""

    half_trace: float
    predicted_class: IsometryClass
    formula_case: FormulaCase


@dataclass(frozen=True)
class OracleReport:
    predicted: float
    actual: float
    abs_error: float


def hyp_hyp_half_trace(t_g: float, t_h: float, theta: float) -> float:
    """Half trace of a product of two hyperbolic elements (always >= 1)."""
    return math.cosh(0.5 * t_g) * math.cosh(0.5 * t_h) + math.sinh(0.5 * t_g) * math.sinh(
        0.5 * t_h
    ) * math.cos(theta)


def glide_hyp_half_trace(t_glide: float, t_hyp: float, theta: float) -> float:
    """Half trace of a glide-reflection composed with a hyperbolic element."""
    return abs(
        math.sinh(0.5 * t_glide) * math.cosh(0.5 * t_hyp)
        + math.cosh(0.5 * t_glide) * math.sinh(0.5 * t_hyp) * math.cos(theta)
    )


def glide_glide_half_trace(t_g: float, t_h: float, theta: float) -> float:
    """Half trace of a product of two glide-reflections."""
    return abs(
        math.sinh(0.5 * t_g) * math.sinh(0.5 * t_h)
        + math.cosh(0.5 * t_g) * math.cosh(0.5 * t_h) * math.cos(theta)
    )


def _check_inputs(t_g: float, t_h: float, theta: float) -> None:
    if not t_g > 0.0:
        raise InvalidLength(f"first translation length must be positive, got {t_g}")
    if not t_h > 0.0:
        raise InvalidLength(f"second translation length must be positive, got {t_h}")
    if not 0.0 < theta < math.pi:
        raise InvalidAngle(f"forward angle must lie in (0, pi), got {theta}")


def predict_half_trace(
    class_g: IsometryType,
    t_g: float,
    class_h: IsometryType,
    t_h: float,
    theta: float,
    tol: float = DEFAULT_TOL,
) -> CompositionPrediction:
    """Half trace and classification of g h from lengths and crossing angle.

    `class_g`/`class_h` select which factor is hyperbolic and which a
    glide-reflection.  The mixed identity always feeds the glide length
    into the first slot, whichever argument carries it.
    """
    _check_inputs(t_g, t_h, theta)
    for cls in (class_g, class_h):
        if cls not in POSITIVE_TRANSLATION:
            raise NotPositiveTranslation(f"{cls.value} factor has no composition formula here")
    g_glide = class_g is IsometryType.GLIDE_REFLECTION
    h_glide = class_h is IsometryType.GLIDE_REFLECTION

    if not g_glide and not h_glide:
        ht = hyp_hyp_half_trace(t_g, t_h, theta)
        cls = IsometryClass(IsometryType.HYPERBOLIC, 2.0 * math.acosh(max(ht, 1.0)))
        return CompositionPrediction(ht, cls, FormulaCase.HYP_HYP)

    if g_glide and h_glide:
        ht = glide_glide_half_trace(t_g, t_h, theta)
        if abs(ht - 1.0) <= tol:
            cls = IsometryClass(IsometryType.PARABOLIC)
        elif ht > 1.0:
            cls = IsometryClass(IsometryType.HYPERBOLIC, 2.0 * math.acosh(ht))
        else:
            cls = IsometryClass(IsometryType.ELLIPTIC)
        return CompositionPrediction(ht, cls, FormulaCase.GLIDE_GLIDE)

    case = FormulaCase.GLIDE_HYP if g_glide else FormulaCase.HYP_GLIDE
    t_glide, t_hyp = (t_g, t_h) if g_glide else (t_h, t_g)
    ht = glide_hyp_half_trace(t_glide, t_hyp, theta)
    if ht <= tol:
        cls = IsometryClass(IsometryType.REFLECTION)
    else:
        cls = IsometryClass(IsometryType.GLIDE_REFLECTION, 2.0 * math.asinh(ht))
    return CompositionPrediction(ht, cls, case)


def verify_against_oracle(g: Isometry, h: Isometry, tol: float = DEFAULT_TOL) -> OracleReport:
    """Compare the predicted half trace with |Tr(gh)|/2 from the product.

    Classifies both factors, locates the crossing of their axes, feeds the
    recovered lengths and forward angle through the identity, and reports
    the gap to the directly computed trace.
    """
    cg = classify(g, tol)
    ch = classify(h, tol)
    if cg.tag not in POSITIVE_TRANSLATION or ch.tag not in POSITIVE_TRANSLATION:
        raise NotPositiveTranslation("both factors must translate along an axis")
    crossing = intersect(axis(g, tol), axis(h, tol))
    if crossing is None:
        raise AxesDoNotCross("the axes have no transverse crossing")
    pred = predict_half_trace(cg.tag, cg.length, ch.tag, ch.length, crossing.angle, tol)
    actual = 0.5 * abs(compose(g, h).trace)
    return OracleReport(pred.half_trace, actual, abs(pred.half_trace - actual))


def _crossing_point(g: Isometry, h: Isometry, P: HPoint, tol: float) -> None:
    crossing = intersect(axis(g, tol), axis(h, tol))
    if crossing is None:
        raise AxesDoNotCross("the axes have no transverse crossing")
    if hyp_distance(P, crossing.point) > 1e-6:
        raise AxesDoNotCross(f"axes cross at ({crossing.point.x}, {crossing.point.y}), not at the given point")


def predicted_axis_crossing_hyp_glide(g: Isometry, h: Isometry, P: HPoint, tol: float = DEFAULT_TOL) -> HPoint:
    """Where the axis of g h meets the axis of g, for hyperbolic g and glide h.

    The crossing sits at distance t_g/2 from P in the forward direction
    of g.
    """
    cg = classify(g, tol)
    ch = classify(h, tol)
    if cg.tag is not IsometryType.HYPERBOLIC or ch.tag is not IsometryType.GLIDE_REFLECTION:
        raise GeometryError(f"expected hyperbolic and glide-reflection, got {cg.tag.value} and {ch.tag.value}")
    _crossing_point(g, h, P, tol)
    return point_along(axis(g, tol), P, +0.5 * cg.length, tol=1e-6)


def predicted_axis_crossing_glide_hyp(g: Isometry, h: Isometry, P: HPoint, tol: float = DEFAULT_TOL) -> HPoint:
    """Where the axis of g h meets the axis of h, for glide g and hyperbolic h.

    The crossing sits at distance t_h/2 from P against the forward
    direction of h.
    """
    cg = classify(g, tol)
    ch = classify(h, tol)
    if cg.tag is not IsometryType.GLIDE_REFLECTION or ch.tag is not IsometryType.HYPERBOLIC:
        raise GeometryError(f"expected glide-reflection and hyperbolic, got {cg.tag.value} and {ch.tag.value}")
    _crossing_point(g, h, P, tol)
    return point_along(axis(h, tol), P, -0.5 * ch.length, tol=1e-6)
