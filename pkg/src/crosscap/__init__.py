"""Hyperbolic-plane isometry algebra, trace/length identities for their
compositions, and the decision procedures built on them: smoothing
outcomes for crossings of closed geodesics on non-orientable surfaces,
puncture-loop winding-number search, and self-intersection lower bounds.
"""

from .errors import (
    AxesDoNotCross,
    CoincidentPoints,
    ConditionNotSatisfied,
    GeometryError,
    InvalidAngle,
    InvalidLength,
    NotPositiveTranslation,
    NotTransverse,
    PointNotOnBoth,
    PointNotOnGeodesic,
    SingularMatrix,
)
from .isometry import (
    DEFAULT_TOL,
    INFINITY,
    HPoint,
    Isometry,
    IsometryClass,
    IsometryType,
    apply,
    boundary_apply,
    classify,
    compose,
    displacement,
    fixed_boundary_points,
    hyp_distance,
    inverse,
    normalize,
    projective_distance,
    translation_length,
)
from .geodesic import (
    Crossing,
    Geodesic,
    axis,
    common_perpendicular,
    forward_angle,
    geodesic_distance,
    geodesic_through,
    half_turn,
    intersect,
    make_glide,
    make_hyperbolic,
    mirror,
    point_along,
    point_geodesic_distance,
    reflection_in,
    reverse,
)
from .traces import (
    CompositionPrediction,
    FormulaCase,
    OracleReport,
    glide_glide_half_trace,
    glide_hyp_half_trace,
    hyp_hyp_half_trace,
    predict_half_trace,
    predicted_axis_crossing_glide_hyp,
    predicted_axis_crossing_hyp_glide,
    verify_against_oracle,
)
from .smoothing import (
    AngleRelation,
    CurveData,
    FCase,
    PunctureSearchResult,
    Sidedness,
    SmoothedClass,
    SmoothingOutcome,
    classify_f_case,
    consecutive_angle_relation,
    find_puncture_m,
    puncture_quantity,
    smooth,
    solve_consecutive_pair,
    unit_crossings,
)
from .self_intersection import (
    LiftCheckReport,
    SelfIntersectionBound,
    bound,
    is_simple_excluded,
    lift_crosscheck,
)
from .plotting import PlotSpec, render_crossing_graph, render_halfplane

__version__ = "0.1.0"
