"""Common transversals of parallel line segments, in exact rational arithmetic."""
from .core import (
    FamilyError,
    InsufficientSegmentsError,
    Line,
    Orientation,
    Point,
    RationalError,
    SegmentFamily,
    StablineError,
    VerticalLineError,
    VerticalSegment,
    eval_line,
    line_through,
    orientation,
    phi,
    rat,
)
from .dual import (
    Classification,
    DualPoint,
    DualStrip,
    StabPolygon,
    line_to_dual,
    dual_to_line,
    oracle_feasible,
    point_sheaf_dual,
    polygon_area,
    polygon_centroid,
    segment_strip,
    stabbing_polygon,
    two_segment_parallelogram,
)
from .instance import (
    CanonicalMap,
    InputError,
    InstanceDocument,
    SolveResult,
    VerticalLine,
    canonicalize,
    parse_instance,
    serialize_instance,
    solve_instance,
)
from .selectors import (
    SelectorMethod,
    select,
    select_all,
    select_continuous_barycenter,
    select_discrete_barycenter,
    select_midpoint,
)
from .stabbing import (
    ExtremeLine,
    FeasibilityReport,
    NoTransversalError,
    condition_ii,
    extreme_max_ba,
    extreme_min_ab,
    feasibility,
    slope_bounds,
    stabs,
    stabs_all,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalMap",
    "Classification",
    "DualPoint",
    "DualStrip",
    "ExtremeLine",
    "FamilyError",
    "FeasibilityReport",
    "InputError",
    "InstanceDocument",
    "InsufficientSegmentsError",
    "Line",
    "NoTransversalError",
    "Orientation",
    "Point",
    "RationalError",
    "SegmentFamily",
    "SelectorMethod",
    "SolveResult",
    "StabPolygon",
    "StablineError",
    "VerticalLine",
    "VerticalLineError",
    "VerticalSegment",
    "canonicalize",
    "condition_ii",
    "dual_to_line",
    "eval_line",
    "extreme_max_ba",
    "extreme_min_ab",
    "feasibility",
    "line_through",
    "line_to_dual",
    "oracle_feasible",
    "orientation",
    "parse_instance",
    "phi",
    "point_sheaf_dual",
    "polygon_area",
    "polygon_centroid",
    "rat",
    "segment_strip",
    "select",
    "select_all",
    "select_continuous_barycenter",
    "select_discrete_barycenter",
    "select_midpoint",
    "serialize_instance",
    "slope_bounds",
    "solve_instance",
    "stabbing_polygon",
    "stabs",
    "stabs_all",
    "two_segment_parallelogram",
]
