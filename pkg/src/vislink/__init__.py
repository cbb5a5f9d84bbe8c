"""vislink: exact minimum-link visibility over unions of closed segments.

Builds families of segment complexes where every k points share an n-link
viewer but k + 1 chosen targets do not, verifies both facts exactly over
rational arithmetic, and runs a step-checked axis-screen process that admits
chosen cross-axis sightlines while provably blocking a forbidden tuple.
"""

from .backend import name as backend_name
from .complexes import (
    EmptyInput,
    OneSet,
    PointNotOnComplex,
    SegmentComplex,
    contains_point,
    contains_segment,
    incident_segments,
    make_oneset,
    normalize,
    oneset_intersect,
    oneset_union,
)
from .construct import (
    Construction,
    GammaPlacementFailed,
    KTooSmall,
    NotConvex,
    PolygonSpec,
    RetryLimitExceeded,
    build_family,
    check_strong_general_position,
    make_polygon,
)
from .kernel import (
    DegeneratePair,
    DegenerateSegment,
    GeometryError,
    Line,
    Orientation,
    Point,
    Rat,
    Segment,
    line_through,
    lines_intersection,
    on_segment,
    orientation,
    parse_rat,
    point,
    rat_str,
    segments_intersection,
    x_axis_crossing,
)
from .links import (
    LinkRegion,
    PathCertificate,
    certificate_valid,
    common_viewer,
    link_distance,
    link_region,
    n_visible,
)
from .shutter import (
    DegenerateK,
    InvariantViolation,
    PointNotInT,
    SameSideInput,
    ShutterState,
    StepRecord,
    advance,
    find_common_viewer,
    gen_kset,
    gen_tuples,
    init_state,
    run_schedule,
    sees_through_screen,
    sees_via,
    verify_history,
)
from .verify import (
    EmptinessReport,
    IndexOutOfRange,
    TupleNotOnComplex,
    VerificationFailed,
    WitnessReport,
    WrongArity,
    sample_on_complex,
    sample_tuples,
    verify_common_witness,
    verify_targets_blocked,
    witness_vertex_index,
)

__version__ = "0.1.0"

__all__ = [
    "Construction",
    "DegenerateK",
    "DegeneratePair",
    "DegenerateSegment",
    "EmptinessReport",
    "EmptyInput",
    "GammaPlacementFailed",
    "GeometryError",
    "IndexOutOfRange",
    "InvariantViolation",
    "KTooSmall",
    "Line",
    "LinkRegion",
    "NotConvex",
    "OneSet",
    "Orientation",
    "PathCertificate",
    "Point",
    "PointNotInT",
    "PointNotOnComplex",
    "PolygonSpec",
    "Rat",
    "RetryLimitExceeded",
    "SameSideInput",
    "Segment",
    "SegmentComplex",
    "ShutterState",
    "StepRecord",
    "TupleNotOnComplex",
    "VerificationFailed",
    "WitnessReport",
    "WrongArity",
    "advance",
    "backend_name",
    "build_family",
    "certificate_valid",
    "check_strong_general_position",
    "common_viewer",
    "contains_point",
    "contains_segment",
    "find_common_viewer",
    "gen_kset",
    "gen_tuples",
    "incident_segments",
    "init_state",
    "line_through",
    "lines_intersection",
    "link_distance",
    "link_region",
    "make_oneset",
    "make_polygon",
    "n_visible",
    "normalize",
    "on_segment",
    "oneset_intersect",
    "oneset_union",
    "orientation",
    "parse_rat",
    "point",
    "rat_str",
    "run_schedule",
    "sample_on_complex",
    "sample_tuples",
    "sees_through_screen",
    "sees_via",
    "segments_intersection",
    "verify_common_witness",
    "verify_history",
    "verify_targets_blocked",
    "witness_vertex_index",
    "x_axis_crossing",
]
