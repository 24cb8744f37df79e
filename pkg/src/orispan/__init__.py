"""Oriented geometric spanners on 1D and 2D point sets.

Constructions keep at most one direction per vertex pair; quality is the
worst ratio between the shortest oriented round trip through a pair and
the cheapest triangle through it.  The package pairs every construction
with an independent brute-force oracle.
"""

from .errors import (
    GeometryError,
    GraphError,
    GuardError,
    NotOrientableError,
    SpannerError,
    TooFewPointsError,
)
from .geometry import (
    DUPLICATE_EPS,
    REL_TOL,
    PointSet,
    TrianglePick,
    distance,
    min_triangle_perimeters,
    optimal_triangle,
)
from .graphs import (
    DilationReport,
    OrientedGraph,
    PairDilation,
    build_graph,
    oriented_dilation,
    roundtrip_length,
)
from .one_dim import (
    OneppbGraph,
    build_1spanner_1d,
    build_2page_2spanner,
    candidate_pairs,
    dilation_1d_candidates,
    dilation_1ppb,
    enumerate_maximal_1ppb,
    greedy_1ppb,
    optimal_1ppb,
    orient_one_page,
)
from .two_dim import (
    Triangulation,
    consistent_orientation,
    greedy_triangulation,
    make_delaunay_counterexample,
    make_k4_fixture,
    make_nonconvex_fixture,
    min_dilation_over_orientations,
    orient_complete,
)

__version__ = "0.1.0"

__all__ = [
    "SpannerError",
    "GeometryError",
    "GraphError",
    "GuardError",
    "NotOrientableError",
    "TooFewPointsError",
    "REL_TOL",
    "DUPLICATE_EPS",
    "PointSet",
    "TrianglePick",
    "distance",
    "optimal_triangle",
    "min_triangle_perimeters",
    "OrientedGraph",
    "DilationReport",
    "PairDilation",
    "build_graph",
    "roundtrip_length",
    "oriented_dilation",
    "OneppbGraph",
    "build_1spanner_1d",
    "build_2page_2spanner",
    "candidate_pairs",
    "dilation_1d_candidates",
    "orient_one_page",
    "greedy_1ppb",
    "dilation_1ppb",
    "optimal_1ppb",
    "enumerate_maximal_1ppb",
    "Triangulation",
    "greedy_triangulation",
    "consistent_orientation",
    "orient_complete",
    "min_dilation_over_orientations",
    "make_k4_fixture",
    "make_nonconvex_fixture",
    "make_delaunay_counterexample",
    "__version__",
]
