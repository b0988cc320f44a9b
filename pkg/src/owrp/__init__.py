"""Minimum-bend orthogonal watchman routes for x-monotone and path polygons."""
from .decomposition import (
    Decomposition,
    EdgeGroup,
    Monotone,
    PathPolygon,
    Rect,
    Unsupported,
    dual_path_class,
    edge_groups,
    vertical_decompose,
)
from .errors import (
    BudgetExceeded,
    GenerationFailed,
    MalformedJson,
    NonIntegerCoordinate,
    NotClosedOrTooSmall,
    NotOrthogonal,
    NotSimple,
    OWRPError,
    PointOutside,
    RouteOutside,
    TooLarge,
    UnsupportedClass,
    ValidationError,
    ZeroLengthEdge,
)
from .generator import GenSpec, gen_monotone, gen_path
from .geometry import OrthoPolygon, Point, Segment, contains_point, contains_segment, is_x_monotone, validate
from .io import parse_polygon, parse_route, render_svg
from .oracle import brute_align_min, brute_min_bend, coverage, kernel_rect, visible
from .partition import BalancedSubPolygon, Partition, partition_balanced, relation
from .path_polygons import route_path_polygon, split_at_reflex
from .route import OrthoRoute, build_route, monotone_route, route_metrics, select_aligns, trim_route

__all__ = [name for name in dir() if not name.startswith("_")]
