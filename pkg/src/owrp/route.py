"""Align selection, route concatenation, trimming and route metrics."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .decomposition import Decomposition, vertical_decompose
from .errors import UnsupportedClass
from .geometry import Number, OrthoPolygon, Point
from .partition import ABOVE, BELOW, Partition, partition_balanced, relation


@dataclass(frozen=True)
class OrthoRoute:
    """Axis-parallel polyline; a single vertex is a point route."""

    vertices: tuple[Point, ...]

    def __post_init__(self):
        v = self.vertices
        if not v:
            raise ValueError("route needs at least one vertex")
        for i in range(len(v) - 1):
            a, b = v[i], v[i + 1]
            if a == b:
                raise ValueError(f"zero-length route segment at {i}")
            if a.x != b.x and a.y != b.y:
                raise ValueError(f"route segment {i} is not axis-parallel")
            if i and (v[i - 1].x == a.x) == (a.x == b.x):
                raise ValueError(f"route segments {i - 1} and {i} do not alternate")

    @property
    def degenerate(self) -> bool:
        return len(self.vertices) == 1

    @property
    def bends(self) -> int:
        return max(len(self.vertices) - 2, 0)

    @property
    def length(self) -> Number:
        v = self.vertices
        return sum(abs(v[i + 1].x - v[i].x) + abs(v[i + 1].y - v[i].y) for i in range(len(v) - 1))

    def segments(self) -> list[tuple[Point, Point]]:
        v = self.vertices
        return [(v[i], v[i + 1]) for i in range(len(v) - 1)]

    def reversed(self) -> OrthoRoute:
        return OrthoRoute(self.vertices[::-1])


class RouteMetrics(NamedTuple):
    bends: int
    length: Number
    vertices: int


def simplify(points: Sequence[Point]) -> OrthoRoute:
    """Drop repeated points and merge collinear runs into single segments."""
    out: list[Point] = []
    for p in points:
        if out and out[-1] == p:
            continue
        if len(out) >= 2:
            a, b = out[-2], out[-1]
            if (a.x == b.x == p.x) or (a.y == b.y == p.y):
                if (b.x - a.x) * (p.x - b.x) < 0 or (b.y - a.y) * (p.y - b.y) < 0:
                    raise ValueError("route doubles back on itself")
                out[-1] = p
                continue
        out.append(p)
    return OrthoRoute(tuple(out))


def select_aligns(partition: Partition | Sequence[tuple[int, int]]) -> list[int]:
    """Pick each align height from its corridor endpoints.

    A sub-polygon above both neighbours takes its corridor floor, one below
    both takes its ceiling; any other choice leaves the total vertical
    connector length unchanged, so those default to the ceiling.
    """
    corridors = partition.corridors() if isinstance(partition, Partition) else list(partition)
    k = len(corridors)
    if k == 1:
        return [corridors[0][1]]
    rel = [relation(corridors, i) for i in range(1, k)]  # rel[i-1]: i+1 vs i
    ys = []
    for i, (lo, hi) in enumerate(corridors):
        if i == 0:
            ys.append(hi if rel[0] == ABOVE else lo)
        elif i == k - 1:
            ys.append(hi if rel[-1] == BELOW else lo)
        elif rel[i - 1] == ABOVE and rel[i] == BELOW:
            ys.append(lo)
        else:
            ys.append(hi)
    return ys


def build_route(partition: Partition, aligns: Sequence[int]) -> OrthoRoute:
    subs = partition.subs
    pts = []
    for s, y in zip(subs, aligns):
        if not s.m_low <= y <= s.M:
            raise ValueError(f"align {y} outside corridor {s.corridor}")
        pts.append(Point(s.x_left, y))
        pts.append(Point(s.x_right, y))
    return OrthoRoute(tuple(pts))


def trim_route(
    route: OrthoRoute,
    d: Decomposition,
    partition: Partition,
    aligns: Sequence[int],
    *,
    left: bool = True,
    right: bool = True,
) -> OrthoRoute:
    """Cut the excess from the ends of an untrimmed route.

    The left scan stops at the first rect whose top group is a local max or
    bottom group a local min; everything up to and including that rect is
    dropped and the route starts on its right side.  The right scan mirrors
    this.  A scan may run past the end sub-polygon, in which case the end
    align collapses to its inner endpoint.  If the two frontiers cross, the
    route shrinks to their midpoint.
    """
    seq = d.sequence
    subs = partition.subs
    first, last = subs[0], subs[-1]
    a = first.x_left
    b = last.x_right
    if left:
        a = seq[d.first_extremal() - 1].x_right
    if right:
        b = seq[d.last_extremal() - 1].x_left
    a = min(a, first.x_right)
    b = max(b, last.x_left)
    if a > b:
        mid = Fraction(a + b, 2)
        if mid.denominator == 1:
            mid = mid.numerator
        return OrthoRoute((Point(mid, aligns[0]),))
    pts = list(route.vertices)
    pts[0] = Point(a, pts[0].y)
    pts[-1] = Point(b, pts[-1].y)
    return simplify(pts)


def route_metrics(route: OrthoRoute) -> RouteMetrics:
    return RouteMetrics(route.bends, route.length, len(route.vertices))


class MonotoneResult(NamedTuple):
    decomposition: Decomposition
    partition: Partition
    aligns: list[int]
    untrimmed: OrthoRoute
    route: OrthoRoute  # trimmed when requested


def solve_decomposition(d: Decomposition, trim: bool = True, left: bool = True, right: bool = True) -> MonotoneResult:
    part = partition_balanced(d)
    ys = select_aligns(part)
    raw = build_route(part, ys)
    final = trim_route(raw, d, part, ys, left=left, right=right) if trim else raw
    return MonotoneResult(d, part, ys, raw, final)


def monotone_route(p: OrthoPolygon, trim: bool = True) -> MonotoneResult:
    """Full pipeline for an x-monotone polygon."""
    d = vertical_decompose(p)
    if d.kind.__class__.__name__ != "Monotone":
        raise UnsupportedClass("polygon is not x-monotone")
    return solve_decomposition(d, trim)
