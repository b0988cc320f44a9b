"""Orthogonal polygon model, validation and exact containment predicates.

Polygon vertices live on the integer grid.  Query points may be any exact
rational (``int`` or ``Fraction``); floats are converted exactly, so no
predicate in this module ever uses a tolerance.
"""
from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence, Union

from .errors import (
    NonIntegerCoordinate,
    NotClosedOrTooSmall,
    NotOrthogonal,
    NotSimple,
    ZeroLengthEdge,
)

Number = Union[int, Fraction]


class Point(NamedTuple):
    x: Number
    y: Number


class Segment(NamedTuple):
    a: Point
    b: Point

    @property
    def orientation(self) -> str | None:
        if self.a.y == self.b.y and self.a.x != self.b.x:
            return "horizontal"
        if self.a.x == self.b.x and self.a.y != self.b.y:
            return "vertical"
        return None

    @property
    def degenerate(self) -> bool:
        return self.a == self.b


def exact(value) -> Number:
    """Convert a coordinate to an exact rational (ints stay ints)."""
    if isinstance(value, bool):
        raise TypeError("bool is not a coordinate")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, (float, str)):
        return exact(Fraction(value))
    raise TypeError(f"unsupported coordinate type {type(value).__name__}")


def as_point(value) -> Point:
    x, y = value
    return Point(exact(x), exact(y))


def cross(o: Point, a: Point, b: Point) -> Number:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def signed_area2(vertices: Sequence[Point]) -> Number:
    """Twice the signed shoelace area (positive for counterclockwise)."""
    total = 0
    prev = vertices[-1]
    for cur in vertices:
        total += prev.x * cur.y - cur.x * prev.y
        prev = cur
    return total


class SlabIndex:
    """Closed region of a rectilinear polygon cut into vertical slabs.

    Slab ``j`` is the open strip ``xs[j] < x < xs[j+1]``; its cross-section is
    a sorted tuple of ``(y, edge_id)`` entries, consecutive pairs bounding the
    interior intervals.  Inside a slab the cross-section is constant, which
    is what makes the segment test below exact.
    """

    def __init__(self, vertices: Sequence[Point]):
        n = len(vertices)
        starts: dict[Number, list] = {}
        ends: dict[Number, list] = {}
        for i in range(n):
            a, b = vertices[i], vertices[(i + 1) % n]
            if a.y == b.y:
                lo, hi = (a.x, b.x) if a.x < b.x else (b.x, a.x)
                starts.setdefault(lo, []).append((a.y, i))
                ends.setdefault(hi, []).append((a.y, i))
        self.xs: list[Number] = sorted({v.x for v in vertices})
        self.cells: list[tuple] = []
        active: list[tuple] = []
        for x in self.xs[:-1]:
            for item in ends.get(x, ()):
                del active[bisect.bisect_left(active, item)]
            for item in starts.get(x, ()):
                bisect.insort(active, item)
            self.cells.append(tuple(active))

    def intervals(self, j: int) -> list[tuple[Number, Number]]:
        c = self.cells[j]
        return [(c[i][0], c[i + 1][0]) for i in range(0, len(c), 2)]

    def slice_at(self, x) -> list[tuple[Number, Number]]:
        """Closed vertical cross-section at ``x`` as merged sorted intervals."""
        xs = self.xs
        if x < xs[0] or x > xs[-1]:
            return []
        j = bisect.bisect_right(xs, x) - 1
        if xs[j] != x:
            return self.intervals(j)
        parts = []
        if j > 0:
            parts.extend(self.intervals(j - 1))
        if j < len(self.cells):
            parts.extend(self.intervals(j))
        parts.sort()
        merged: list[list] = []
        for b, t in parts:
            if merged and b <= merged[-1][1]:
                merged[-1][1] = max(merged[-1][1], t)
            else:
                merged.append([b, t])
        return [(b, t) for b, t in merged]

    def contains_point(self, x, y) -> bool:
        return any(b <= y <= t for b, t in self.slice_at(x))

    def contains_segment(self, px, py, qx, qy) -> bool:
        if px == qx:
            lo, hi = (py, qy) if py <= qy else (qy, py)
            return any(b <= lo and hi <= t for b, t in self.slice_at(px))
        if px > qx:
            px, py, qx, qy = qx, qy, px, py
        xs = self.xs
        if px < xs[0] or qx > xs[-1]:
            return False
        dx, dy = qx - px, qy - py
        j = bisect.bisect_right(xs, px) - 1
        if j == len(self.cells):
            j -= 1
        # y(x) * dx = py * dx + dy * (x - px); compare scaled values only
        base = py * dx
        while j < len(self.cells) and xs[j] < qx:
            u = xs[j] if xs[j] > px else px
            v = xs[j + 1] if xs[j + 1] < qx else qx
            yu = base + dy * (u - px)
            yv = base + dy * (v - px)
            c = self.cells[j]
            for i in range(0, len(c), 2):
                b, t = c[i][0] * dx, c[i + 1][0] * dx
                if b <= yu <= t:
                    if not b <= yv <= t:
                        return False
                    break
            else:
                return False
            j += 1
        return True


@dataclass(frozen=True)
class OrthoPolygon:
    """Validated counterclockwise orthogonal polygon; build it with ``validate``."""

    vertices: tuple[Point, ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def area(self) -> int:
        return signed_area2(self.vertices) // 2

    def edge(self, i: int) -> Segment:
        return Segment(self.vertices[i], self.vertices[(i + 1) % self.n])

    def edges(self) -> list[Segment]:
        return [self.edge(i) for i in range(self.n)]

    @cached_property
    def index(self) -> SlabIndex:
        return SlabIndex(self.vertices)

    @cached_property
    def bbox(self) -> tuple[int, int, int, int]:
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def as_lists(self) -> list[list[int]]:
        return [[v.x, v.y] for v in self.vertices]


def _integer(value, index: int) -> int:
    if isinstance(value, bool):
        raise NonIntegerCoordinate("boolean coordinate", index)
    if isinstance(value, int):
        return value
    if isinstance(value, float) and value.is_integer():
        return int(value)
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    raise NonIntegerCoordinate(f"coordinate {value!r} is not an integer", index)


def validate(raw_vertices: Iterable) -> OrthoPolygon:
    """Normalize raw coordinate pairs into an ``OrthoPolygon``.

    Clockwise input is reversed, collinear runs are merged, and the cycle is
    rotated to start at the lexicographically smallest vertex.  Error indices
    refer to positions in the input list.
    """
    pts = []
    for i, pair in enumerate(raw_vertices):
        try:
            x, y = pair
        except (TypeError, ValueError):
            raise NotClosedOrTooSmall("vertex is not a coordinate pair", i) from None
        if type(x) is not int:
            x = _integer(x, i)
        if type(y) is not int:
            y = _integer(y, i)
        pts.append(Point(x, y))
    if len(pts) > 1 and pts[0] == pts[-1]:
        pts.pop()
    if len(pts) < 3:
        raise NotClosedOrTooSmall(f"need at least 4 vertices, got {len(pts)}")

    n = len(pts)
    for i, (a, b) in enumerate(zip(pts, pts[1:] + pts[:1])):
        if a == b:
            raise ZeroLengthEdge("repeated vertex", (i + 1) % n)
        if a[0] != b[0] and a[1] != b[1]:
            raise NotOrthogonal("diagonal edge", (i + 1) % n)

    pts = _merge_collinear(pts)
    if len(pts) < 4:
        raise NotClosedOrTooSmall(f"need at least 4 vertices after merging, got {len(pts)}")

    area2 = signed_area2(pts)
    if area2 == 0:
        raise NotSimple("zero enclosed area")
    if area2 < 0:
        pts.reverse()
    start = min(range(len(pts)), key=pts.__getitem__)
    pts = pts[start:] + pts[:start]
    _check_simple(pts)
    return OrthoPolygon(tuple(pts))


def _merge_collinear(pts: list[Point]) -> list[Point]:
    # A vertex is redundant when both incident edges are parallel; a reversal
    # there is a spike, which can never bound a simple region.
    out = list(pts)
    changed = True
    while changed and len(out) >= 3:
        changed = False
        keep = []
        n = len(out)
        for i in range(n):
            a, b, c = out[i - 1], out[i], out[(i + 1) % n]
            if (a.y == b.y == c.y) or (a.x == b.x == c.x):
                if (b.x - a.x) * (c.x - b.x) < 0 or (b.y - a.y) * (c.y - b.y) < 0:
                    raise NotSimple("boundary doubles back on itself", i)
                changed = True
                continue
            keep.append(b)
        out = keep
    return out


def _check_simple(pts: list[Point]) -> None:
    n = len(pts)
    horiz, vert = [], []
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        if a.y == b.y:
            horiz.append((a.y, min(a.x, b.x), max(a.x, b.x), i))
        else:
            vert.append((a.x, min(a.y, b.y), max(a.y, b.y), i))
    if len(horiz) != len(vert):
        raise NotSimple("edges do not alternate horizontal/vertical")

    for group in (sorted(horiz), sorted(vert)):
        for prev, cur in zip(group, group[1:]):
            if prev[0] == cur[0] and cur[1] <= prev[2]:
                raise NotSimple("collinear edges touch or overlap", cur[3])

    # Sweep: at each x insert starting horizontals, query verticals, then
    # retire ending horizontals.  A vertical edge must meet exactly its two
    # neighbouring horizontals.
    events = []
    for y, lo, hi, _ in horiz:
        events.append((lo, 0, y, 0))
        events.append((hi, 2, y, 0))
    for x, lo, hi, i in vert:
        events.append((x, 1, lo, hi, i))
    events.sort()
    active: list = []
    for ev in events:
        kind = ev[1]
        if kind == 0:
            bisect.insort(active, ev[2])
        elif kind == 2:
            del active[bisect.bisect_left(active, ev[2])]
        else:
            hits = bisect.bisect_right(active, ev[3]) - bisect.bisect_left(active, ev[2])
            if hits != 2:
                raise NotSimple("boundary self-intersects", ev[4])


def is_x_monotone(p: OrthoPolygon) -> bool:
    """True iff every vertical line meets the interior in a connected set.

    For a simple polygon this is equivalent to the horizontal edge
    directions changing sign exactly twice around the cycle.
    """
    signs = []
    v = p.vertices
    n = len(v)
    for i in range(n):
        dx = v[(i + 1) % n].x - v[i].x
        if dx:
            signs.append(dx > 0)
    changes = sum(1 for i in range(len(signs)) if signs[i] != signs[i - 1])
    return changes == 2


def reflex_vertices(p: OrthoPolygon) -> list[int]:
    v = p.vertices
    n = len(v)
    return [i for i in range(n) if cross(v[i - 1], v[i], v[(i + 1) % n]) < 0]


def contains_point(p: OrthoPolygon, q) -> bool:
    q = as_point(q)
    return p.index.contains_point(q.x, q.y)


def contains_segment(p: OrthoPolygon, a, b=None) -> bool:
    """Closed-segment containment; grazing the boundary does not block.

    Accepts either a ``Segment`` or two endpoints.
    """
    if b is None:
        a, b = a
    a, b = as_point(a), as_point(b)
    return p.index.contains_segment(a.x, a.y, b.x, b.y)
