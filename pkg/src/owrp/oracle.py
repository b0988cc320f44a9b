"""Brute-force checkers: visibility, sampled coverage, exhaustive align
minimization, kernel computation and a bounded minimum-bend search.

Nothing here uses the decomposition or route modules; every answer comes
from the polygon boundary and exact slab containment.
"""
from __future__ import annotations

import bisect
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from .errors import BudgetExceeded, PointOutside, RouteOutside, TooLarge
from .geometry import OrthoPolygon, Point, SlabIndex, as_point, contains_point, contains_segment, exact
from .route import OrthoRoute

INSET = Fraction(1, 4)


@dataclass(frozen=True)
class CoverageReport:
    covered: bool
    resolution: int
    uncovered: tuple[Point, ...]
    samples_total: int

    def to_dict(self, limit: int | None = 100) -> dict:
        pts = self.uncovered if limit is None else self.uncovered[:limit]
        return {
            "covered": self.covered,
            "resolution": self.resolution,
            "samples_total": self.samples_total,
            "uncovered_count": len(self.uncovered),
            "uncovered": [[_num(p.x), _num(p.y)] for p in pts],
        }


def _num(v):
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else float(v)
    return v


def visible(p, q, poly: OrthoPolygon) -> bool:
    p, q = as_point(p), as_point(q)
    for pt in (p, q):
        if not contains_point(poly, pt):
            raise PointOutside(f"{tuple(pt)} is outside the polygon")
    return contains_segment(poly, p, q)


class _Scaled:
    """Polygon and helpers on an integer grid refined by ``scale``."""

    def __init__(self, poly: OrthoPolygon, scale: int):
        self.scale = scale
        verts = [Point(v.x * scale, v.y * scale) for v in poly.vertices]
        self.vertices = verts
        self.index = SlabIndex(verts)
        self.transposed = SlabIndex([Point(v.y, v.x) for v in verts])
        self._vslices: dict = {}
        self._hslices: dict = {}

    def vslice(self, x):
        got = self._vslices.get(x)
        if got is None:
            got = self._vslices[x] = self.index.slice_at(x)
        return got

    def hslice(self, y):
        got = self._hslices.get(y)
        if got is None:
            got = self._hslices[y] = self.transposed.slice_at(y)
        return got


def _interval_of(intervals, v) -> int:
    for i, (b, t) in enumerate(intervals):
        if b <= v <= t:
            return i
    return -1


def sample_points(poly: OrthoPolygon, resolution: int, scale: int, grid: _Scaled | None = None) -> list[tuple[int, int]]:
    """Scaled sample set: an r x r sub-grid of every unit cell in the region,
    plus points inset by 1/4 from every vertex and every slab-cell corner.

    Sub-grid offsets are multiples of 1/r, so the set at resolution r is a
    subset of the set at 2r.
    """
    g = grid or _Scaled(poly, scale)
    r = resolution
    offsets = [a * scale // r for a in range(r)]
    pts = set()
    x0, _, x1, _ = poly.bbox
    for cx in range(x0, x1):
        for b, t in poly.index.slice_at(Fraction(2 * cx + 1, 2)):
            for cy in range(b, t):
                for ox in offsets:
                    for oy in offsets:
                        pts.add((cx * scale + ox, cy * scale + oy))
    corners = set((v.x, v.y) for v in poly.vertices)
    idx = poly.index
    for j in range(len(idx.cells)):
        for b, t in idx.intervals(j):
            for x in (idx.xs[j], idx.xs[j + 1]):
                corners.add((x, b))
                corners.add((x, t))
    e = int(INSET * scale)
    for cx, cy in corners:
        for dx in (-e, e):
            for dy in (-e, e):
                q = (cx * scale + dx, cy * scale + dy)
                if q not in pts and g.index.contains_point(*q):
                    pts.add(q)
    return sorted(pts)


def _scale_for(resolution: int, route: OrthoRoute) -> int:
    s = 4 * resolution
    for v in route.vertices:
        for c in v:
            if isinstance(c, Fraction):
                s = s * c.denominator // math.gcd(s, c.denominator)
    return s


def coverage(poly: OrthoPolygon, route: OrthoRoute, resolution: int = 4) -> CoverageReport:
    """Sample-based coverage check.

    A sample counts as covered when a straight sight line inside the closed
    polygon reaches a route vertex, or its perpendicular foot on some route
    segment.  The witness set is finite and lies on the route, so a
    ``covered`` verdict is never optimistic about the samples it checked.
    """
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    for a, b in route.segments() or [(route.vertices[0], route.vertices[0])]:
        if not contains_segment(poly, a, b):
            raise RouteOutside(f"route segment {tuple(a)}-{tuple(b)} leaves the polygon")
    scale = _scale_for(resolution, route)
    g = _Scaled(poly, scale)
    samples = sample_points(poly, resolution, scale, g)
    verts = [(int(v.x * scale), int(v.y * scale)) for v in route.vertices]
    horiz, vert = [], []
    for (ax, ay), (bx, by) in zip(verts, verts[1:]):
        if ay == by:
            horiz.append((min(ax, bx), max(ax, bx), ay))
        else:
            vert.append((min(ay, by), max(ay, by), ax))

    pending = []
    by_x: dict[int, list] = {}
    for s in samples:
        by_x.setdefault(s[0], []).append(s)
    for x, group in by_x.items():
        iv = g.vslice(x)
        good = {_interval_of(iv, y) for lo, hi, y in horiz if lo <= x <= hi}
        for s in group:
            if _interval_of(iv, s[1]) not in good:
                pending.append(s)
    still = []
    for s in pending:
        if vert:
            iv = g.hslice(s[1])
            k = _interval_of(iv, s[0])
            if any(lo <= s[1] <= hi and _interval_of(iv, x) == k for lo, hi, x in vert):
                continue
        still.append(s)
    uncovered = []
    index = g.index
    for sx, sy in still:
        if not any(index.contains_segment(sx, sy, vx, vy) for vx, vy in verts):
            uncovered.append(Point(Fraction(sx, scale), Fraction(sy, scale)))
    return CoverageReport(not uncovered, resolution, tuple(uncovered), len(samples))


def brute_align_min(corridors: Sequence[tuple[int, int]]) -> int:
    """Minimum total vertical connector length over all 2^k endpoint choices."""
    k = len(corridors)
    if k > 20:
        raise TooLarge(f"{k} corridors; exhaustive search is limited to 20")
    best = None
    for ys in itertools.product(*[(lo, hi) for lo, hi in corridors]):
        total = sum(abs(ys[i + 1] - ys[i]) for i in range(k - 1))
        if best is None or total < best:
            best = total
    return best


class KernelRect(NamedTuple):
    x_left: int
    x_right: int
    bottom: int
    top: int

    def corners(self) -> list[Point]:
        return [Point(x, y) for x in (self.x_left, self.x_right) for y in (self.bottom, self.top)]


def kernel_rect(poly: OrthoPolygon) -> KernelRect | None:
    """Intersection of the inner half-planes of all edges (None when empty)."""
    x_lo, y_lo, x_hi, y_hi = poly.bbox
    v = poly.vertices
    n = len(v)
    for i in range(n):
        a, b = v[i], v[(i + 1) % n]
        # counterclockwise: interior lies left of each directed edge
        if a.y == b.y:
            if b.x > a.x:
                y_lo = max(y_lo, a.y)
            else:
                y_hi = min(y_hi, a.y)
        else:
            if b.y > a.y:
                x_hi = min(x_hi, a.x)
            else:
                x_lo = max(x_lo, a.x)
    if x_lo > x_hi or y_lo > y_hi:
        return None
    return KernelRect(x_lo, x_hi, y_lo, y_hi)


class _CoverTable:
    """Per-sample visibility data for fast repeated coverage tests over
    candidate routes whose vertices come from a fixed point set."""

    def __init__(self, poly: OrthoPolygon, resolution: int, cand_x, cand_y):
        scale = 4 * resolution
        self.scale = scale
        g = _Scaled(poly, scale)
        s = np.array(sample_points(poly, resolution, scale, g), dtype=np.int64)
        self.sx, self.sy = s[:, 0], s[:, 1]
        vlo, vhi, hlo, hhi = [], [], [], []
        for x, y in s.tolist():
            iv = g.vslice(x)
            b, t = iv[_interval_of(iv, y)]
            vlo.append(b)
            vhi.append(t)
            iv = g.hslice(y)
            b, t = iv[_interval_of(iv, x)]
            hlo.append(b)
            hhi.append(t)
        self.vlo, self.vhi = np.array(vlo), np.array(vhi)
        self.hlo, self.hhi = np.array(hlo), np.array(hhi)
        self.points = [
            Point(x, y) for x in cand_x for y in cand_y if contains_point(poly, Point(x, y))
        ]
        self.pid = {p: i for i, p in enumerate(self.points)}
        vis = np.zeros((len(self.points), len(s)), dtype=bool)
        for i, p in enumerate(self.points):
            px, py = int(p.x * scale), int(p.y * scale)
            vis[i] = [g.index.contains_segment(x, y, px, py) for x, y in s.tolist()]
        self.vis = vis

    def covered(self, route: Sequence[Point]) -> bool:
        sc = self.scale
        acc = np.zeros(len(self.sx), dtype=bool)
        for p in route:
            acc |= self.vis[self.pid[p]]
        for a, b in zip(route, route[1:]):
            if a.y == b.y:
                lo, hi, y = int(min(a.x, b.x) * sc), int(max(a.x, b.x) * sc), int(a.y * sc)
                acc |= (self.sx >= lo) & (self.sx <= hi) & (self.vlo <= y) & (self.vhi >= y)
            else:
                lo, hi, x = int(min(a.y, b.y) * sc), int(max(a.y, b.y) * sc), int(a.x * sc)
                acc |= (self.sy >= lo) & (self.sy <= hi) & (self.hlo <= x) & (self.hhi >= x)
        return bool(acc.all())


def _half_grid(values) -> list:
    vals = sorted(set(values))
    out = []
    for a, b in zip(vals, vals[1:]):
        out.append(a)
        out.append(exact(Fraction(a + b, 2)))
    out.append(vals[-1])
    return out


@dataclass
class MinBendResult:
    bends: int
    route: OrthoRoute
    nodes: int = field(default=0)


def brute_min_bend(
    poly: OrthoPolygon, max_bends: int = 2, budget: int = 200_000, resolution: int = 4
) -> MinBendResult | None:
    """Smallest bend count (<= max_bends) of a covering route whose vertices
    lie on the half-grid of edge coordinates.

    Exhaustive over that candidate set, so the answer is approximate-complete:
    a smaller count off the candidate grid would go unnoticed.  Raises
    ``BudgetExceeded`` once more than ``budget`` candidate routes were tried.
    """
    if max_bends > 2:
        raise ValueError("max_bends is limited to 2")
    cx = _half_grid(v.x for v in poly.vertices)
    cy = _half_grid(v.y for v in poly.vertices)
    table = _CoverTable(poly, resolution, cx, cy)
    pts = table.points
    nodes = 0

    def inside(a, b):
        return contains_segment(poly, a, b)

    # axis-parallel reachable partners per candidate point
    reach: dict[Point, list[Point]] = {p: [] for p in pts}
    for a in pts:
        for b in pts:
            if a != b and (a.x == b.x or a.y == b.y) and inside(a, b):
                reach[a].append(b)

    def attempt(route):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"more than {budget} candidate routes")
        return table.covered(route)

    for p in pts:
        if attempt([p]):
            return MinBendResult(0, OrthoRoute((p,)), nodes)
    for a in pts:
        for b in reach[a]:
            if b > a and attempt([a, b]):
                return MinBendResult(0, OrthoRoute((a, b)), nodes)
    if max_bends >= 1:
        for c in pts:
            arms = reach[c]
            for a in arms:
                if a.y != c.y:
                    continue
                for b in arms:
                    if b.x == c.x and attempt([a, c, b]):
                        return MinBendResult(1, OrthoRoute((a, c, b)), nodes)
    if max_bends >= 2:
        for c1 in pts:
            for c2 in reach[c1]:
                if c2 < c1:
                    continue
                for a in reach[c1]:
                    if (a.x == c1.x) == (c1.x == c2.x):
                        continue
                    for b in reach[c2]:
                        if (b.x == c2.x) == (c1.x == c2.x):
                            continue
                        if attempt([a, c1, c2, b]):
                            return MinBendResult(2, OrthoRoute((a, c1, c2, b)), nodes)
    return None
