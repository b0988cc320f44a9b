"""Routes for path polygons: remove reflex rects, route the monotone pieces,
and reconnect them along the reflex rects' shared vertical sides."""
from __future__ import annotations

from dataclasses import dataclass

from .decomposition import (
    Decomposition,
    Monotone,
    PathPolygon,
    Rect,
    decomposition_from_sequence,
    vertical_decompose,
)
from .geometry import OrthoPolygon, Point, validate
from .route import OrthoRoute, simplify, solve_decomposition


@dataclass(frozen=True)
class Piece:
    """Maximal run of non-reflex rects, stored left to right."""

    decomposition: Decomposition
    reversed: bool  # True when the dual path walks this piece right to left

    @property
    def rects(self) -> tuple[Rect, ...]:
        return self.decomposition.rects


@dataclass(frozen=True)
class PathDecomposition:
    pieces: tuple[Piece, ...]
    reflex_rects: tuple[int, ...]
    # one entry per maximal run of adjacent reflex rects (normally a single
    # rect): the x of the vertical line every rect of the run and both
    # neighbouring pieces touch
    junctions: tuple[tuple[tuple[int, ...], int], ...]

    @property
    def shared_boundaries(self) -> dict[int, int]:
        return {r: x for run, x in self.junctions for r in run}


def split_at_reflex(d: Decomposition) -> PathDecomposition:
    if isinstance(d.kind, Monotone):
        return PathDecomposition((Piece(d, False),), (), ())
    if not isinstance(d.kind, PathPolygon):
        raise ValueError("split_at_reflex needs a monotone or path-polygon decomposition")
    seq = d.sequence
    reflex = d.kind.reflex
    runs: list[list[Rect]] = [[]]
    junctions = []
    reflex_run: list[Rect] = []
    for r in seq:
        if r.index in reflex:
            reflex_run.append(r)
            continue
        if reflex_run:
            junctions.append(_junction(runs[-1], reflex_run, r))
            runs.append([])
            reflex_run = []
        runs[-1].append(r)
    pieces = []
    for k, run in enumerate(runs):
        if len(run) > 1:
            backwards = run[1].x_left < run[0].x_left
        elif k < len(junctions):
            backwards = junctions[k][1] == run[0].x_left
        else:
            backwards = junctions[k - 1][1] == run[0].x_right
        pieces.append(_piece(run, backwards))
    return PathDecomposition(tuple(pieces), tuple(sorted(reflex)), tuple(junctions))


def _piece(run: list[Rect], backwards: bool) -> Piece:
    ordered = run[::-1] if backwards else run
    rects = [r._replace(index=k) for k, r in enumerate(ordered, 1)]
    return Piece(decomposition_from_sequence(rects), backwards)


def _junction(before: list[Rect], reflex_run: list[Rect], after: Rect) -> tuple[tuple[int, ...], int]:
    q = reflex_run[0]
    # the reflex rect touches both neighbours on one side
    x = q.x_right if before[-1].x_left == q.x_right else q.x_left
    assert after.x_left == x or after.x_right == x, "reflex run does not share one boundary"
    return tuple(r.index for r in reflex_run), x


def piece_polygon(piece: Piece) -> OrthoPolygon:
    """Re-assemble a piece as a standalone polygon."""
    rects = piece.rects
    lower = [Point(rects[0].x_left, rects[0].bottom)]
    for r in rects:
        lower.append(Point(r.x_left, r.bottom))
        lower.append(Point(r.x_right, r.bottom))
    upper = []
    for r in reversed(rects):
        upper.append(Point(r.x_right, r.top))
        upper.append(Point(r.x_left, r.top))
    pts = []
    for p in lower + upper:
        if not pts or pts[-1] != p:
            pts.append(p)
    if pts[0] == pts[-1]:
        pts.pop()
    return validate(pts)


def route_path_polygon(p: OrthoPolygon, trim: bool = True) -> OrthoRoute:
    """Route a monotone or path polygon.

    Each piece is routed by the monotone pipeline.  Only the two free ends
    of the overall route are trimmed; piece ends facing a reflex rect stay
    on its shared side, where a vertical connector joins them.
    """
    d = vertical_decompose(p)
    if isinstance(d.kind, Monotone):
        return solve_decomposition(d, trim).route
    return route_split(split_at_reflex(d), trim)


def route_split(pd: PathDecomposition, trim: bool = True) -> OrthoRoute:
    pieces = pd.pieces
    last = len(pieces) - 1
    points: list[Point] = []
    for k, piece in enumerate(pieces):
        # free ends in dual-path order, mapped onto the piece's x order
        free_start, free_end = trim and k == 0, trim and k == last
        left, right = (free_end, free_start) if piece.reversed else (free_start, free_end)
        res = solve_decomposition(piece.decomposition, left or right, left, right)
        verts = list(res.route.vertices)
        if piece.reversed:
            verts.reverse()
        if k > 0:
            x = pd.junctions[k - 1][1]
            if verts[0].x != x:
                verts.insert(0, Point(x, verts[0].y))
        if k < last:
            x = pd.junctions[k][1]
            if verts[-1].x != x:
                verts.append(Point(x, verts[-1].y))
        points.extend(verts)
    return simplify(points)
