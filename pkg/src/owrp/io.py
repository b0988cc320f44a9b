"""JSON file formats and SVG rendering."""
from __future__ import annotations

import json
from fractions import Fraction

from .decomposition import Decomposition
from .errors import MalformedJson
from .geometry import Number, OrthoPolygon, Point, exact, validate
from .route import OrthoRoute


def _num(v: Number):
    """JSON-friendly number: ints stay ints, other rationals become floats."""
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else float(v)
    return v


def _load(data: bytes | str) -> dict:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedJson(f"input is not UTF-8: {exc}") from None
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise MalformedJson(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict) or not isinstance(obj.get("vertices"), list):
        raise MalformedJson('expected an object with a "vertices" list')
    return obj


def _pairs(raw: list) -> list:
    for i, v in enumerate(raw):
        if not isinstance(v, (list, tuple)) or len(v) != 2:
            raise MalformedJson("vertex must be an [x, y] pair", i)
        if not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in v):
            raise MalformedJson("vertex coordinates must be numbers", i)
    return raw


def parse_polygon(data: bytes | str) -> OrthoPolygon:
    """Parse a PolygonFile and validate it."""
    return validate(_pairs(_load(data)["vertices"]))


def parse_route(data: bytes | str) -> OrthoRoute:
    """Parse the vertices of a RouteFile; other keys are ignored."""
    raw = _pairs(_load(data)["vertices"])
    if not raw:
        raise MalformedJson("route has no vertices")
    try:
        return OrthoRoute(tuple(Point(exact(x), exact(y)) for x, y in raw))
    except ValueError as exc:
        raise MalformedJson(str(exc)) from None


def polygon_to_dict(poly: OrthoPolygon) -> dict:
    return {"vertices": poly.as_lists()}


def route_to_dict(route: OrthoRoute, trimmed: bool, k: int) -> dict:
    return {
        "vertices": [[_num(p.x), _num(p.y)] for p in route.vertices],
        "bends": route.bends,
        "length": _num(route.length),
        "trimmed": trimmed,
        "k": k,
    }


def dumps(obj: dict) -> str:
    return json.dumps(obj, separators=(", ", ": ")) + "\n"


def decomposition_to_dict(d: Decomposition) -> dict:
    def group(g):
        return {"edge": g.edge_id, "y": g.y, "first": g.first, "last": g.last, "extremal": g.extremal}

    out = {
        "m": d.m,
        "class": type(d.kind).__name__,
        "rects": [
            {"index": r.index, "x_left": r.x_left, "x_right": r.x_right, "bottom": r.bottom, "top": r.top}
            for r in d.rects
        ],
        "eu": [group(g) for g in d.eu],
        "el": [group(g) for g in d.el],
    }
    order = getattr(d.kind, "order", None)
    if order is not None:
        out["order"] = list(order)
        out["reflex"] = sorted(d.kind.reflex)
    return out


# SVG ----------------------------------------------------------------------

SCALE = 20  # pixels per unit
PAD = 20  # pixels around the bounding box


def _fmt(v) -> str:
    v = Fraction(v)
    if v.denominator == 1:
        return str(v.numerator)
    return format(float(v), ".6g")


def render_svg(
    poly: OrthoPolygon,
    decomposition: Decomposition | None = None,
    route: OrthoRoute | None = None,
) -> str:
    """Deterministic SVG drawing of a polygon with optional rects and route."""
    x0, y0, x1, y1 = poly.bbox
    width = (x1 - x0) * SCALE + 2 * PAD
    height = (y1 - y0) * SCALE + 2 * PAD

    def sx(x):
        return _fmt((x - x0) * SCALE + PAD)

    def sy(y):
        return _fmt((y1 - y) * SCALE + PAD)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<!-- owrp: {SCALE}px per unit, {PAD}px padding, y axis flipped "
        f"(screen y = {PAD} + ({y1} - y) * {SCALE}, screen x = {PAD} + (x - {x0}) * {SCALE}) -->",
    ]
    d = " ".join(f"{'M' if i == 0 else 'L'} {sx(p.x)} {sy(p.y)}" for i, p in enumerate(poly.vertices))
    out.append(f'<path class="outline" d="{d} Z" fill="#eef2f7" stroke="#222" stroke-width="2"/>')
    if decomposition is not None:
        for r in decomposition.rects:
            out.append(
                f'<rect class="cell" x="{sx(r.x_left)}" y="{sy(r.top)}" '
                f'width="{_fmt((r.x_right - r.x_left) * SCALE)}" height="{_fmt((r.top - r.bottom) * SCALE)}" '
                f'fill="none" stroke="#889" stroke-width="1" stroke-dasharray="4 3"/>'
            )
    if route is not None:
        v = route.vertices
        if route.degenerate:
            out.append(f'<circle class="route" cx="{sx(v[0].x)}" cy="{sy(v[0].y)}" r="5" fill="#c22"/>')
        else:
            pts = " ".join(f"{sx(p.x)},{sy(p.y)}" for p in v)
            out.append(f'<polyline class="route" points="{pts}" fill="none" stroke="#c22" stroke-width="4"/>')
            for p in v[1:-1]:
                out.append(f'<circle class="bend" cx="{sx(p.x)}" cy="{sy(p.y)}" r="4" fill="#fff" stroke="#c22"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

