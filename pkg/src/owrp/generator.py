"""Seeded generators for x-monotone and path polygons.

Randomness comes from SplitMix64 (Steele, Lea & Flood 2014): state advances
by 0x9E3779B97F4A7C15 and each output is the standard xor-shift-multiply
finalizer of the new state.  ``below(n)`` is ``next() % n``.  Keeping the
sequence explicit makes instances reproducible outside Python.
"""
from __future__ import annotations

from dataclasses import dataclass

from .decomposition import PathPolygon, dual_path_class
from .errors import GenerationFailed
from .geometry import OrthoPolygon, Point, validate

MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        return self.next() % n


@dataclass(frozen=True)
class GenSpec:
    columns: int = 1
    max_height: int = 4
    seed: int = 0
    mode: str = "monotone"  # or "path"
    rects: int = 0  # path mode: rectangle count (defaults to columns)
    random_widths: bool = False
    max_width: int = 3

    def __post_init__(self):
        if self.columns < 1 and self.rects < 1:
            raise ValueError("need at least one column")
        if self.max_height < 1:
            raise ValueError("max_height must be >= 1")


def _columns(rng: SplitMix64, count: int, height: int) -> list[tuple[int, int]]:
    """(bottom, top) pairs in [0, height]; neighbours differ on exactly one side."""
    if count > 1 and height < 2:
        raise ValueError("max_height must be >= 2 for more than one column")
    b = rng.below(height)
    t = b + 1 + rng.below(height - b)
    cols = [(b, t)]
    for _ in range(count - 1):
        can_top = height - b >= 2
        can_bottom = t >= 2
        if can_top and (not can_bottom or rng.below(2)):
            v = b + 1 + rng.below(height - b - 1)
            t = v + 1 if v >= t else v
        else:
            v = rng.below(t - 1)
            b = v + 1 if v >= b else v
        cols.append((b, t))
    return cols


def _widths(rng: SplitMix64, spec: GenSpec, count: int) -> list[int]:
    if not spec.random_widths:
        return [1] * count
    return [1 + rng.below(spec.max_width) for _ in range(count)]


def gen_monotone(spec: GenSpec) -> OrthoPolygon:
    """x-monotone polygon with exactly ``spec.columns`` slabs."""
    rng = SplitMix64(spec.seed)
    cols = _columns(rng, spec.columns, spec.max_height)
    widths = _widths(rng, spec, spec.columns)
    xs = [0]
    for w in widths:
        xs.append(xs[-1] + w)
    lower = [(0, cols[0][0])]
    for i in range(1, len(cols)):
        if cols[i][0] != cols[i - 1][0]:
            lower.append((xs[i], cols[i - 1][0]))
            lower.append((xs[i], cols[i][0]))
    lower.append((xs[-1], cols[-1][0]))
    upper = [(xs[-1], cols[-1][1])]
    for i in range(len(cols) - 1, 0, -1):
        if cols[i][1] != cols[i - 1][1]:
            upper.append((xs[i], cols[i][1]))
            upper.append((xs[i], cols[i - 1][1]))
    upper.append((0, cols[0][1]))
    return validate(lower + upper)


def _trace_cells(cells: set[tuple[int, int]]) -> list[tuple[int, int]]:
    """Boundary of a simply connected union of unit cells, counterclockwise."""
    nxt: dict[tuple[int, int], tuple[int, int]] = {}
    for x, y in cells:
        for a, b, nb in (
            ((x, y), (x + 1, y), (x, y - 1)),
            ((x + 1, y), (x + 1, y + 1), (x + 1, y)),
            ((x + 1, y + 1), (x, y + 1), (x, y + 1)),
            ((x, y + 1), (x, y), (x - 1, y)),
        ):
            if nb not in cells:
                if a in nxt:
                    raise GenerationFailed("cell union pinches at a vertex")
                nxt[a] = b
    start = min(nxt)
    loop = [start]
    cur = nxt[start]
    while cur != start:
        loop.append(cur)
        cur = nxt[cur]
    if len(loop) != len(nxt):
        raise GenerationFailed("cell union is not simply connected")
    return loop


def gen_path(spec: GenSpec) -> OrthoPolygon:
    """Serpentine path polygon: monotone runs stacked in bands, joined by
    fold rectangles whose two neighbours attach on the same side."""
    count = spec.rects or spec.columns
    if count <= 2:
        return gen_monotone(GenSpec(count, max(spec.max_height, 2), spec.seed, random_widths=spec.random_widths))
    rng = SplitMix64(spec.seed)
    height = max(spec.max_height, 2)
    max_folds = (count - 1) // 2
    folds = 1 + rng.below(max(1, min(max_folds, count // 5)))
    runs = [1] * (folds + 1)
    for _ in range(count - folds - (folds + 1)):
        runs[rng.below(folds + 1)] += 1

    rects: list[tuple[int, int, int, int]] = []  # x0, x1, y0, y1
    x = 0
    prev_last = None
    for j, length in enumerate(runs):
        base = j * (height + 1)
        cols = _columns(rng, length, height)
        widths = _widths(rng, spec, length)
        step = 1 if j % 2 == 0 else -1
        if prev_last is not None:
            pb, pbase = prev_last
            bb, bt = cols[0]
            fb = pbase + rng.below(pb + 1)
            ft = base + bt + rng.below(height - bt + 1)
            fx = x if step < 0 else x - 1
            rects.append((fx, fx + 1, fb, ft))
        for (b, t), w in zip(cols, widths):
            if step > 0:
                rects.append((x, x + w, base + b, base + t))
                x += w
            else:
                rects.append((x - w, x, base + b, base + t))
                x -= w
        prev_last = (cols[-1][0], base)

    cells = {(cx, cy) for x0, x1, y0, y1 in rects for cx in range(x0, x1) for cy in range(y0, y1)}
    pts = _trace_cells(cells)
    if rng.below(2):
        pts = [(px, -py) for px, py in pts]
    if rng.below(2):
        pts = [(-px, py) for px, py in pts]
    poly = validate(pts)
    if not isinstance(dual_path_class(poly), PathPolygon):
        raise GenerationFailed("generated polygon is not a path polygon")
    return poly


def generate(spec: GenSpec) -> OrthoPolygon:
    return gen_path(spec) if spec.mode == "path" else gen_monotone(spec)
