"""Vertical decomposition into rectangles, edge groups and dual-graph class."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence, Union

from .errors import UnsupportedClass
from .geometry import OrthoPolygon, is_x_monotone


class Rect(NamedTuple):
    index: int  # 1-based
    x_left: int
    x_right: int
    bottom: int
    top: int
    top_edge: int
    bottom_edge: int

    @property
    def area(self) -> int:
        return (self.x_right - self.x_left) * (self.top - self.bottom)


class EdgeGroup(NamedTuple):
    edge_id: int
    y: int
    first: int  # 1-based positions in the rect sequence, inclusive
    last: int
    side: str  # "top" | "bottom"
    extremal: bool = False


@dataclass(frozen=True)
class Monotone:
    pass


@dataclass(frozen=True)
class PathPolygon:
    order: tuple[int, ...]  # rect indices along the dual path
    reflex: frozenset[int]


@dataclass(frozen=True)
class Unsupported:
    reason: str


DualClass = Union[Monotone, PathPolygon, Unsupported]


@dataclass(frozen=True)
class Decomposition:
    """Rectangles of a polygon plus edge groups along ``sequence``.

    ``rects`` are ordered by ``(x_left, bottom)``.  For the monotone class
    that is also the dual-path order; for path polygons the dual order is
    ``kind.order`` and ``eu``/``el`` refer to positions in that order.
    """

    rects: tuple[Rect, ...]
    eu: tuple[EdgeGroup, ...]
    el: tuple[EdgeGroup, ...]
    kind: DualClass = field(default_factory=Monotone)

    @property
    def m(self) -> int:
        return len(self.rects)

    @property
    def sequence(self) -> tuple[Rect, ...]:
        if isinstance(self.kind, PathPolygon):
            return tuple(self.rects[i - 1] for i in self.kind.order)
        return self.rects

    def first_extremal(self) -> int:
        """1-based position of the first rect whose top group is a local max
        or whose bottom group is a local min."""
        return min(
            next(g.first for g in self.eu if g.extremal),
            next(g.first for g in self.el if g.extremal),
        )

    def last_extremal(self) -> int:
        return max(
            next(g.last for g in reversed(self.eu) if g.extremal),
            next(g.last for g in reversed(self.el) if g.extremal),
        )


def monotone_rects(p: OrthoPolygon) -> list[Rect]:
    """Linear-time decomposition of an x-monotone polygon.

    Relies on the canonical start vertex (bottom of the leftmost edge): the
    lower chain is then a prefix of the cycle and the upper chain the rest.
    """
    v = p.vertices
    n = len(v)
    lower = []
    upper = []
    for i in range(n):
        a = v[i]
        b = v[i + 1] if i + 1 < n else v[0]
        if a.y == b.y:
            if b.x > a.x:
                lower.append((b.x, a.y, i))
            else:
                upper.append((a.x, a.y, i))
    upper.reverse()
    rects = []
    append = rects.append
    new = tuple.__new__
    i = j = 0
    x = v[0].x
    nl = len(lower)
    k = 1
    while i < nl:
        lx, ly, li = lower[i]
        ux, uy, ui = upper[j]
        end = lx if lx < ux else ux
        append(new(Rect, (k, x, end, ly, uy, ui, li)))
        k += 1
        if lx == end:
            i += 1
        if ux == end:
            j += 1
        x = end
    return rects


def sweep_rects(p: OrthoPolygon) -> tuple[list[Rect], list[tuple[int, int]]]:
    """General vertical decomposition via the slab index.

    Returns rects (indexed by ``(x_left, bottom)``) and the dual-graph edges
    as pairs of 1-based indices.  Cells of adjacent slabs with identical
    vertical extent always belong to the same rectangle: a cut between them
    would need a polygon vertex on a horizontal edge interior.
    """
    idx = p.index
    xs = idx.xs
    building: list[list] = []  # [x_left, x_right, bottom, top, top_edge, bottom_edge]
    prev_open: dict[tuple, int] = {}
    prev_cells: list[tuple] = []  # (bottom, top, builder id)
    links = set()
    for j, cell in enumerate(idx.cells):
        cur_open = {}
        cur_cells = []
        for k in range(0, len(cell), 2):
            (b, be), (t, te) = cell[k], cell[k + 1]
            key = (b, t, be, te)
            rid = prev_open.get(key)
            if rid is None:
                rid = len(building)
                building.append([xs[j], xs[j + 1], b, t, te, be])
            else:
                building[rid][1] = xs[j + 1]
            cur_open[key] = rid
            cur_cells.append((b, t, rid))
        a = c = 0
        while a < len(prev_cells) and c < len(cur_cells):
            lb, lt, lr = prev_cells[a]
            rb, rt, rr = cur_cells[c]
            if min(lt, rt) > max(lb, rb) and lr != rr:
                links.add((lr, rr))
            if lt < rt:
                a += 1
            else:
                c += 1
        prev_open, prev_cells = cur_open, cur_cells

    order = sorted(range(len(building)), key=lambda r: (building[r][0], building[r][2]))
    new_index = {old: k + 1 for k, old in enumerate(order)}
    rects = [Rect(k + 1, *building[old]) for k, old in enumerate(order)]
    edges = sorted(tuple(sorted((new_index[a], new_index[b]))) for a, b in links)
    return rects, edges


def edge_groups(seq) -> tuple[tuple[EdgeGroup, ...], tuple[EdgeGroup, ...]]:
    """Group consecutive rects of a sequence sharing a top (bottom) polygon edge.

    Accepts a ``Decomposition`` (returns its stored groups) or a rect sequence
    (returns unflagged groups).
    """
    if isinstance(seq, Decomposition):
        return seq.eu, seq.el
    return tuple(_groups(seq, "top")), tuple(_groups(seq, "bottom"))


def _groups(seq: Sequence[Rect], side: str) -> list[EdgeGroup]:
    top = side == "top"
    e_col, y_col = (5, 4) if top else (6, 3)
    raw = []
    cur = None
    for pos, r in enumerate(seq, 1):
        e = r[e_col]
        if e != cur:
            raw.append([e, r[y_col], pos, pos])
            cur = e
        else:
            raw[-1][3] = pos
    new = tuple.__new__
    return [new(EdgeGroup, (e, y, a, b, side, False)) for e, y, a, b in raw]


def classify_extrema(groups: Sequence[EdgeGroup]) -> tuple[EdgeGroup, ...]:
    """Flag local maxima (top groups) or minima (bottom groups).

    Missing neighbours are padded with -inf for tops and +inf for bottoms, so
    the first and last group can be extremal.
    """
    if not groups:
        return ()
    ys = [g.y for g in groups]
    if groups[0].side == "top":
        pad = float("-inf")
        ys = [pad] + ys + [pad]
        flags = [ys[i] >= ys[i - 1] and ys[i] >= ys[i + 1] for i in range(1, len(ys) - 1)]
    else:
        pad = float("inf")
        ys = [pad] + ys + [pad]
        flags = [ys[i] <= ys[i - 1] and ys[i] <= ys[i + 1] for i in range(1, len(ys) - 1)]
    new = tuple.__new__
    return tuple(new(EdgeGroup, (*g[:5], f)) for g, f in zip(groups, flags))


def decomposition_from_sequence(
    rects: Sequence[Rect], kind: DualClass | None = None, sequence: Sequence[Rect] | None = None
) -> Decomposition:
    seq = rects if sequence is None else sequence
    return Decomposition(
        rects=tuple(rects),
        eu=classify_extrema(_groups(seq, "top")),
        el=classify_extrema(_groups(seq, "bottom")),
        kind=Monotone() if kind is None else kind,
    )


def _classify(rects: list[Rect], links: list[tuple[int, int]]) -> DualClass:
    m = len(rects)
    adj: dict[int, list[int]] = {r.index: [] for r in rects}
    for a, b in links:
        adj[a].append(b)
        adj[b].append(a)
    worst = max((len(v) for v in adj.values()), default=0)
    if worst >= 3:
        hub = next(k for k, v in adj.items() if len(v) >= 3)
        return Unsupported(f"rectangle {hub} has {len(adj[hub])} dual neighbours")
    if len(links) != m - 1:
        return Unsupported("dual graph is not a path")
    if m == 1:
        return PathPolygon((1,), frozenset())
    ends = [r for r in rects if len(adj[r.index]) == 1]
    start = min(ends, key=lambda r: (r.x_left, r.bottom)).index
    order = [start]
    prev = None
    cur = start
    while len(order) < m:
        nxt = next(k for k in adj[cur] if k != prev)
        order.append(nxt)
        prev, cur = cur, nxt
    reflex = set()
    for i in range(1, m - 1):
        r = rects[order[i] - 1]
        sides = {
            "right" if rects[nb - 1].x_left == r.x_right else "left"
            for nb in (order[i - 1], order[i + 1])
        }
        if len(sides) == 1:
            reflex.add(order[i])
    return PathPolygon(tuple(order), frozenset(reflex))


def dual_path_class(p: OrthoPolygon) -> DualClass:
    if is_x_monotone(p):
        return Monotone()
    rects, links = sweep_rects(p)
    return _classify(rects, links)


def vertical_decompose(p: OrthoPolygon) -> Decomposition:
    """Decompose ``p``; raises ``UnsupportedClass`` unless the dual is a path."""
    if is_x_monotone(p):
        return decomposition_from_sequence(monotone_rects(p))
    rects, links = sweep_rects(p)
    kind = _classify(rects, links)
    if isinstance(kind, Unsupported):
        raise UnsupportedClass(kind.reason)
    return decomposition_from_sequence(rects, kind, [rects[i - 1] for i in kind.order])
