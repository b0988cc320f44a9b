"""Hand-built polygons shared by the test modules, plus small independent checkers."""
from fractions import Fraction

POLY_RECT = [(0, 0), (4, 0), (4, 2), (0, 2)]
POLY_A = [(0, 0), (3, 0), (3, 3), (2, 3), (2, 2), (1, 2), (1, 1), (0, 1)]
POLY_B = [(0, 0), (2, 0), (2, 3), (3, 3), (3, 5), (1, 5), (1, 2), (0, 2)]
SIDEU = [(0, 0), (3, 0), (3, 1), (1, 1), (1, 2), (3, 2), (3, 3), (0, 3)]
# spine [0,1]x[0,5] with teeth [1,3]x[0,1], [1,3]x[2,3], [1,3]x[4,5]
ECOMB = [(0, 0), (3, 0), (3, 1), (1, 1), (1, 2), (3, 2), (3, 3), (1, 3), (1, 4), (3, 4), (3, 5), (0, 5)]
# five rects along a zigzag with a single fold rect in the middle
ZIGZAG5 = [(0, 0), (3, 0), (3, 5), (0, 5), (0, 4), (1, 4), (1, 3), (2, 3), (2, 1), (1, 1), (1, 2), (0, 2)]


def on_boundary(vertices, x, y) -> bool:
    n = len(vertices)
    for i in range(n):
        (ax, ay), (bx, by) = vertices[i], vertices[(i + 1) % n]
        if ax == bx == x and min(ay, by) <= y <= max(ay, by):
            return True
        if ay == by == y and min(ax, bx) <= x <= max(ax, bx):
            return True
    return False


def inside(vertices, x, y) -> bool:
    """Closed-region membership by ray casting to the right."""
    if on_boundary(vertices, x, y):
        return True
    n = len(vertices)
    hits = 0
    for i in range(n):
        (ax, ay), (bx, by) = vertices[i], vertices[(i + 1) % n]
        if ax == bx and ax > x and min(ay, by) <= y < max(ay, by):
            hits += 1
    return hits % 2 == 1


def segment_inside(vertices, p, q) -> bool:
    """Exact segment containment: cut pq at every edge-coordinate line and
    test the endpoints plus each open piece's midpoint."""
    px, py = map(Fraction, p)
    qx, qy = map(Fraction, q)
    ts = {Fraction(0), Fraction(1)}
    for x in {v[0] for v in vertices}:
        if px != qx:
            t = (x - px) / (qx - px)
            if 0 < t < 1:
                ts.add(t)
    for y in {v[1] for v in vertices}:
        if py != qy:
            t = (y - py) / (qy - py)
            if 0 < t < 1:
                ts.add(t)
    ts = sorted(ts)
    probes = ts + [(a + b) / 2 for a, b in zip(ts, ts[1:])]
    return all(inside(vertices, px + t * (qx - px), py + t * (qy - py)) for t in probes)


def mirror_y(vertices):
    return [(x, -y) for x, y in vertices]


def mirror_x(vertices):
    return [(-x, y) for x, y in vertices]


def shift(vertices, dx, dy):
    return [(x + dx, y + dy) for x, y in vertices]
