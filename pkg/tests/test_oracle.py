import random
from fractions import Fraction

import pytest

from owrp import (
    BudgetExceeded,
    GenSpec,
    OrthoRoute,
    PointOutside,
    RouteOutside,
    TooLarge,
    brute_align_min,
    brute_min_bend,
    coverage,
    gen_monotone,
    gen_path,
    kernel_rect,
    validate,
    visible,
)
from owrp.geometry import Point, contains_point, contains_segment
from owrp.oracle import sample_points
from owrp.route import monotone_route
from shapes import POLY_A, POLY_B, POLY_RECT, segment_inside

F = Fraction


def P(x, y):
    return Point(F(x), F(y))


def test_visible_examples():
    a = validate(POLY_A)
    assert visible((2, 1), (F("2.9"), F("2.9")), a)
    assert visible((F("0.5"), F("0.5")), (F("2.9"), F("2.9")), a)
    assert not visible((F("0.5"), F("0.9")), (F("2.9"), F("2.95")), a)


def test_visible_needs_points_inside():
    with pytest.raises(PointOutside):
        visible((0, 3), (1, 0), validate(POLY_A))


def test_visible_is_symmetric():
    rng = random.Random(8)
    for seed in range(30):
        p = gen_monotone(GenSpec(2 + seed, 5, seed)) if seed % 2 else gen_path(GenSpec(rects=4 + seed % 9, max_height=4, seed=seed))
        x0, y0, x1, y1 = p.bbox
        found = 0
        while found < 30:
            a = (F(rng.randint(4 * x0, 4 * x1), 4), F(rng.randint(4 * y0, 4 * y1), 4))
            b = (F(rng.randint(4 * x0, 4 * x1), 4), F(rng.randint(4 * y0, 4 * y1), 4))
            if contains_point(p, a) and contains_point(p, b):
                found += 1
                assert visible(a, b, p) == visible(b, a, p)


def test_coverage_examples():
    b = validate(POLY_B)
    assert coverage(b, OrthoRoute((P(1, 2), P(2, 2), P(2, 3))), 4).covered
    report = coverage(b, OrthoRoute((P("0.5", "0.5"),)), 4)
    assert not report.covered
    # samples in the right-hand rect below the line of sight over the x=2 step
    assert P("2.5", "3.5") in report.uncovered
    assert all(p.x <= 3 for p in report.uncovered)
    assert coverage(validate(POLY_RECT), OrthoRoute((P(2, 2),)), 4).covered


def test_coverage_rejects_route_outside():
    with pytest.raises(RouteOutside):
        coverage(validate(POLY_B), OrthoRoute((P(0, 0), P(0, 5))))


def test_coverage_needs_resolution_two():
    with pytest.raises(ValueError):
        coverage(validate(POLY_RECT), OrthoRoute((P(1, 1),)), 1)


def test_report_dict():
    report = coverage(validate(POLY_B), OrthoRoute((P("0.5", "0.5"),)), 4)
    d = report.to_dict(limit=3)
    assert d["covered"] is False and d["uncovered_count"] == len(report.uncovered)
    assert len(d["uncovered"]) == 3


@pytest.mark.parametrize("seed", range(12))
def test_point_route_verdict_matches_independent_visibility(seed):
    # for a point route the witness set is the point itself, so the report
    # must agree sample by sample with an exact sight-line test
    p = gen_monotone(GenSpec(2 + seed % 5, 4, seed)) if seed % 3 else gen_path(GenSpec(rects=4, max_height=3, seed=seed))
    rng = random.Random(seed)
    x0, y0, x1, y1 = p.bbox
    while True:
        q = P(F(rng.randint(2 * x0, 2 * x1), 2), F(rng.randint(2 * y0, 2 * y1), 2))
        if contains_point(p, q):
            break
    report = coverage(p, OrthoRoute((q,)), 2)
    scale = 8
    samples = [(F(x, scale), F(y, scale)) for x, y in sample_points(p, 2, scale)]
    verts = p.as_lists()
    expected = {s for s in samples if not segment_inside(verts, s, q)}
    assert {(u.x, u.y) for u in report.uncovered} == expected
    assert report.samples_total == len(samples)


def test_align_min_examples():
    assert brute_align_min([(0, 2)]) == 0
    assert brute_align_min([(0, 2), (3, 5)]) == 1
    assert brute_align_min([(0, 2), (5, 7), (3, 4)]) == 4


def test_align_min_too_large():
    with pytest.raises(TooLarge):
        brute_align_min([(2 * i, 2 * i + 1) for i in range(21)])


def test_kernel_examples():
    assert tuple(kernel_rect(validate(POLY_RECT))) == (0, 4, 0, 2)
    assert tuple(kernel_rect(validate(POLY_A))) == (2, 3, 0, 1)
    assert kernel_rect(validate(POLY_B)) is None


@pytest.mark.parametrize("seed", range(25))
def test_kernel_corners_cover(seed):
    p = gen_monotone(GenSpec(1 + seed % 6, 3, seed))
    k = kernel_rect(p)
    if k is None:
        return
    for corner in k.corners():
        for r in (2, 4, 8):
            assert coverage(p, OrthoRoute((corner,)), r).covered


@pytest.mark.parametrize("seed", range(15))
def test_extending_a_route_never_loses_samples(seed):
    p = gen_monotone(GenSpec(4 + seed, 6, seed))
    route = monotone_route(p).route
    before = set(coverage(p, route).uncovered)
    end = route.vertices[-1]
    horizontal_last = len(route.vertices) > 1 and route.vertices[-2].y == end.y
    x0, y0, x1, y1 = p.bbox
    for step in (F(1, 2), F(1), F(-1, 2), F(-1)):
        nxt = Point(end.x, end.y + step) if horizontal_last or route.degenerate else Point(end.x + step, end.y)
        if contains_segment(p, end, nxt):
            longer = OrthoRoute(route.vertices + (nxt,))
            assert set(coverage(p, longer).uncovered) <= before


@pytest.mark.parametrize("seed", range(15))
def test_doubling_resolution_never_hides_failures(seed):
    p = gen_monotone(GenSpec(3 + seed, 5, seed))
    rng = random.Random(seed)
    x0, y0, x1, y1 = p.bbox
    while True:
        q = P(rng.randint(x0, x1), rng.randint(y0, y1))
        if contains_point(p, q):
            break
    route = OrthoRoute((q,))
    coarse = coverage(p, route, 2)
    fine = coverage(p, route, 4)
    assert set(coarse.uncovered) <= set(fine.uncovered)
    if not coarse.covered:
        assert not fine.covered


def test_sample_sets_nest():
    p = validate(POLY_B)
    coarse = {(F(x, 8), F(y, 8)) for x, y in sample_points(p, 2, 8)}
    fine = {(F(x, 16), F(y, 16)) for x, y in sample_points(p, 4, 16)}
    assert coarse <= fine


def test_min_bend_examples():
    r = brute_min_bend(validate(POLY_RECT))
    assert r.bends == 0 and r.route.degenerate
    a = validate(POLY_A)
    r = brute_min_bend(a)
    assert r.bends == 0 and r.route.degenerate
    k = kernel_rect(a)
    q = r.route.vertices[0]
    assert k.x_left <= q.x <= k.x_right and k.bottom <= q.y <= k.top
    b = validate(POLY_B)
    r = brute_min_bend(b)
    assert r.bends == 0 and not r.route.degenerate
    assert coverage(b, r.route).covered
    assert coverage(b, OrthoRoute((P("1.5", 0), P("1.5", 5)))).covered


def test_min_bend_budget():
    with pytest.raises(BudgetExceeded):
        brute_min_bend(validate(POLY_B), budget=3)
    with pytest.raises(ValueError):
        brute_min_bend(validate(POLY_B), max_bends=3)
