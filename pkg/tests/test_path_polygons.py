import pytest

from owrp import GenSpec, UnsupportedClass, coverage, gen_path, is_x_monotone, validate
from owrp.decomposition import vertical_decompose
from owrp.geometry import contains_segment
from owrp.path_polygons import piece_polygon, route_path_polygon, split_at_reflex
from owrp.route import monotone_route
from shapes import ECOMB, POLY_A, POLY_B, SIDEU, ZIGZAG5


def pts(route):
    return [tuple(p) for p in route.vertices]


def reflex_runs(d):
    runs = 0
    prev = False
    for r in d.sequence:
        cur = r.index in d.kind.reflex
        runs += cur and not prev
        prev = cur
    return runs


def test_sideu_split():
    pd = split_at_reflex(vertical_decompose(validate(SIDEU)))
    assert [[(r.x_left, r.x_right, r.bottom, r.top) for r in p.rects] for p in pd.pieces] == [
        [(1, 3, 0, 1)],
        [(1, 3, 2, 3)],
    ]
    assert pd.reflex_rects == (1,)
    assert pd.shared_boundaries == {1: 1}


def test_monotone_is_one_piece():
    pd = split_at_reflex(vertical_decompose(validate(POLY_A)))
    assert len(pd.pieces) == 1 and pd.reflex_rects == ()


def test_zigzag_splits_into_two_pairs():
    pd = split_at_reflex(vertical_decompose(validate(ZIGZAG5)))
    assert [len(p.rects) for p in pd.pieces] == [2, 2]
    assert len(pd.reflex_rects) == 1
    assert list(pd.shared_boundaries.values()) == [2]


def test_sideu_route():
    p = validate(SIDEU)
    r = route_path_polygon(p)
    assert pts(r) == [(1, 1), (1, 3)]
    assert r.bends == 0
    assert coverage(p, r).covered


def test_monotone_input_delegates():
    p = validate(POLY_B)
    assert route_path_polygon(p) == monotone_route(p).route
    assert pts(route_path_polygon(p)) == [(1, 2), (2, 2), (2, 3)]


def test_unsupported():
    with pytest.raises(UnsupportedClass):
        route_path_polygon(validate(ECOMB))


def test_zigzag_route_covers():
    p = validate(ZIGZAG5)
    for trim in (True, False):
        assert coverage(p, route_path_polygon(p, trim)).covered


@pytest.mark.parametrize("seed", range(60))
def test_generated_path_polygons(seed):
    p = gen_path(GenSpec(rects=3 + seed % 25, max_height=2 + seed % 5, seed=seed))
    d = vertical_decompose(p)
    pd = split_at_reflex(d)
    assert len(pd.pieces) == reflex_runs(d) + 1
    for piece in pd.pieces:
        assert is_x_monotone(piece_polygon(piece))
    for trim in (True, False):
        r = route_path_polygon(p, trim)
        for a, b in r.segments():
            assert contains_segment(p, a, b)
        assert coverage(p, r).covered
