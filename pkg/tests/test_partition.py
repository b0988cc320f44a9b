import pytest

from owrp import GenSpec, gen_monotone, validate
from owrp.decomposition import vertical_decompose
from owrp.partition import ABOVE, BELOW, partition_balanced, relation
from shapes import POLY_A, POLY_B, POLY_RECT, mirror_y, shift


def parts(raw):
    return partition_balanced(vertical_decompose(validate(raw)))


def test_examples():
    a = parts(POLY_A)
    assert a.k == 1 and a.corridors() == [(0, 1)] and (a.subs[0].first, a.subs[0].last) == (1, 3)
    b = parts(POLY_B)
    assert b.k == 2
    assert [(s.first, s.last, s.m_low, s.M) for s in b.subs] == [(1, 2, 0, 2), (3, 3, 3, 5)]
    assert [(s.x_left, s.x_right) for s in b.subs] == [(0, 2), (2, 3)]
    r = parts(POLY_RECT)
    assert r.k == 1 and r.corridors() == [(0, 2)]


def test_relation_examples():
    assert relation(parts(POLY_B), 1) == ABOVE
    assert relation([(0, 2), (5, 7), (3, 4)], 2) == BELOW
    assert relation(parts(mirror_y(POLY_B)), 1) == BELOW


def test_relation_rejects_overlap():
    with pytest.raises(ValueError):
        relation([(0, 3), (2, 5)], 1)


def test_ties_do_not_split():
    # second rect's bottom equals the first rect's top: still balanced
    p = validate([(0, 0), (1, 0), (1, 2), (2, 2), (2, 4), (0, 4)])
    assert partition_balanced(vertical_decompose(p)).k == 1


def _balanced(rects):
    return min(r.top for r in rects) >= max(r.bottom for r in rects)


@pytest.mark.parametrize("seed", range(80))
def test_partition_invariants(seed):
    d = vertical_decompose(gen_monotone(GenSpec(1 + seed * 2, 2 + seed % 9, seed)))
    part = partition_balanced(d)
    rects = d.sequence
    assert part.subs[0].first == 1 and part.subs[-1].last == d.m
    for s, nxt in zip(part.subs, part.subs[1:]):
        assert nxt.first == s.last + 1
        # maximal: adding the next rect breaks balance
        assert not _balanced(rects[s.first - 1 : s.last + 1])
        assert s.M < nxt.m_low or s.m_low > nxt.M
        assert s.x_right == nxt.x_left
    for s in part.subs:
        block = rects[s.first - 1 : s.last]
        assert _balanced(block)
        assert s.M == min(r.top for r in block) and s.m_low == max(r.bottom for r in block)
        for y in (s.M, s.m_low):
            assert all(r.bottom <= y <= r.top for r in block)


@pytest.mark.parametrize("seed", range(20))
def test_translation_and_mirror(seed):
    raw = gen_monotone(GenSpec(5 + seed, 7, seed)).as_lists()
    base = parts(raw)
    moved = parts(shift(raw, -4, 9))
    assert [(s.first, s.last) for s in moved.subs] == [(s.first, s.last) for s in base.subs]
    assert moved.corridors() == [(lo + 9, hi + 9) for lo, hi in base.corridors()]
    assert parts(mirror_y(raw)).k == base.k
