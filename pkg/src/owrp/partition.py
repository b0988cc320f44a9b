"""Greedy split of a monotone rect sequence into balanced sub-polygons."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .decomposition import Decomposition, Rect


class BalancedSubPolygon(NamedTuple):
    first: int  # 1-based rect positions, inclusive
    last: int
    M: int  # lowest top in the range
    m_low: int  # highest bottom in the range
    x_left: int
    x_right: int

    @property
    def corridor(self) -> tuple[int, int]:
        return self.m_low, self.M


@dataclass(frozen=True)
class Partition:
    subs: tuple[BalancedSubPolygon, ...]

    @property
    def k(self) -> int:
        return len(self.subs)

    def corridors(self) -> list[tuple[int, int]]:
        return [s.corridor for s in self.subs]


ABOVE = "above"
BELOW = "below"


def partition_balanced(d: Decomposition | Sequence[Rect]) -> Partition:
    """Scan rects left to right, opening a new sub-polygon whenever adding
    the next rect would leave no horizontal line through every rect so far
    (its bottom above the lowest top, or its top below the highest bottom).
    Ties do not split.
    """
    rects = d.sequence if isinstance(d, Decomposition) else d
    subs = []
    first = 0
    min_u = rects[0].top
    max_l = rects[0].bottom
    for i, r in enumerate(rects):
        if r.bottom > min_u or r.top < max_l:
            subs.append(
                BalancedSubPolygon(first + 1, i, min_u, max_l, rects[first].x_left, rects[i - 1].x_right)
            )
            first = i
            min_u, max_l = r.top, r.bottom
        if r.top < min_u:
            min_u = r.top
        if r.bottom > max_l:
            max_l = r.bottom
    subs.append(
        BalancedSubPolygon(first + 1, len(rects), min_u, max_l, rects[first].x_left, rects[-1].x_right)
    )
    return Partition(tuple(subs))


def relation(partition: Partition | Sequence[tuple[int, int]], i: int) -> str:
    """Position of sub-polygon ``i+1`` relative to sub-polygon ``i`` (1-based)."""
    corridors = partition.corridors() if isinstance(partition, Partition) else partition
    (lo, hi), (nlo, nhi) = corridors[i - 1], corridors[i]
    if nlo > hi:
        return ABOVE
    if nhi < lo:
        return BELOW
    raise ValueError(f"corridors {i} and {i + 1} overlap")
