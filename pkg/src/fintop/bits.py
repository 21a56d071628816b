"""Point sets as integer bit masks.

A point set over a universe of ``n`` points is an ``int`` whose bit ``i`` is
set when point ``i`` is a member.  Python ints are arbitrary precision, but
spaces cap ``n`` at 64 so every set fits one machine word.
"""

from __future__ import annotations

from typing import Iterable, Iterator

MAX_POINTS = 64

PointSet = int


def full(n: int) -> PointSet:
    return (1 << n) - 1


def bit(i: int) -> PointSet:
    return 1 << i


def members(mask: PointSet) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_indices(indices: Iterable[int]) -> PointSet:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def size(mask: PointSet) -> int:
    return mask.bit_count()


def is_subset(a: PointSet, b: PointSet) -> bool:
    return a & ~b == 0


def subsets(mask: PointSet) -> Iterator[PointSet]:
    """Every subset of ``mask``, starting from the empty set."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def family_key(mask: PointSet) -> tuple[int, int]:
    # canonical ordering of open families: by cardinality, then numeric value
    return (mask.bit_count(), mask)
