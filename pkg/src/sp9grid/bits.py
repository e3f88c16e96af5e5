"""Helpers for vertex sets stored as small integer bitmasks."""

from typing import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> Iterator[int]:
    """Yield set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest(mask: int, k: int) -> int:
    """Mask of the ``k`` lowest set bits of ``mask`` (fewer if it is smaller)."""
    out = 0
    while mask and k:
        low = mask & -mask
        out |= low
        mask ^= low
        k -= 1
    return out


def first(mask: int) -> int:
    if not mask:
        raise ValueError("empty set has no smallest element")
    return (mask & -mask).bit_length() - 1
