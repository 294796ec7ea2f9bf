"""Bitmask helpers. A subset of an indexed ground set is a Python int."""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def members(mask: int) -> Iterator[int]:
    """Yield set bit positions in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def full(n: int) -> int:
    return (1 << n) - 1


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` in increasing numeric order, including 0."""
    bits = list(members(mask))
    for k in range(1 << len(bits)):
        yield mask_of(bits[i] for i in members(k))


def set_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Canonical sort key: by size, then by sorted member positions."""
    return (popcount(mask), tuple(members(mask)))
