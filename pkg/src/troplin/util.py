"""Bitmask helpers for subsets of {0, ..., n-1}."""

from itertools import combinations


def bits(mask):
    "Yield the set bits of mask in increasing order."
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(elems):
    m = 0
    for e in elems:
        m |= 1 << e
    return m


def elems(mask):
    return list(bits(mask))


def list1(mask):
    "Subset as a sorted 1-based element list (the JSON convention)."
    return [e + 1 for e in bits(mask)]


def ksubsets(n, k):
    "All k-subsets of {0..n-1} as bitmasks, ascending by integer value."
    if k < 0 or k > n:
        return []
    return sorted(mask_of(c) for c in combinations(range(n), k))


def submasks(mask, k):
    "All k-subsets of the set bits of mask, ascending by integer value."
    return sorted(mask_of(c) for c in combinations(elems(mask), k))
