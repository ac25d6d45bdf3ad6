"""Bitmask combinatorics shared by every other module.

Vertices are labeled 1..n and vertex i occupies bit i of a Python int,
so bit 0 is never used.  A vertex set is just an int; two sets of the
same size compare in colexicographic order exactly as ints do, which is
why edges are stored and enumerated as ascending masks everywhere.

Subset ranks are colexicographic: the rank of {a_1 < ... < a_l} is
sum_i C(a_i - 1, i).  Ranks run 0 .. C(n, l) - 1 and do not depend on
n, so the rank of an edge is stable when the vertex universe grows.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Iterator


def binom(a: int, b: int) -> int:
    """C(a, b), extended to 0 when b < 0 or a < b (a may be negative)."""
    if b < 0 or a < b:
        return 0
    return comb(a, b)


def mask_of(vertices: Iterable[int]) -> int:
    """Pack vertex labels into a mask; labels must be positive ints."""
    m = 0
    for v in vertices:
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"vertex labels must be positive integers, got {v!r}")
        b = 1 << v
        if m & b:
            raise ValueError(f"repeated vertex {v}")
        m |= b
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    """Unpack a mask into ascending vertex labels."""
    if mask < 0 or mask & 1:
        raise ValueError(f"not a vertex mask: {mask!r}")
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def check_mask(mask: int, n: int) -> None:
    """Reject masks that touch bit 0 or any vertex above n."""
    if mask < 0 or mask & 1:
        raise ValueError(f"not a vertex mask: {mask!r}")
    if mask >> (n + 1):
        raise ValueError(f"mask uses a vertex above n={n}")


def rank_subset(mask: int, ell: int) -> int:
    """Colex rank of an ell-subset given as a mask."""
    if mask.bit_count() != ell:
        raise ValueError(f"mask has {mask.bit_count()} vertices, expected {ell}")
    r = 0
    i = 0
    while mask:
        b = mask & -mask
        i += 1
        r += binom(b.bit_length() - 2, i)
        mask ^= b
    return r


def unrank_subset(r: int, ell: int, n: int) -> int:
    """Inverse of rank_subset over the universe 1..n."""
    if ell < 0 or ell > n:
        raise ValueError(f"no {ell}-subsets of a {n}-set")
    if not 0 <= r < binom(n, ell):
        raise ValueError(f"rank {r} out of range for C({n},{ell})={binom(n, ell)}")
    mask = 0
    a = n
    for i in range(ell, 0, -1):
        while binom(a - 1, i) > r:
            a -= 1
        r -= binom(a - 1, i)
        mask |= 1 << a
        a -= 1
    return mask


def iter_subsets(n: int, ell: int) -> Iterator[int]:
    """All ell-subset masks of 1..n in colex (= ascending numeric) order.

    Gosper's hack on an n-bit word, shifted up one bit to keep bit 0 free.
    """
    if ell < 0 or ell > n:
        return
    if ell == 0:
        yield 0
        return
    v = (1 << ell) - 1
    limit = 1 << n
    while v < limit:
        yield v << 1
        c = v & -v
        r = v + c
        v = (((r ^ v) >> 2) // c) | r


def iter_sub_masks(mask: int, ell: int) -> Iterator[int]:
    """All ell-subset masks of the given mask, ascending."""
    verts = vertices_of(mask)
    if ell < 0 or ell > len(verts):
        return
    # reuse the colex walk over index positions, then map back to labels
    for pick in iter_subsets(len(verts), ell):
        sub = 0
        p = pick >> 1
        i = 0
        while p:
            if p & 1:
                sub |= 1 << verts[i]
            p >>= 1
            i += 1
        yield sub
