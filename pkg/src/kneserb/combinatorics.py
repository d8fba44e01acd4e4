"""Exact binomials and colex-ordered k-subsets packed into integer bitmasks.

A subset of ``{0, ..., m-1}`` is stored as an ``int`` whose bit ``i`` is set
iff ``i`` belongs to the subset. Among subsets of equal size, colexicographic
order coincides with numeric order of the masks, which is what makes the
Gosper successor and the rank formula below line up.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator

MAX_GROUND = 64
WORD_MAX = (1 << 64) - 1


def binomial(a: int, b: int) -> int:
    """Return C(a, b), or 0 when ``b > a``.

    Raises OverflowError if the value does not fit in an unsigned 64-bit word.
    """
    if a < 0 or b < 0:
        raise ValueError(f"binomial needs nonnegative arguments, got ({a}, {b})")
    if b > a:
        return 0
    value = math.comb(a, b)
    if value > WORD_MAX:
        raise OverflowError(f"C({a}, {b}) exceeds 64 bits")
    return value


def popcount(bits: int) -> int:
    return bin(bits).count("1")


def from_elements(elements: Iterable[int]) -> int:
    bits = 0
    for e in elements:
        if not 0 <= e < MAX_GROUND:
            raise ValueError(f"element {e} outside [0, {MAX_GROUND})")
        bits |= 1 << e
    return bits


def to_elements(bits: int) -> list[int]:
    """Sorted list of the elements of ``bits``."""
    out = []
    i = 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return out


def interval(lo: int, hi: int) -> int:
    """Mask of the half-open range ``[lo, hi)``."""
    if hi <= lo:
        return 0
    return ((1 << (hi - lo)) - 1) << lo


def rank(bits: int, n: int) -> int:
    """Colex rank of an n-subset: sum of C(a_j, j+1) over its sorted elements."""
    elements = to_elements(bits)
    if len(elements) != n:
        raise ValueError(f"subset has {len(elements)} elements, expected {n}")
    return sum(math.comb(a, j + 1) for j, a in enumerate(elements))


def unrank(index: int, m: int, n: int) -> int:
    total = binomial(m, n)
    if not 0 <= index < total:
        raise ValueError(f"rank {index} outside [0, C({m},{n})={total})")
    bits = 0
    c = m - 1
    for j in range(n, 0, -1):
        # largest c with C(c, j) <= index
        while math.comb(c, j) > index:
            c -= 1
        index -= math.comb(c, j)
        bits |= 1 << c
        c -= 1
    return bits


def next_subset(bits: int) -> int:
    """Gosper's hack: the next mask with the same popcount."""
    lowest = bits & -bits
    ripple = bits + lowest
    return ripple | (((bits ^ ripple) >> 2) // lowest)


def iterate_subsets(m: int, n: int) -> Iterator[int]:
    """All n-subsets of ``[m]`` in colex order."""
    if not 0 <= n <= m <= MAX_GROUND:
        raise ValueError(f"need 0 <= n <= m <= {MAX_GROUND}, got m={m}, n={n}")
    if n == 0:
        yield 0
        return
    bits = (1 << n) - 1
    limit = 1 << m
    while bits < limit:
        yield bits
        bits = next_subset(bits)


def subsets_of(mask: int, k: int) -> Iterator[int]:
    """All k-subsets of the set ``mask``, in colex order."""
    elements = to_elements(mask)
    for local in iterate_subsets(len(elements), k):
        yield from_elements(elements[i] for i in to_elements(local))
