"""Implicit Kneser graph KG(m, n): vertices are n-subsets of [m], edges join disjoint pairs."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .coloring import Coloring, SyntheticLabel
from .combinatorics import (
    MAX_GROUND,
    binomial,
    interval,
    iterate_subsets,
    rank,
    subsets_of,
    to_elements,
    unrank,
)


@dataclass(frozen=True)
class KneserParams:
    m: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")
        if self.m < 2 * self.n:
            raise ValueError(f"KG(m,n) needs m >= 2n, got m={self.m}, n={self.n}")
        if self.m > MAX_GROUND:
            raise ValueError(f"m={self.m} exceeds the {MAX_GROUND}-element ground set")

    @property
    def num_vertices(self) -> int:
        return binomial(self.m, self.n)

    @property
    def ground(self) -> int:
        return interval(0, self.m)

    def vertices(self) -> Iterator[int]:
        return iterate_subsets(self.m, self.n)

    def rank(self, vertex: int) -> int:
        return rank(vertex, self.n)

    def unrank(self, index: int) -> int:
        return unrank(index, self.m, self.n)

    def __str__(self) -> str:
        return f"KG({self.m},{self.n})"


def adjacent(a: int, b: int) -> bool:
    return a & b == 0


def neighbors(a: int, p: KneserParams) -> Iterator[int]:
    """n-subsets of the complement of ``a``, in colex order."""
    return subsets_of(p.ground & ~a, p.n)


def max_degree(p: KneserParams) -> int:
    # vertex-transitive, so every vertex has this degree
    return binomial(p.m - p.n, p.n)


def chromatic_number(p: KneserParams) -> int:
    return p.m - 2 * p.n + 2


@lru_cache(maxsize=32)
def vertex_array(m: int, n: int) -> np.ndarray:
    """All vertices of KG(m, n) as uint64 masks, position = colex rank."""
    out = np.fromiter(iterate_subsets(m, n), dtype=np.uint64, count=binomial(m, n))
    out.setflags(write=False)
    return out


@lru_cache(maxsize=32)
def _local_subsets(k: int, n: int) -> np.ndarray:
    rows = [to_elements(b) for b in iterate_subsets(k, n)]
    return np.array(rows, dtype=np.intp).reshape(len(rows), n)


@lru_cache(maxsize=8)
def _binomial_table(m: int, n: int) -> np.ndarray:
    return np.array([[binomial(a, j) for j in range(n + 1)] for a in range(m)], dtype=np.int64)


def neighbor_ranks(a: int, p: KneserParams) -> np.ndarray:
    """Colex ranks of all neighbors of ``a``, ascending."""
    complement = np.array(to_elements(p.ground & ~a), dtype=np.intp)
    elems = complement[_local_subsets(p.m - p.n, p.n)]
    table = _binomial_table(p.m, p.n)
    cols = np.arange(1, p.n + 1)
    return table[elems, cols].sum(axis=1)


def standard_proper_coloring(p: KneserParams) -> Coloring:
    """Proper coloring with m - 2n + 2 synthetic labels.

    Label i for vertices whose minimum is i (i <= m - 2n); the last label for
    vertices inside the top 2n - 1 elements, which pairwise intersect.
    """
    last = p.m - 2 * p.n + 1
    labels = []
    for v in p.vertices():
        low = (v & -v).bit_length() - 1
        labels.append(SyntheticLabel(min(low, last)))
    return Coloring(p, tuple(labels), construction="standard")
