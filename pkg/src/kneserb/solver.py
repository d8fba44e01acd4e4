"""Exact and closed-form values of the b-chromatic number, plus b-extraction."""

from __future__ import annotations

import time
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from .coloring import Coloring, ColorLabel, SyntheticLabel, label_key
from .combinatorics import binomial
from .kneser import KneserParams, chromatic_number, max_degree, standard_proper_coloring, vertex_array
from .verify import is_proper

DEFAULT_VERTEX_CAP = 30


class SearchRefused(ValueError):
    pass


def theorem_a_formula(m: int) -> int | None:
    """Closed form for the b-chromatic number of KG(m, 2).

    Returns None where the formula does not apply: m = 8, and m = 4, where it
    would give 4 although KG(4, 2) is a perfect matching (at most 2 colors).
    """
    if m < 4:
        raise ValueError(f"KG(m,2) needs m >= 4, got {m}")
    if m in (4, 8):
        return None
    if m % 2:
        return m * (m - 1) // 6
    return (m - 1) * (m - 2) // 6 + 3


def bounds(p: KneserParams) -> tuple[int, int]:
    """Certified (lower, upper) for the b-chromatic number of ``p``."""
    upper = max_degree(p) + 1
    if p.n >= 3:
        lower = 2 * binomial(p.m // 2, p.n)
    elif p.n == 2:
        formula = theorem_a_formula(p.m)
        lower = chromatic_number(p) if formula is None else formula
    else:
        lower = chromatic_number(p)
    return lower, upper


# -- b-extraction ---------------------------------------------------------------


def _neighbor_label_sets(vertices: np.ndarray, ids: np.ndarray, rows) -> dict[int, set[int]]:
    return {int(i): set(ids[(vertices & vertices[i]) == 0].tolist()) for i in rows}


def extraction_rounds(c: Coloring) -> Iterator[Coloring]:
    """Yield the coloring after each dissolved class; the last one is a b-coloring.

    Each round takes the smallest class without a dominating vertex (ties to
    the smallest label) and moves each of its vertices to the smallest label
    missing from its neighborhood. Such a label exists because the vertex is
    not dominating, and the class members are pairwise non-adjacent, so the
    moves do not interact and properness is kept.
    """
    ok, _ = is_proper(c)
    if not ok:
        raise ValueError("b-extraction needs a proper coloring")
    p = c.params
    vertices = vertex_array(p.m, p.n)
    labels: list[ColorLabel] = list(c.labels)
    while True:
        order = sorted(set(labels), key=label_key)
        lookup = {lab: k for k, lab in enumerate(order)}
        ids = np.array([lookup[x] for x in labels], dtype=np.int64)
        t = len(order)
        stuck = []
        for k in range(t):
            members = np.flatnonzero(ids == k)
            seen = _neighbor_label_sets(vertices, ids, members)
            if not any(len(seen[int(i)]) == t - 1 for i in members):
                stuck.append((len(members), k, members, seen))
        if not stuck:
            return
        _, k, members, seen = min(stuck, key=lambda item: (item[0], item[1]))
        for i in members:
            target = next(j for j in range(t) if j != k and j not in seen[int(i)])
            labels[int(i)] = order[target]
        yield Coloring(p, tuple(labels), construction=c.construction)


def extract_b_coloring(c: Coloring) -> Coloring:
    """A b-coloring obtained from the proper coloring ``c`` by dissolving classes.

    Returns ``c`` itself when it already is a b-coloring.
    """
    out = c
    for out in extraction_rounds(c):
        pass
    return out


# -- exact search ---------------------------------------------------------------


class _BudgetExhausted(Exception):
    pass


@dataclass
class SearchResult:
    """Outcome of :func:`exact_b_chromatic`. ``exact`` is None when the budget ran out."""

    exact: int | None
    lower: int
    upper: int
    witness: Coloring | None
    nodes: int
    elapsed: float

    @property
    def complete(self) -> bool:
        return self.exact is not None

    def to_json(self) -> dict:
        if self.exact is not None:
            return {"exact": self.exact, "nodes": self.nodes}
        return {"interval": [self.lower, self.upper], "nodes": self.nodes}


class _Search:
    """Backtracking for a b-coloring with exactly t colors.

    Vertices are colored in a fixed order, new colors are opened in index
    order, and a branch dies once some color can no longer obtain a
    dominating vertex.
    """

    def __init__(self, adj: list[list[int]], max_nodes: int | None, deadline: float | None):
        self.adj = adj
        self.size = len(adj)
        self.max_nodes = max_nodes
        self.deadline = deadline
        self.nodes = 0
        self.order = self._vertex_order()

    def _vertex_order(self) -> list[int]:
        # grow a prefix that keeps as many neighborhoods closed as possible
        order = [0]
        placed = {0}
        while len(order) < self.size:
            best = max(
                (v for v in range(self.size) if v not in placed),
                key=lambda v: (sum(u in placed for u in self.adj[v]), -v),
            )
            order.append(best)
            placed.add(best)
        return order

    def run(self, t: int) -> list[int] | None:
        self.t = t
        self.col = [-1] * self.size
        self.cnt = [[0] * t for _ in range(self.size)]
        self.distinct = [0] * self.size
        self.free = [len(a) for a in self.adj]
        if self._descend(0, 0):
            return list(self.col)
        return None

    def _assign(self, v: int, c: int) -> None:
        self.col[v] = c
        for u in self.adj[v]:
            row = self.cnt[u]
            row[c] += 1
            if row[c] == 1:
                self.distinct[u] += 1
            self.free[u] -= 1

    def _unassign(self, v: int, c: int) -> None:
        self.col[v] = -1
        for u in self.adj[v]:
            row = self.cnt[u]
            row[c] -= 1
            if row[c] == 0:
                self.distinct[u] -= 1
            self.free[u] += 1

    def _feasible(self, depth: int, used: int) -> bool:
        t = self.t
        remaining = self.size - depth
        if used + remaining < t:
            return False
        need = t - 1
        alive = [False] * used
        hopeful = 0
        for v in range(self.size):
            if self.distinct[v] + self.free[v] < need:
                continue
            c = self.col[v]
            if c >= 0:
                alive[c] = True
            else:
                hopeful += 1
                row = self.cnt[v]
                for k in range(used):
                    if row[k] == 0:
                        alive[k] = True
        if not all(alive):
            return False
        # every color still to be opened needs its own future dominating vertex
        return hopeful >= t - used

    def _descend(self, depth: int, used: int) -> bool:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _BudgetExhausted
        if self.deadline is not None and self.nodes % 1024 == 0 and time.monotonic() > self.deadline:
            raise _BudgetExhausted
        if depth == self.size:
            return used == self.t and all(
                any(self.col[v] == c and self.distinct[v] == self.t - 1 for v in range(self.size))
                for c in range(self.t)
            )
        v = self.order[depth]
        row = self.cnt[v]
        choices = [c for c in range(used) if row[c] == 0]
        if used < self.t:
            choices.append(used)
        for c in choices:
            self._assign(v, c)
            new_used = max(used, c + 1)
            if self._feasible(depth + 1, new_used) and self._descend(depth + 1, new_used):
                return True
            self._unassign(v, c)
        return False


def exact_b_chromatic(
    p: KneserParams,
    max_nodes: int | None = None,
    time_limit: float | None = None,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> SearchResult:
    """b-chromatic number of ``p`` by exhaustive search, trying t = Delta+1 downward.

    On budget exhaustion the result carries an interval: ``upper`` is the
    smallest t not yet refuted and ``lower`` the best certified count.
    """
    size = p.num_vertices
    if size > vertex_cap:
        raise SearchRefused(f"{p} has {size} vertices, above the search cap of {vertex_cap}")
    start = time.monotonic()
    deadline = None if time_limit is None else start + time_limit
    vertices = [int(v) for v in vertex_array(p.m, p.n)]
    adj = [[j for j, w in enumerate(vertices) if v & w == 0] for v in vertices]

    fallback = extract_b_coloring(standard_proper_coloring(p))
    certified = fallback.color_count
    search = _Search(adj, max_nodes, deadline)
    for t in range(max_degree(p) + 1, certified - 1, -1):
        try:
            found = search.run(t)
        except _BudgetExhausted:
            return SearchResult(None, certified, t, fallback, search.nodes, time.monotonic() - start)
        if found is not None:
            witness = Coloring(p, tuple(SyntheticLabel(c) for c in found), construction="search")
            return SearchResult(t, t, t, witness, search.nodes, time.monotonic() - start)
    # every t above the certificate was refuted
    return SearchResult(certified, certified, certified, fallback, search.nodes, time.monotonic() - start)
