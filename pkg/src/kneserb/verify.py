"""Independent certificate checks for colorings of KG(m, n).

Adjacency is recomputed here from bit intersections; nothing is taken from
the way a coloring was built.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .coloring import Coloring, ColorLabel, label_key, label_to_json
from .combinatorics import binomial, to_elements
from .kneser import max_degree, neighbor_ranks, vertex_array

DEFAULT_MAX_WITNESSES = 16


@dataclass
class ClassReport:
    label: ColorLabel
    size: int
    dominating_witnesses: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "label": label_to_json(self.label),
            "size": self.size,
            "dominating_witnesses": [to_elements(w) for w in self.dominating_witnesses],
        }


@dataclass
class VerificationReport:
    m: int
    n: int
    proper: bool
    counterexample: tuple[int, int] | None
    classes: list[ClassReport]
    color_count: int
    bound_lower: int
    bound_upper: int
    is_b: bool

    @property
    def classes_without_witness(self) -> list[ColorLabel]:
        return [c.label for c in self.classes if not c.dominating_witnesses]

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "proper": self.proper,
            "counterexample": None if self.counterexample is None else [to_elements(v) for v in self.counterexample],
            "color_count": self.color_count,
            "bound_lower": self.bound_lower,
            "bound_upper": self.bound_upper,
            "is_b": self.is_b,
            "classes": [c.to_json() for c in self.classes],
        }


class _Indexed:
    """Coloring as parallel arrays: vertex masks and dense label ids."""

    def __init__(self, c: Coloring):
        self.coloring = c
        self.params = c.params
        self.vertices = vertex_array(c.params.m, c.params.n)
        self.labels = c.distinct_labels()
        lookup = {label: i for i, label in enumerate(self.labels)}
        self.ids = np.fromiter((lookup[x] for x in c.labels), dtype=np.int64, count=len(c.labels))
        order = np.argsort(self.ids, kind="stable")
        splits = np.cumsum(np.bincount(self.ids, minlength=len(self.labels)))[:-1]
        self.members = np.split(order, splits)

    def is_dominating(self, i: int) -> bool:
        t = len(self.labels)
        seen = np.bincount(self.ids[(self.vertices & self.vertices[i]) == 0], minlength=t)
        seen[self.ids[i]] = 0
        return int(np.count_nonzero(seen)) == t - 1

    def witnesses(self, k: int, limit: int | None) -> list[int]:
        found = []
        for i in self.members[k]:
            if self.is_dominating(int(i)):
                found.append(int(i))
                if limit is not None and len(found) >= limit:
                    break
        return found


def _proper_by_classes(ix: _Indexed) -> tuple[int, int] | None:
    # a class is independent iff its members pairwise intersect
    best = None
    for idx in ix.members:
        vs = ix.vertices[idx]
        for row in range(len(idx)):
            hit = np.flatnonzero((vs[row + 1:] & vs[row]) == 0)
            if hit.size:
                pair = (int(idx[row]), int(idx[row + 1 + hit[0]]))
                if best is None or pair < best:
                    best = pair
                break
    return best


def _proper_by_neighbors(ix: _Indexed) -> tuple[int, int] | None:
    p = ix.params
    for i, v in enumerate(ix.vertices):
        nb = neighbor_ranks(int(v), p)
        nb = nb[nb > i]
        clash = nb[ix.ids[nb] == ix.ids[i]]
        if clash.size:
            return (i, int(clash[0]))
    return None


def is_proper(c: Coloring, method: str = "auto") -> tuple[bool, tuple[int, int] | None]:
    """Check that no two disjoint vertices share a label.

    Returns ``(ok, pair)`` where ``pair`` is the offending vertex pair (as masks)
    with the smallest ranks, or ``None``. ``method`` is ``"classes"`` (pairwise
    inside each class), ``"neighbors"`` (scan every neighborhood) or ``"auto"``,
    which picks whichever touches fewer pairs.
    """
    return _check_proper(_Indexed(c), method)


def _check_proper(ix: _Indexed, method: str = "auto") -> tuple[bool, tuple[int, int] | None]:
    p = ix.params
    if method == "auto":
        class_cost = sum(len(idx) ** 2 for idx in ix.members) // 2
        scan_cost = p.num_vertices * max_degree(p) // 2
        method = "classes" if class_cost <= scan_cost else "neighbors"
    if method == "classes":
        pair = _proper_by_classes(ix)
    elif method == "neighbors":
        pair = _proper_by_neighbors(ix)
    else:
        raise ValueError(f"unknown method {method!r}")
    if pair is None:
        return True, None
    return False, (int(ix.vertices[pair[0]]), int(ix.vertices[pair[1]]))


def dominating_vertices(c: Coloring, label: ColorLabel, limit: int | None = None) -> list[int]:
    """Vertices of ``label``'s class with a neighbor in every other class, in rank order."""
    ix = _Indexed(c)
    try:
        k = ix.labels.index(label)
    except ValueError:
        raise ValueError(f"label {label!r} does not occur in the coloring") from None
    return [int(ix.vertices[i]) for i in ix.witnesses(k, limit)]


def is_b_coloring(c: Coloring, max_witnesses: int | None = DEFAULT_MAX_WITNESSES, workers: int = 1) -> VerificationReport:
    p = c.params
    ix = _Indexed(c)
    proper, pair = _check_proper(ix)
    ks = range(len(ix.labels))
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            found = list(pool.map(lambda k: ix.witnesses(k, max_witnesses), ks))
    else:
        found = [ix.witnesses(k, max_witnesses) for k in ks]
    classes = [
        ClassReport(label, len(ix.members[k]), [int(ix.vertices[i]) for i in found[k]])
        for k, label in enumerate(ix.labels)
    ]
    return VerificationReport(
        m=p.m,
        n=p.n,
        proper=proper,
        counterexample=pair,
        classes=sorted(classes, key=lambda cr: label_key(cr.label)),
        color_count=len(ix.labels),
        bound_lower=2 * binomial(p.m // 2, p.n),
        bound_upper=max_degree(p) + 1,
        is_b=proper and all(cr.dominating_witnesses for cr in classes),
    )
