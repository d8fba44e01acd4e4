"""b-colorings of KG(m, n) with 2*C(floor(m/2), n) subset-valued colors (n >= 3).

The ground set is split into halves X = {0..r-1} and Y = {r..2r-1} with
r = floor(m/2), linked by the shift f(x) = r + x. On masks, f is ``<< r`` and
its inverse is ``>> r``. Every vertex lying inside one half is its own color;
the remaining vertices borrow the color of a nearby one-sided set.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .coloring import Coloring, ColorLabel, SubsetLabel, SyntheticLabel
from .combinatorics import binomial, interval, iterate_subsets, next_subset, popcount, to_elements, unrank
from .kneser import KneserParams, standard_proper_coloring


class ConstructionError(RuntimeError):
    """A vertex matched no rule, or more than one."""


class UnsupportedParams(ValueError):
    pass


@dataclass(frozen=True)
class HalfSplit:
    r: int

    @classmethod
    def for_ground(cls, m: int) -> HalfSplit:
        return cls(m // 2)

    @property
    def X(self) -> int:
        return interval(0, self.r)

    @property
    def Y(self) -> int:
        return interval(self.r, 2 * self.r)

    def f(self, mask: int) -> int:
        return mask << self.r

    def f_inv(self, mask: int) -> int:
        return mask >> self.r


def bijection_f(x: int, split: HalfSplit) -> int:
    if not 0 <= x < split.r:
        raise ValueError(f"{x} is not in X = [0, {split.r})")
    return split.r + x


def bijection_f_inv(y: int, split: HalfSplit) -> int:
    if not split.r <= y < 2 * split.r:
        raise ValueError(f"{y} is not in Y = [{split.r}, {2 * split.r})")
    return y - split.r


def g_map(a: int, r: int, s: int) -> int:
    """Grow an s-subset of [r] to 2s elements by walking forward from its minimum, mod r.

    Disjoint inputs have distinct minima, hence distinct images.
    """
    if s < 1 or r < 2 * s + 1:
        raise ValueError(f"g_map needs s >= 1 and r >= 2s+1, got r={r}, s={s}")
    if a >> r or popcount(a) != s:
        raise ValueError(f"{to_elements(a)} is not an {s}-subset of [{r}]")
    low = (a & -a).bit_length() - 1
    out = a
    step = 0
    while popcount(out) < 2 * s:
        step += 1
        out |= 1 << ((low + step) % r)
    return out


def pad_to_n(forced: int, side: int, n: int) -> int:
    """Smallest-index n-superset of ``forced`` inside ``side``."""
    if forced & ~side:
        raise ValueError(f"{to_elements(forced)} is not inside {to_elements(side)}")
    missing = n - popcount(forced)
    if missing < 0:
        raise ValueError(f"{to_elements(forced)} already has more than {n} elements")
    spare = to_elements(side & ~forced)
    if len(spare) < missing:
        raise ValueError(f"cannot pad {to_elements(forced)} to {n} elements inside {to_elements(side)}")
    out = forced
    for e in spare[:missing]:
        out |= 1 << e
    return out


# -- rule tables ---------------------------------------------------------------

Rule = tuple[str, Callable[[int], bool], Callable[[int], int]]


def _even_rules(m: int, n: int) -> list[Rule]:
    split = HalfSplit.for_ground(m)
    r, X, Y = split.r, split.X, split.Y
    s = n // 2

    def cx(a):
        return popcount(a & X)

    def cy(a):
        return popcount(a & Y)

    def to_y(a):
        return pad_to_n(split.f(a & X) | (a & Y), Y, n)

    def to_x(a):
        return pad_to_n((a & X) | split.f_inv(a & Y), X, n)

    rules: list[Rule] = [
        ("inside_x", lambda a: a & Y == 0, lambda a: a),
        ("inside_y", lambda a: a & X == 0, lambda a: a),
    ]
    if n % 2:
        rules += [
            ("x_heavy", lambda a: s + 1 <= cx(a) <= 2 * s, to_y),
            ("y_heavy", lambda a: s + 1 <= cy(a) <= 2 * s, to_x),
        ]
        return rules

    def mirror(a):
        return (a & X) == split.f_inv(a & Y)

    def tie_on_x(a):
        diff = (a & X) ^ split.f_inv(a & Y)
        return bool(diff & -diff & a)

    rules += [
        ("x_heavy", lambda a: s + 1 <= cx(a) < 2 * s, to_y),
        ("y_heavy", lambda a: s + 1 <= cy(a) < 2 * s, to_x),
        ("mirror", lambda a: cx(a) == s and mirror(a), lambda a: g_map(a & X, r, s)),
        ("tie_x", lambda a: cx(a) == s and not mirror(a) and tie_on_x(a), to_y),
        ("tie_y", lambda a: cx(a) == s and not mirror(a) and not tie_on_x(a), to_x),
    ]
    return rules


def _label_range(m: int, n: int, start: int, stop: int) -> tuple[list[int], Counter]:
    rules = _even_rules(m, n)
    census: Counter = Counter()
    out = []
    a = unrank(start, m, n) if start < stop else 0
    for _ in range(start, stop):
        hits = [rule for rule in rules if rule[1](a)]
        if len(hits) != 1:
            names = [h[0] for h in hits]
            raise ConstructionError(f"KG({m},{n}) vertex {to_elements(a)} matched rules {names}")
        name, _, label = hits[0]
        census[name] += 1
        out.append(label(a))
        a = next_subset(a)
    return out, census


def _run_rules(p: KneserParams, workers: int) -> tuple[list[int], Counter]:
    total = p.num_vertices
    if workers <= 1 or total < 4096:
        return _label_range(p.m, p.n, 0, total)
    step = -(-total // workers)
    bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    labels: list[int] = []
    census: Counter = Counter()
    with ProcessPoolExecutor(workers) as pool:
        futures = [pool.submit(_label_range, p.m, p.n, lo, hi) for lo, hi in bounds]
        for fut in futures:
            part, counts = fut.result()
            labels += part
            census += counts
    return labels, census


def _check_even(p: KneserParams, odd_n: bool) -> None:
    if p.m % 2:
        raise ValueError(f"{p}: m must be even here")
    if bool(p.n % 2) != odd_n:
        raise ValueError(f"{p}: n must be {'odd' if odd_n else 'even'} here")
    if p.m < 2 * p.n + 2:
        raise ValueError(f"{p}: needs m >= 2n + 2")


def rule_census(p: KneserParams) -> Counter:
    """How many vertices each labeling rule handled (even m >= 2n + 2 only)."""
    _check_even(p, odd_n=bool(p.n % 2))
    return _label_range(p.m, p.n, 0, p.num_vertices)[1]


def build_case1(p: KneserParams, workers: int = 1) -> Coloring:
    """Even m, odd n."""
    _check_even(p, odd_n=True)
    labels, _ = _run_rules(p, workers)
    return Coloring(p, tuple(SubsetLabel(b) for b in labels), construction="case1")


def build_case2(p: KneserParams, workers: int = 1) -> Coloring:
    """Even m, even n; balanced vertices go through :func:`g_map` or the tie-break."""
    _check_even(p, odd_n=False)
    labels, _ = _run_rules(p, workers)
    return Coloring(p, tuple(SubsetLabel(b) for b in labels), construction="case2")


def build_case3(p: KneserParams, workers: int = 1) -> Coloring:
    """Odd m: reuse the coloring of KG(m-1, n), and give every vertex holding m-1
    the fresh color {m-n, ..., m-1}."""
    if p.m % 2 == 0:
        raise ValueError(f"{p}: m must be odd here")
    if p.m < 2 * p.n + 2:
        raise ValueError(f"{p}: needs m >= 2n + 2")
    inner_params = KneserParams(p.m - 1, p.n)
    inner = build_case1(inner_params, workers) if p.n % 2 else build_case2(inner_params, workers)
    fresh = SubsetLabel(interval(p.m - p.n, p.m))
    # colex ranks of subsets of [m-1] come first, so the old coloring is a prefix
    tail = (fresh,) * binomial(p.m - 1, p.n - 1)
    return Coloring(p, inner.labels + tail, construction="case3")


def build_small_case(p: KneserParams) -> Coloring:
    """m = 2n: split each complementary pair by element 0. m = 2n + 1: extract a
    b-coloring from the standard 3-coloring."""
    if p.m == 2 * p.n:
        labels = tuple(SyntheticLabel(0 if v & 1 else 1) for v in iterate_subsets(p.m, p.n))
        return Coloring(p, labels, construction="small")
    if p.m == 2 * p.n + 1:
        from .solver import extract_b_coloring

        c = extract_b_coloring(standard_proper_coloring(p))
        return Coloring(p, c.labels, construction="small")
    raise ValueError(f"{p}: small case needs m in {{2n, 2n+1}}")


def build(p: KneserParams, workers: int = 1) -> Coloring:
    if p.n < 3:
        raise UnsupportedParams(f"{p}: the construction needs n >= 3")
    if p.m <= 2 * p.n + 1:
        return build_small_case(p)
    if p.m % 2:
        return build_case3(p, workers)
    if p.n % 2:
        return build_case1(p, workers)
    return build_case2(p, workers)


def expected_color_count(p: KneserParams) -> int:
    """Number of colors :func:`build` produces."""
    if p.m == 2 * p.n:
        return 2
    if p.m == 2 * p.n + 1:
        return 3
    return 2 * binomial(p.m // 2, p.n) + p.m % 2


def label_of(a: int, p: KneserParams) -> ColorLabel:
    """Color of a single vertex under :func:`build`, without building the rest."""
    return build(p)[a] if p.m <= 2 * p.n + 1 else _single(a, p)


def _single(a: int, p: KneserParams) -> ColorLabel:
    if p.m % 2:
        if a >> (p.m - 1) & 1:
            return SubsetLabel(interval(p.m - p.n, p.m))
        p = KneserParams(p.m - 1, p.n)
    hits = [rule for rule in _even_rules(p.m, p.n) if rule[1](a)]
    if len(hits) != 1:
        raise ConstructionError(f"{p} vertex {to_elements(a)} matched {[h[0] for h in hits]}")
    return SubsetLabel(hits[0][2](a))
