import random

import pytest

from kneserb.coloring import Coloring, SyntheticLabel
from kneserb.combinatorics import binomial
from kneserb.construction import build
from kneserb.kneser import KneserParams, chromatic_number, max_degree, standard_proper_coloring
from kneserb.solver import (
    SearchRefused,
    bounds,
    exact_b_chromatic,
    extract_b_coloring,
    extraction_rounds,
    theorem_a_formula,
)
from kneserb.verify import is_b_coloring, is_proper


@pytest.mark.parametrize("m,expected", [(5, 3), (6, 6), (7, 7), (9, 12), (10, 15), (11, 18), (12, 21)])
def test_theorem_a_values(m, expected):
    # odd: floor(m(m-1)/6); even: floor((m-1)(m-2)/6) + 3
    assert theorem_a_formula(m) == expected


def test_theorem_a_exclusions():
    assert theorem_a_formula(8) is None
    assert theorem_a_formula(4) is None
    with pytest.raises(ValueError):
        theorem_a_formula(3)


def test_bounds_examples():
    assert bounds(KneserParams(10, 3)) == (20, 36)
    assert bounds(KneserParams(6, 3)) == (2, 2)
    assert bounds(KneserParams(5, 2)) == (3, 4)
    assert bounds(KneserParams(8, 2)) == (chromatic_number(KneserParams(8, 2)), binomial(6, 2) + 1)
    assert bounds(KneserParams(7, 1)) == (7, 7)


def test_bounds_ordered_everywhere():
    for n in range(1, 7):
        for m in range(2 * n, 41):
            lo, hi = bounds(KneserParams(m, n))
            assert 1 <= lo <= hi


def test_extract_fixed_point():
    c = build(KneserParams(10, 3))
    assert extract_b_coloring(c) is c
    assert list(extraction_rounds(c)) == []


def test_extract_standard_kg73():
    c = extract_b_coloring(standard_proper_coloring(KneserParams(7, 3)))
    assert c.color_count == 3
    assert is_b_coloring(c).is_b


def test_extract_rejects_improper():
    p = KneserParams(5, 2)
    with pytest.raises(ValueError):
        extract_b_coloring(Coloring(p, (SyntheticLabel(0),) * 10))


def spread_coloring(p, seed):
    """A proper coloring with many more colors than needed."""
    rng = random.Random(seed)
    verts = list(p.vertices())
    col = {}
    for v in verts:
        taken = {col[u] for u in col if u & v == 0}
        col[v] = rng.choice([k for k in range(3 * len(verts)) if k not in taken])
    return Coloring(p, tuple(SyntheticLabel(col[v]) for v in verts))


@pytest.mark.parametrize("mn,seed", [((5, 2), 1), ((6, 2), 2), ((7, 3), 3), ((7, 2), 4), ((8, 3), 5)])
def test_extract_rounds_monotone_and_proper(mn, seed):
    p = KneserParams(*mn)
    start = spread_coloring(p, seed)
    counts = [start.color_count]
    for c in extraction_rounds(start):
        assert is_proper(c)[0]
        counts.append(c.color_count)
    assert all(b == a - 1 for a, b in zip(counts, counts[1:]))
    assert len(counts) - 1 <= start.color_count
    final = extract_b_coloring(start)
    report = is_b_coloring(final)
    assert report.is_b
    assert chromatic_number(p) <= final.color_count <= max_degree(p) + 1


def test_extract_is_deterministic():
    start = spread_coloring(KneserParams(7, 2), 11)
    assert extract_b_coloring(start).labels == extract_b_coloring(start).labels


@pytest.mark.parametrize("m,n,expected", [(4, 2, 2), (5, 2, 3), (6, 2, 6), (6, 3, 2), (4, 1, 4), (6, 1, 6)])
def test_exact_values(m, n, expected):
    p = KneserParams(m, n)
    result = exact_b_chromatic(p, time_limit=120)
    assert result.complete
    assert result.exact == expected
    assert is_b_coloring(result.witness).is_b
    assert result.witness.color_count == expected
    lo, hi = bounds(p)
    assert lo <= expected <= hi


def test_exact_agrees_with_formula():
    for m in (5, 6):
        assert exact_b_chromatic(KneserParams(m, 2), time_limit=120).exact == theorem_a_formula(m)


def test_build_never_beats_exact():
    for m, n in [(6, 3), (8, 4)]:
        p = KneserParams(m, n)
        assert build(p).color_count <= exact_b_chromatic(p, vertex_cap=70).exact


def test_exact_kg73_with_raised_cap():
    p = KneserParams(7, 3)
    result = exact_b_chromatic(p, vertex_cap=35, time_limit=120)
    assert result.complete
    assert build(p).color_count <= result.exact <= bounds(p)[1]
    assert is_b_coloring(result.witness).is_b


def test_exact_refuses_large():
    with pytest.raises(SearchRefused):
        exact_b_chromatic(KneserParams(7, 3))


def test_budget_gives_interval():
    result = exact_b_chromatic(KneserParams(6, 2), max_nodes=5)
    assert not result.complete
    assert result.lower <= 6 <= result.upper
    assert result.to_json()["interval"] == [result.lower, result.upper]
    assert is_b_coloring(result.witness).color_count == result.lower
