"""Exit criteria for the package; one PASS/FAIL line per criterion in the summary."""

import itertools
import math
import time

import pytest

from kneserb.cli import main
from kneserb.coloring import SubsetLabel
from kneserb.combinatorics import binomial, interval, iterate_subsets, popcount
from kneserb.construction import build, g_map
from kneserb.kneser import KneserParams, chromatic_number, standard_proper_coloring
from kneserb.solver import bounds, exact_b_chromatic, theorem_a_formula
from kneserb.verify import is_b_coloring, is_proper

VERTEX_LIMIT = 25_000


def grid(parity):
    out = []
    for n in (3, 4, 5):
        m = 2 * n + 2 + parity
        while binomial(m, n) <= VERTEX_LIMIT:
            out.append((m, n))
            m += 2
    return out


EVEN = grid(0)
ODD = grid(1)
SMALL = [(2 * n, n) for n in (3, 4, 5)] + [(2 * n + 1, n) for n in (3, 4)]


def test_grids_cover_the_listed_examples():
    assert {(m, 3) for m in range(8, 25, 2)} <= set(EVEN)
    assert {(m, 4) for m in range(10, 19, 2)} <= set(EVEN)
    assert {(12, 5), (14, 5)} <= set(EVEN)
    assert all(binomial(m, n) <= VERTEX_LIMIT < binomial(m + 2, n) or (m + 2, n) in EVEN + ODD for m, n in EVEN + ODD)


def test_1_even_m(acceptance_log):
    start = time.perf_counter()
    bad = []
    for m, n in EVEN:
        c = build(KneserParams(m, n))
        report = is_b_coloring(c)
        if not (report.is_b and report.color_count == 2 * binomial(m // 2, n)):
            bad.append((m, n, report.color_count, report.is_b))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 120
    acceptance_log(1, ok, f"{len(EVEN)} even instances, failures={bad}, {elapsed:.1f}s (limit 120s)")
    assert ok


def test_2_odd_m(acceptance_log):
    bad = []
    for m, n in ODD:
        c = build(KneserParams(m, n))
        report = is_b_coloring(c)
        fresh = SubsetLabel(interval(m - n, m))
        fresh_class = next(cr for cr in report.classes if cr.label == fresh)
        if not (report.is_b and report.color_count == 2 * binomial(m // 2, n) + 1 and fresh_class.dominating_witnesses):
            bad.append((m, n, report.color_count, report.is_b))
    acceptance_log(2, not bad, f"{len(ODD)} odd instances, failures={bad}")
    assert not bad


def test_3_small_cases(acceptance_log):
    bad = []
    for m, n in SMALL:
        report = is_b_coloring(build(KneserParams(m, n)))
        want = 2 if m == 2 * n else 3
        if not (report.is_b and report.color_count == want):
            bad.append((m, n, report.color_count, report.is_b))
    acceptance_log(3, not bad, f"{SMALL}, failures={bad}")
    assert not bad


def test_4_lemma_exhaustive(acceptance_log):
    start = time.perf_counter()
    violations = 0
    checked_pairs = 0
    for s in (1, 2, 3, 4):
        for r in range(2 * s + 1, 13):
            subsets = list(iterate_subsets(r, s))
            image = {a: g_map(a, r, s) for a in subsets}
            for a in subsets:
                g = image[a]
                if not (a & g == a and g != a and popcount(g) == 2 * s and g >> r == 0):
                    violations += 1
            for a, b in itertools.combinations(subsets, 2):
                if a & b == 0:
                    checked_pairs += 1
                    violations += image[a] == image[b]
    elapsed = time.perf_counter() - start
    ok = violations == 0 and elapsed < 30
    acceptance_log(4, ok, f"{checked_pairs} disjoint pairs, {violations} violations, {elapsed:.1f}s (limit 30s)")
    assert ok


def test_5_theorem_a_vs_search(acceptance_log):
    five = exact_b_chromatic(KneserParams(5, 2), time_limit=10)
    ok5 = five.complete and five.exact == 3 == theorem_a_formula(5) and five.elapsed < 10
    six = exact_b_chromatic(KneserParams(6, 2), time_limit=300)
    if six.complete:
        ok6 = six.exact == 6 == theorem_a_formula(6)
        note = f"KG(6,2) exact={six.exact}"
    else:
        ok6 = six.lower <= 6 <= six.upper
        note = f"KG(6,2) interval-pass [{six.lower},{six.upper}]"
    acceptance_log(5, ok5 and ok6, f"KG(5,2) exact={five.exact} in {five.elapsed:.2f}s; {note} in {six.elapsed:.2f}s")
    assert ok5 and ok6


def test_6_bound_window(acceptance_log):
    bad = []
    for m, n in EVEN + ODD + SMALL:
        if n not in (3, 4):
            continue
        lower, upper = bounds(KneserParams(m, n))
        if lower > upper:
            bad.append((m, n, "lower>upper"))
        if m >= 4 * n:
            floor_ = m**n / (2**n * math.factorial(n) * 2)
            ceiling = m**n / (2 ** (n - 1) * math.factorial(n))
            if not floor_ <= lower <= ceiling:
                bad.append((m, n, lower, floor_, ceiling))
    acceptance_log(6, not bad, f"failures={bad}")
    assert not bad


def test_7_standard_coloring(acceptance_log):
    bad = []
    for m, n in EVEN:
        p = KneserParams(m, n)
        c = standard_proper_coloring(p)
        if c.color_count != chromatic_number(p) or not is_proper(c)[0]:
            bad.append((m, n))
    acceptance_log(7, not bad, f"{len(EVEN)} instances, failures={bad}")
    assert not bad


def test_8_determinism_and_round_trip(acceptance_log, tmp_path, capsys):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    main(["color", "12", "4", "-o", str(a)])
    main(["color", "12", "4", "-o", str(b)])
    identical = a.read_bytes() == b.read_bytes()
    failures = []
    for m, n in EVEN + ODD + SMALL:
        path = tmp_path / f"kg_{m}_{n}.jsonl"
        code = main(["color", str(m), str(n), "-o", str(path)])
        code = code or main(["verify", "--max-witnesses", "1", str(path)])
        capsys.readouterr()
        if code != 0:
            failures.append((m, n, code))
        path.unlink()
    ok = identical and not failures
    acceptance_log(8, ok, f"byte-identical={identical}, round-trip failures={failures}")
    assert ok
