"""
Which vertices certify domination?
==================================

For even m and even n, the one-sided sets dominate their own classes. Here
we list every dominating vertex and ask whether balanced sets (half in X,
half in Y) ever dominate too.
"""

from collections import Counter

from kneserb import build, is_b_coloring
from kneserb.combinatorics import popcount
from kneserb.construction import HalfSplit
from kneserb.kneser import KneserParams


def kind(v, split, n):
    in_x = popcount(v & split.X)
    if in_x in (0, n):
        return "one-sided"
    if 2 * in_x == n:
        return "balanced"
    return "lopsided"


for m, n in [(10, 4), (12, 4), (14, 4), (14, 6)]:
    p = KneserParams(m, n)
    split = HalfSplit.for_ground(m)
    report = is_b_coloring(build(p), max_witnesses=None)
    tally = Counter(kind(w, split, n) for cr in report.classes for w in cr.dominating_witnesses)
    only_one_sided = sum(
        all(kind(w, split, n) == "one-sided" for w in cr.dominating_witnesses) for cr in report.classes
    )
    print(
        f"{p}: {report.color_count} classes, witnesses by kind {dict(tally)}, "
        f"classes relying on one-sided witnesses only: {only_one_sided}"
    )
