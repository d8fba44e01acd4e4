"""
Building a b-coloring of KG(10, 3) and KG(12, 4)
================================================

The ground set splits into X = {0..r-1} and Y = {r..2r-1}. Sets inside one
half keep themselves as color; mixed sets borrow a color on the side they
lean away from.
"""

from collections import Counter

from kneserb import build, is_b_coloring
from kneserb.combinatorics import from_elements, to_elements
from kneserb.construction import g_map, pad_to_n, rule_census
from kneserb.kneser import KneserParams


def show(c, *sets):
    for s in sets:
        print(f"  {s} -> {c[from_elements(s)]}")


# %%
# Odd n: a set with two elements in X is sent to the shifted copy in Y,
# padded with the smallest free elements of Y.
p = KneserParams(10, 3)
c = build(p)
print(p, c.construction, "colors:", c.color_count)
show(c, [0, 1, 2], [0, 1, 7], [0, 1, 5], [3, 8, 9])
print("rules used:", dict(rule_census(p)))
print("padding {5,6} inside Y to 3 elements:", to_elements(pad_to_n(from_elements([5, 6]), from_elements(range(5, 10)), 3)))

# %%
# Even n adds balanced sets. Mirror-image ones go through g_map; the others
# are settled by the smallest element where the two halves disagree.
q = KneserParams(12, 4)
d = build(q)
print(q, d.construction, "colors:", d.color_count)
show(d, [0, 1, 6, 7], [0, 1, 8, 9], [2, 3, 6, 7], [0, 7, 8, 9])
print("g_map({0,1}) in [6]:", to_elements(g_map(from_elements([0, 1]), 6, 2)))
print("rules used:", dict(rule_census(q)))

# %%
# Class sizes vary a lot; the verifier only needs one dominating vertex each.
sizes = Counter(len(ranks) for ranks in d.classes().values())
print("class size histogram:", dict(sorted(sizes.items())))
report = is_b_coloring(d)
print("proper:", report.proper, "b-coloring:", report.is_b, "bounds:", report.bound_lower, "<=", report.bound_upper)

# %%
# Odd m appends one color, {m-n, ..., m-1}, for every set containing m-1.
e = build(KneserParams(11, 3))
print("KG(11,3) colors:", e.color_count)
show(e, [8, 9, 10], [0, 4, 10], [0, 1, 2])
