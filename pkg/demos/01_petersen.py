"""
The Petersen graph as KG(5, 2)
==============================

Vertices are the 2-subsets of {0, ..., 4}; two are adjacent when disjoint.
We color it properly with 3 colors, check which vertices dominate, and let
the exhaustive search confirm that 3 is also the largest b-coloring.
"""

from kneserb import (
    KneserParams,
    chromatic_number,
    exact_b_chromatic,
    extract_b_coloring,
    is_b_coloring,
    max_degree,
    neighbors,
    standard_proper_coloring,
    theorem_a_formula,
)
from kneserb.combinatorics import from_elements, to_elements

p = KneserParams(5, 2)
print(p, "has", p.num_vertices, "vertices, degree", max_degree(p))
print("neighbors of {0,1}:", [to_elements(b) for b in neighbors(from_elements([0, 1]), p)])

# %%
# The textbook coloring: class i holds sets with minimum i, the last class
# holds the sets inside {2, 3, 4}, which pairwise intersect.
c = standard_proper_coloring(p)
for label, ranks in c.classes().items():
    print(label, [to_elements(p.unrank(r)) for r in ranks])
print("colors:", c.color_count, "chromatic number:", chromatic_number(p))

# %%
# Every class of this coloring already has a dominating vertex.
report = is_b_coloring(c, max_witnesses=None)
for cr in report.classes:
    print(cr.label, "witnesses:", [to_elements(w) for w in cr.dominating_witnesses])
print("b-coloring:", report.is_b, "| extraction leaves it alone:", extract_b_coloring(c) is c)

# %%
# Exhaustive search from Delta + 1 = 4 downward.
result = exact_b_chromatic(p)
print("exact b-chromatic number:", result.exact, "after", result.nodes, "nodes")
print("closed form for n = 2:", theorem_a_formula(5))
