"""
Lower and upper bounds against m^n
==================================

The construction gives 2 * C(floor(m/2), n) colors; any b-coloring has at
most Delta + 1 = C(m-n, n) + 1. Both grow like m^n, so their ratios to m^n
stay in a fixed band.
"""

import numpy as np

from kneserb import bounds, exact_b_chromatic, theorem_a_formula
from kneserb.kneser import KneserParams

for n in (3, 4):
    ms = np.arange(4 * n, 61, 4)
    lows, highs = np.array([bounds(KneserParams(int(m), n)) for m in ms]).T
    print(f"n = {n}")
    print("   m   lower   upper  lower/m^n  upper/m^n")
    for m, lo, hi in zip(ms, lows, highs):
        print(f"{m:4d} {lo:7d} {hi:7d}  {lo / m**n:.5f}    {hi / m**n:.5f}")

# %%
# For n = 2 the closed form is checked against exhaustive search.
for m in (5, 6):
    result = exact_b_chromatic(KneserParams(m, 2), time_limit=60)
    print(f"KG({m},2): formula {theorem_a_formula(m)}, search {result.exact} ({result.nodes} nodes)")
