"""Basic semigroups and the d_max table at a fixed multiplicity.

Run with ``python demos/04_basic_semigroups.py``.
"""
import math
from collections import defaultdict

from maxdenum import ceil_div, classify_basic, dmax_bezout, gmn_decompose, multiplicity_table

for triple in [(7, 9, 10), (7, 10, 11), (7, 8, 10), (7, 12, 13), (11, 13, 16)]:
    print(triple, classify_basic(*triple))

# All basic semigroups of multiplicity 7 with generators up to 13, grouped by value.
groups = defaultdict(list)
for row in multiplicity_table(7, 13, basic_only=True):
    groups[row.result.value].append((7, row.a2, row.a3))
for value in sorted(groups, reverse=True):
    print(value, groups[value])

# For a fixed multiplicity the largest d_max comes from m = 1, n = 2.
for a1 in (5, 8, 13):
    values = {
        (m, n): dmax_bezout(gmn_decompose(a1, a1 + m, a1 + n)).value
        for m in range(1, 10)
        for n in range(m + 1, 11)
        if math.gcd(m, n) == 1
    }
    top = max(values.values())
    winners = [mn for mn, v in values.items() if v == top]
    print(a1, "max", top, "at", winners, " ceil(a1/2) =", ceil_div(a1, 2))
