"""The general maximal-denumerant scan, for any number of generators.

Run with ``python demos/02_general_algorithm.py``.
"""
from maxdenum import NumericalSemigroup, dmax_semigroup_general, maximally_reduced_elements

S = NumericalSemigroup([7, 11, 13, 15])

# Maximally reduced elements never exceed (a1 - 1) * (a2 + ... + at).
print("scan bound N =", S.reduction_bound)
for report in maximally_reduced_elements(S):
    facts = ", ".join(str(f) for f in report.maximal_factorizations)
    print(f"{report.element:4d}; {facts}")
print("dmax(S) =", dmax_semigroup_general(S).value)

# Two generators never admit two maximal factorizations of the same element.
pairs = [(3, 5), (4, 9), (11, 17)]
print([dmax_semigroup_general(NumericalSemigroup(p)).value for p in pairs])

# Nor does N itself.
print(dmax_semigroup_general(NumericalSemigroup([1])).value)
